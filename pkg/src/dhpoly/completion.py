"""Unique inner-harmonic filling of a fixed rational border.

Forcing the stencil to vanish at every inner site turns the border into the
data of a discrete Dirichlet problem.  The resulting linear system has the
block-tridiagonal matrix 4*I - H_hop, where H_hop is the nearest-neighbor
hopping (adjacency) matrix of the inner sites; it is strictly diagonally
dominant, hence nonsingular, so the completion always exists and is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import SizeError
from .grid import RatMatrix


@dataclass(frozen=True)
class BorderSpec:
    """The 4L - 4 border values of a size-L matrix, listed clockwise from the
    top-left display corner (top row left to right, right column downward,
    bottom row right to left, left column upward)."""

    size: int
    values: tuple

    def __post_init__(self):
        if self.size < 3:
            raise SizeError("border completion needs size at least 3")
        values = tuple(Fraction(v) for v in self.values)
        if any(isinstance(v, float) for v in self.values):
            raise TypeError("float border values are not allowed")
        if len(values) != 4 * self.size - 4:
            raise SizeError(
                f"expected {4 * self.size - 4} border values for size {self.size}, "
                f"got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    def __mul__(self, scalar):
        return BorderSpec(self.size, tuple(v * scalar for v in self.values))

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, BorderSpec) or other.size != self.size:
            return NotImplemented
        return BorderSpec(self.size, tuple(a + b for a, b in zip(self.values, other.values)))


def border_positions(L):
    """Display positions (i, j) of the border walk, clockwise from (1, 1)."""
    if L < 3:
        raise SizeError("border walk needs size at least 3")
    top = [(1, j) for j in range(1, L + 1)]
    right = [(i, L) for i in range(2, L)]
    corner = [(L, L)]
    bottom = [(L, j) for j in range(L - 1, 0, -1)]
    left = [(i, 1) for i in range(L - 1, 1, -1)]
    return tuple(top + right + corner + bottom + left)


def extract_border(H):
    """Border of a matrix as a BorderSpec."""
    return BorderSpec(H.size, tuple(H.entry(i, j) for i, j in border_positions(H.size)))


@dataclass(frozen=True)
class CompletionSystem:
    """Coefficient matrix of the inner-site system plus the rule assembling
    the right-hand side from a border.  Inner sites are enumerated row-major
    over the inner block, which makes the matrix block-tridiagonal with
    diagonal blocks 4*I - H_hop and off-diagonal blocks -I."""

    size: int
    sites: tuple
    matrix: tuple

    def rhs(self, border):
        """Right-hand side: at each inner site, the sum of its border
        neighbors' values (one value at edge sites, two at inner-corner
        sites, four in the degenerate single-site case)."""
        if border.size != self.size:
            raise SizeError("border size does not match the system")
        values = dict(zip(border_positions(self.size), border.values))
        out = []
        for i, j in self.sites:
            acc = Fraction(0)
            for ni, nj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                acc += values.get((ni, nj), 0)
            out.append(acc)
        return out


def build_system(L):
    """Inner-site system for size L: an (L-2)^2 square matrix with 4 on the
    diagonal and -1 between display-adjacent inner sites."""
    if L < 3:
        raise SizeError("completion needs size at least 3")
    sites = tuple((i, j) for i in range(2, L) for j in range(2, L))
    index = {site: k for k, site in enumerate(sites)}
    rows = []
    for i, j in sites:
        row = [Fraction(0)] * len(sites)
        row[index[(i, j)]] = Fraction(4)
        for neighbor in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            k = index.get(neighbor)
            if k is not None:
                row[k] = Fraction(-1)
        rows.append(tuple(row))
    return CompletionSystem(size=L, sites=sites, matrix=tuple(rows))


def complete(border):
    """The unique matrix with the given border whose stencil vanishes at
    every inner site."""
    system = build_system(border.size)
    interior = linalg.solve(system.matrix, system.rhs(border))
    L = border.size
    grid = [[None] * L for _ in range(L)]
    for (i, j), v in zip(border_positions(L), border.values):
        grid[i - 1][j - 1] = v
    for (i, j), v in zip(system.sites, interior):
        grid[i - 1][j - 1] = v
    return RatMatrix(grid)
