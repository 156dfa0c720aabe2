"""Square lattice semantics: the correspondence between matrices in display
order and functions on the lattice, the five-point operator on matrices, and
the interpolation predicate.

A size-L matrix H (row 1 at the top, as printed) corresponds to the function
h on the lattice {0..L-1}^2 via h(j-1, L-i) = H[i,j]: the lower-left corner
of the display maps to the origin.  Both directions are provided and all
other operations read matrices through this correspondence.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SizeError


def _fraction(value):
    if isinstance(value, float):
        raise TypeError("float entries are not allowed; use int, str or Fraction")
    return Fraction(value)


class RatMatrix:
    """Immutable square matrix of exact rationals in display order."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        mat = tuple(tuple(_fraction(v) for v in row) for row in rows)
        if not mat:
            raise SizeError("matrix must be nonempty")
        if any(len(row) != len(mat) for row in mat):
            raise SizeError("matrix must be square")
        self._rows = mat

    @classmethod
    def zero(cls, L):
        if L < 1:
            raise SizeError("size must be positive")
        return cls([[0] * L for _ in range(L)])

    @classmethod
    def identity(cls, L):
        if L < 1:
            raise SizeError("size must be positive")
        return cls([[1 if i == j else 0 for j in range(L)] for i in range(L)])

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        """Entry at display position (i, j), 1-based from the top-left."""
        L = self.size
        if not (1 <= i <= L and 1 <= j <= L):
            raise IndexError(f"position ({i}, {j}) outside a size-{L} matrix")
        return self._rows[i - 1][j - 1]

    def at(self, x, y):
        """Value of the corresponding lattice function at (x, y)."""
        i, j = lattice_to_matrix(x, y, self.size)
        return self._rows[i - 1][j - 1]

    def lower_left_minor(self, m):
        """The m x m block in the lower-left corner of the display."""
        L = self.size
        if not (1 <= m <= L):
            raise SizeError(f"minor size {m} outside 1..{L}")
        return RatMatrix([row[:m] for row in self._rows[L - m:]])

    def to_lists(self):
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self):
        body = "; ".join(",".join(str(v) for v in row) for row in self._rows)
        return f"RatMatrix({self.size}x{self.size}: {body})"


def matrix_to_lattice(i, j, L):
    """Lattice point carrying display entry (i, j) of a size-L matrix."""
    if not (1 <= i <= L and 1 <= j <= L):
        raise IndexError(f"position ({i}, {j}) outside a size-{L} matrix")
    return (j - 1, L - i)


def lattice_to_matrix(x, y, L):
    """Display position carrying the lattice value at (x, y); inverse of
    matrix_to_lattice."""
    if not (0 <= x <= L - 1 and 0 <= y <= L - 1):
        raise IndexError(f"point ({x}, {y}) outside the size-{L} lattice")
    return (L - y, x + 1)


def discrete_laplacian_matrix(H):
    """Five-point stencil values at the inner sites, as an (L-2) x (L-2)
    matrix under the same display convention.

    The correspondence maps display neighbors to lattice neighbors, so the
    stencil can be taken directly in display coordinates.
    """
    L = H.size
    if L < 3:
        raise SizeError("the stencil needs at least one inner site (size > 2)")
    rows = H.rows
    out = []
    for i in range(1, L - 1):
        out.append(
            [
                4 * rows[i][j] - rows[i - 1][j] - rows[i + 1][j] - rows[i][j - 1] - rows[i][j + 1]
                for j in range(1, L - 1)
            ]
        )
    return RatMatrix(out)


def is_inner_harmonic(H):
    """True iff the stencil vanishes at every inner site.  Sizes below 3 have
    no inner sites and are rejected rather than vacuously accepted."""
    lap = discrete_laplacian_matrix(H)
    return all(v == 0 for row in lap.rows for v in row)


def evaluate_on_lattice(P, L):
    """Restrict a polynomial to the size-L lattice, as a matrix."""
    if L < 1:
        raise SizeError("size must be positive")
    return RatMatrix([[P.evaluate(j - 1, L - i) for j in range(1, L + 1)] for i in range(1, L + 1)])


def interpolates(P, H):
    """True iff P agrees with H at every lattice point (exact equality)."""
    return evaluate_on_lattice(P, H.size) == H
