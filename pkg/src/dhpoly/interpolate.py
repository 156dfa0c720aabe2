"""Discrete harmonic interpolation of inner-harmonic matrices.

The construction is telescopic: interpolate the 3x3 lower-left block exactly
from an eight-element harmonic basis, then repeatedly enlarge by one row and
column.  Each enlargement step adds a combination of four "impulse"
polynomials: discrete harmonic polynomials that vanish on the whole enlarged
lattice except one designated border site (an antisymmetric pair for the
fourth), so they patch the entries the smaller interpolant cannot match
without disturbing anything already fixed.  A plain bilinear (tensor
Lagrange) interpolator is included as a contrast: it always interpolates but
is generally not discrete harmonic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import ConstructionError, InvariantError, PreconditionError, SizeError
from .grid import RatMatrix, interpolates, is_inner_harmonic
from .poly import BiPoly, generate_basis, is_discrete_harmonic, tabulated_basis

#: Basis used for the 3x3 base case: the tabulated elements of degree <= 3
#: plus the first degree-4 element with a pure-x**4 leading term, evaluated
#: against the eight border sites.  The resulting 8x8 system is nonsingular.
_BASE_BASIS_INDICES = (0, 1, 2, 3, 4, 5, 6, 8)

#: Border sites of the 3x3 lattice, in the row order of the base-case system.
_BASE_POINTS = ((0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2))


def _base_basis():
    elements = tabulated_basis().elements
    return tuple(elements[k] for k in _BASE_BASIS_INDICES)


def interpolate_3x3(A):
    """Discrete harmonic polynomial of degree <= 4 matching a 3x3
    inner-harmonic matrix everywhere on the 3-lattice.

    The eight border values determine the basis coefficients through a fixed
    nonsingular 8x8 system; the center then matches automatically because
    both sides satisfy the stencil there.
    """
    if A.size != 3:
        raise SizeError("base-case interpolation requires a 3x3 matrix")
    if not is_inner_harmonic(A):
        raise PreconditionError("matrix is not inner-harmonic")
    basis = _base_basis()
    rows = [[p.evaluate(x, y) for p in basis] for x, y in _BASE_POINTS]
    rhs = [A.at(x, y) for x, y in _BASE_POINTS]
    coeffs = linalg.solve(rows, rhs)
    result = BiPoly.zero()
    for c, p in zip(coeffs, basis):
        if c:
            result = result + c * p
    return result


@dataclass(frozen=True)
class ImpulseSet:
    """Four discrete harmonic polynomials of degree <= 2*size that vanish on
    the whole (size+1)-lattice except designated border sites.

    With m = size, the nonzero sites are (0, m), (m, m), (m, 0), and the
    antisymmetric pair (m-1, m) / (m, m-1).  ``values`` holds the value at
    each designated site ((m-1, m) for the pair); the pair's second value is
    its negation.  All four values are nonzero.
    """

    size: int
    polys: tuple
    values: tuple


def _designated_sites(m):
    return ((0, m), (m, m), (m, 0), (m - 1, m))


def _canonical(P):
    """Scale to primitive integer coefficients, first nonzero coefficient
    (in canonical term order) positive."""
    terms = P.sorted_terms()
    if not terms:
        return P
    coeffs = [c for _, c in terms]
    prim = linalg.primitive(coeffs)
    return P * (prim[0] / coeffs[0])


def _verify_impulse(xi, m, k):
    """Value at the designated site if xi has the exact single-impulse (or
    dipole, for k = 3) pattern on the (m+1)-lattice, else None."""
    if xi.is_zero or xi.degree > 2 * m:
        return None
    if not is_discrete_harmonic(xi):
        return None
    target = _designated_sites(m)[k]
    value = xi.evaluate(*target)
    if value == 0:
        return None
    mirror = (m, m - 1) if k == 3 else None
    for x in range(m + 1):
        for y in range(m + 1):
            if (x, y) == target:
                continue
            v = xi.evaluate(x, y)
            if (x, y) == mirror:
                if v != -value:
                    return None
            elif v != 0:
                return None
    return value


def _block_border_sites(L):
    """Border of the lower-left L x L block of the enlarged lattice."""
    return tuple(
        (x, y)
        for x in range(L)
        for y in range(L)
        if x in (0, L - 1) or y in (0, L - 1)
    )


def _search_impulse(pool, constraint_sets, m, k):
    """Try each constraint set, and within it each kernel vector, until a
    combination verifies the impulse pattern."""
    for points in constraint_sets:
        rows = [[p.evaluate(x, y) for p in pool] for x, y in points]
        for vec in linalg.nullspace(rows, ncols=len(pool)):
            xi = BiPoly.zero()
            for c, p in zip(vec, pool):
                if c:
                    xi = xi + c * p
            xi = _canonical(xi)
            value = _verify_impulse(xi, m, k)
            if value is not None:
                return xi, value
    raise ConstructionError(f"no impulse polynomial found for size {m}, index {k}")


@lru_cache(maxsize=None)
def build_impulse_set(L):
    """Construct the four impulse polynomials for size parameter L >= 3.

    Each polynomial is a kernel vector of a homogeneous 4L x 4L system: zero
    on the 4L - 4 border sites of the lower-left L x L block plus four extra
    points chosen per polynomial; candidates are the 4L non-constant elements
    of the canonical harmonic basis up to degree 2L.  The first coefficient
    row of every system is zero (no candidate has a constant term), so a
    nonzero kernel always exists.  Every candidate solution is verified
    against the full impulse pattern; on failure the remaining kernel vectors
    and then two documented alternate fourth points are tried.  The third
    polynomial is the first with x and y swapped (the Laplacian is symmetric
    under the swap, and swapping moves the impulse from (0, L) to (L, 0)).

    Results are memoized per size; the cache is safe for concurrent readers.
    """
    if L < 3:
        raise SizeError("impulse polynomials need size at least 3")
    pool = tuple(p for p in generate_basis(2 * L).elements if p.degree >= 1)
    border = _block_border_sites(L)
    extras = {
        0: ((L - 1, L), (L, L), (L, 0), (L + 1, L)),
        1: ((0, L), (L - 1, L), (L, 0), (L + 1, L)),
        3: ((0, L), (L, L), (L, 0), (L + 1, L)),
    }
    alternate_fourth = ((L, L + 1), (L + 1, L - 1))

    polys = [None] * 4
    values = [None] * 4
    for k, extra in extras.items():
        constraint_sets = [border + extra]
        for alt in alternate_fourth:
            constraint_sets.append(border + extra[:3] + (alt,))
        polys[k], values[k] = _search_impulse(pool, constraint_sets, L, k)

    swapped = _canonical(polys[0].swap_xy())
    value = _verify_impulse(swapped, L, 2)
    if value is None:
        raise ConstructionError(f"swapped impulse polynomial failed verification for size {L}")
    polys[2], values[2] = swapped, value

    return ImpulseSet(size=L, polys=tuple(polys), values=tuple(values))


def extension_coefficients(chi, A, impulses):
    """Multipliers z1..z4 for the impulse polynomials in one enlargement step.

    With m = A.size - 1, the five sites a degree-h interpolant of the m x m
    block cannot be forced to match are (0, m), (m-1, m), (m, m), (m, m-1)
    and (m, 0); the stencil centered at (m-1, m-1) ties the two middle ones
    together, which is what makes four impulse polynomials enough.
    """
    m = A.size - 1
    sites = ((0, m), (m - 1, m), (m, m), (m, m - 1), (m, 0))
    want = [A.at(x, y) for x, y in sites]
    have = [chi.evaluate(x, y) for x, y in sites]
    if have[1] + have[3] != want[1] + want[3]:
        raise InvariantError("paired border mismatches are not antisymmetric")
    g = impulses.values
    return (
        (want[0] - have[0]) / g[0],
        (want[2] - have[2]) / g[1],
        (want[4] - have[4]) / g[2],
        (want[1] - have[1]) / g[3],
    )


def extend(chi, A, impulses=None):
    """Enlarge a discrete harmonic interpolant of the lower-left
    (L-1) x (L-1) block of A to one interpolating all of A.

    Adds a combination of the size-(L-1) impulse polynomials, which vanish on
    the smaller block, so nothing already matched is disturbed.  The result
    has degree <= max(2(L-1), chi's degree).
    """
    L = A.size
    if L < 4:
        raise SizeError("extension needs a matrix of size at least 4")
    if not is_inner_harmonic(A):
        raise PreconditionError("matrix is not inner-harmonic")
    if not is_discrete_harmonic(chi):
        raise PreconditionError("interpolant is not discrete harmonic")
    if not interpolates(chi, A.lower_left_minor(L - 1)):
        raise PreconditionError("interpolant does not match the lower-left block")
    if impulses is None:
        impulses = build_impulse_set(L - 1)
    elif impulses.size != L - 1:
        raise PreconditionError(f"impulse set has size {impulses.size}, need {L - 1}")

    sigma = chi
    for z, xi in zip(extension_coefficients(chi, A, impulses), impulses.polys):
        if z:
            sigma = sigma + z * xi
    return sigma


def telescopic(H):
    """Discrete harmonic polynomial of degree <= 2(L-1) interpolating an
    inner-harmonic matrix of size L >= 3.

    Starts from the 3x3 lower-left block (every intermediate block stays
    inner-harmonic) and extends one size at a time up to L.
    """
    L = H.size
    if L < 3:
        raise SizeError("interpolation needs size at least 3")
    if not is_inner_harmonic(H):
        raise PreconditionError("matrix is not inner-harmonic")
    chi = interpolate_3x3(H.lower_left_minor(3))
    for m in range(4, L + 1):
        chi = extend(chi, H.lower_left_minor(m))
    return chi


def _poly_mul_int(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def bilinear(H):
    """Tensor-product Lagrange interpolant of degree 2(L-1) on the lattice.

    Works for any matrix and always interpolates, but its stencil image is
    generally a nonzero polynomial: matching lattice values does not make a
    polynomial discrete harmonic.
    """
    L = H.size
    cardinals = []
    for u in range(L):
        num = [1]
        den = 1
        for j in range(L):
            if j != u:
                num = _poly_mul_int(num, [-j, 1])
                den *= u - j
        cardinals.append((num, den))

    terms = {}
    for u in range(L):
        for v in range(L):
            z = H.at(u, v)
            if not z:
                continue
            num_u, den_u = cardinals[u]
            num_v, den_v = cardinals[v]
            scale = z / (den_u * den_v)
            for a, cu in enumerate(num_u):
                if not cu:
                    continue
                for b, cv in enumerate(num_v):
                    if not cv:
                        continue
                    key = (a, b)
                    s = terms.get(key, Fraction(0)) + scale * cu * cv
                    if s:
                        terms[key] = s
                    else:
                        terms.pop(key, None)
    return BiPoly(terms)
