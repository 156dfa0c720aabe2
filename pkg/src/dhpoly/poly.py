"""Sparse bivariate polynomials over exact rationals and the five-point
lattice Laplacian acting on them.

The Laplacian of a polynomial P is the polynomial identity
``4P(x,y) - P(x-1,y) - P(x+1,y) - P(x,y-1) - P(x,y+1)``, computed here
term-by-term through the one-variable monomial images, so no polynomial
shifting or expansion is ever needed.  Polynomials annihilated by it are
"discrete harmonic"; the kernel restricted to degree <= N has dimension
2N + 1, with exactly two independent elements of each exact degree >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg

_ZERO = Fraction(0)


class BiPoly:
    """Polynomial in x and y with Fraction coefficients, stored sparsely.

    Immutable; all arithmetic returns new objects.  The zero polynomial
    stores no terms and reports degree -1.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term {(a, b)}")
            if isinstance(c, float):
                raise TypeError("float coefficients are not allowed")
            c = Fraction(c)
            key = (int(a), int(b))
            c = acc.get(key, _ZERO) + c
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        self._terms = acc

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a, b, coeff=1):
        return cls({(a, b): coeff})

    def terms(self):
        """Read-only view of the term map (exponent pair -> coefficient)."""
        return self._terms.items()

    def sorted_terms(self):
        """Terms in canonical order: total degree, then x-exponent, ascending."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def coefficient(self, a, b):
        return self._terms.get((a, b), _ZERO)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def leading_term(self):
        """Largest term under graded-lex order with x before y, or None."""
        if not self._terms:
            return None
        key = max(self._terms, key=lambda ab: (ab[0] + ab[1], ab[0]))
        return key, self._terms[key]

    def evaluate(self, px, py):
        """Exact value at a rational point."""
        if isinstance(px, float) or isinstance(py, float):
            raise TypeError("float arguments are not allowed")
        acc = _ZERO
        for (a, b), c in self._terms.items():
            acc += c * px**a * py**b
        return acc

    def swap_xy(self):
        return BiPoly({(b, a): c for (a, b), c in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, _ZERO) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        out = BiPoly.zero()
        out._terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly.zero()
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly.zero()
            out = BiPoly.zero()
            out._terms = {k: c * other for k, c in self._terms.items()}
            return out
        if not isinstance(other, BiPoly):
            return NotImplemented
        acc = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                s = acc.get(key, _ZERO) + c1 * c2
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        out = BiPoly.zero()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            piece = str(c)
            if a:
                piece += f"*x^{a}"
            if b:
                piece += f"*y^{b}"
            parts.append(piece)
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPoly({self})"


def _coerce(value):
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.constant(value)
    return NotImplemented


#: Generator polynomials, handy for building expressions: X**2 - Y**2 etc.
X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def laplacian_monomial(n, variable="x"):
    """Image of v^n under the lattice Laplacian, as a polynomial in v.

    Equals 2v^n - (v-1)^n - (v+1)^n: the binomial terms of matching parity
    below degree n, doubled and negated.  Zero for n in {0, 1}.
    """
    if variable not in ("x", "y"):
        raise ValueError("variable must be 'x' or 'y'")
    if n < 2:
        return BiPoly.zero()
    terms = {}
    for k in range(n - 2, -1, -2):
        key = (k, 0) if variable == "x" else (0, k)
        terms[key] = -2 * math.comb(n, k)
    return BiPoly(terms)


def discrete_laplacian_poly(P):
    """Lattice Laplacian of a polynomial, as an exact polynomial identity.

    Computed term-by-term: the image of x^a y^b is
    x^a * L(y^b) + y^b * L(x^a), which drops total degree by at least 2.
    """
    acc = {}
    for (a, b), c in P.terms():
        for (k, _), d in laplacian_monomial(a, "x").terms():
            key = (k, b)
            s = acc.get(key, _ZERO) + c * d
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        for (_, k), d in laplacian_monomial(b, "y").terms():
            key = (a, k)
            s = acc.get(key, _ZERO) + c * d
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return BiPoly(acc)


def is_discrete_harmonic(P):
    """True iff the lattice Laplacian of P is identically zero."""
    return discrete_laplacian_poly(P).is_zero


@dataclass(frozen=True)
class DHBasis:
    """Graded basis of discrete harmonic polynomials up to ``max_degree``."""

    max_degree: int
    elements: tuple

    def of_degree(self, k):
        return tuple(p for p in self.elements if p.degree == k)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _monomials_desc(N):
    """Exponent pairs of degree <= N in descending graded-lex order (x first)."""
    return [(a, total - a) for total in range(N, -1, -1) for a in range(total, -1, -1)]


def generate_basis(N):
    """Canonical basis of the discrete harmonic polynomials of degree <= N.

    The kernel of the Laplacian on degree-<=N polynomials is computed
    exactly, echelonized over the monomial coordinates (graded-lex, x before
    y), and each element is scaled to primitive integer coefficients with
    positive leading coefficient.  Returns 2N + 1 elements ordered by
    ascending degree, exactly two of each degree k >= 1.
    """
    if N < 0:
        raise ValueError("degree bound must be nonnegative")
    sources = _monomials_desc(N)
    targets = _monomials_desc(N - 2) if N >= 2 else []
    target_index = {m: i for i, m in enumerate(targets)}

    rows = [[_ZERO] * len(sources) for _ in targets]
    for col, (a, b) in enumerate(sources):
        image = discrete_laplacian_poly(BiPoly.monomial(a, b))
        for key, c in image.terms():
            rows[target_index[key]][col] = c

    kernel = linalg.nullspace(rows, ncols=len(sources))
    echelon, _ = linalg.rref(kernel, ncols=len(sources))

    elements = []
    for vec in echelon:
        vec = linalg.primitive(vec)
        poly = BiPoly({sources[i]: v for i, v in enumerate(vec) if v})
        elements.append(poly)
    # ascending degree; within a degree, descending leading monomial (x first)
    elements.sort(key=lambda p: (p.degree, -p.leading_term()[0][0]))
    return DHBasis(max_degree=N, elements=tuple(elements))


def _build_tabulated():
    F = Fraction
    x, y = X, Y
    return (
        BiPoly.constant(1),
        y,
        x,
        x * y,
        x**2 - y**2,
        -3 * x**2 * y + y**3,
        x**3 - 3 * x * y**2,
        x**3 * y - x * y**3,
        x**4 - 2 * x**2 - 6 * x**2 * y**2 + y**4,
        5 * x**4 * y - 10 * x**2 * y**3 - 10 * x**2 * y + y**5,
        x**5 - 10 * x**3 * y**2 + 5 * x * y**4 - 10 * x * y**2,
        x**5 * y - F(10, 3) * x**3 * y**3 - F(10, 3) * x * y**3 + x * y**5,
        -15 * x**4 * y**2 - 10 * x**4 + 10 * x**2 + 15 * x**2 * y**4
        + 30 * x**2 * y**2 - y**6 + x**6,
        35 * x**4 * y**3 + 70 * x**4 * y - 21 * x**2 * y**5 - 70 * x**2 * y**3
        - 70 * x**2 * y + y**7 - 7 * x**6 * y,
        -21 * x**5 * y**2 - 70 * x**3 * y**2 + 35 * x**3 * y**4 - 7 * x * y**6
        + 70 * x * y**4 - 70 * x * y**2 + x**7,
        -7 * x**5 * y**3 + 7 * x**3 * y**5 - F(70, 3) * x**3 * y**3
        - F(70, 3) * x * y**3 - x * y**7 + 14 * x * y**5 + x**7 * y,
        -140 * x**4 * y**2 + 70 * x**4 * y**4 - 140 * x**4 + 166 * x**2
        - 28 * x**2 * y**6 + 280 * x**2 * y**4 + 560 * x**2 * y**2 + y**8
        - 28 * y**6 + x**8 - 28 * x**6 * y**2,
        126 * x**5 * y**4 - 252 * x**5 * y**2 - 84 * x**3 * y**6
        - 840 * x**3 * y**2 + 840 * x**3 * y**4 + 9 * x * y**8 - 252 * x * y**6
        + 1260 * x * y**4 - 1026 * x * y**2 + x**9 - 36 * x**7 * y**2,
        840 * x**4 * y**3 + 126 * x**4 * y**5 + 1260 * x**4 * y
        - 252 * x**2 * y**5 - 36 * x**2 * y**7 - 840 * x**2 * y**3
        - 1026 * x**2 * y + y**9 + 9 * x**8 * y - 84 * x**6 * y**3
        - 252 * x**6 * y,
    )


_TABULATED = _build_tabulated()


def tabulated_basis():
    """Fixed hand-tabulated basis of discrete harmonic polynomials up to
    degree 9: one constant plus two elements of each degree 1..9."""
    return DHBasis(max_degree=9, elements=_TABULATED)
