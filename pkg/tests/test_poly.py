import random
from fractions import Fraction

import pytest
import sympy

from dhpoly import (
    BiPoly,
    X,
    Y,
    discrete_laplacian_poly,
    generate_basis,
    is_discrete_harmonic,
    laplacian_monomial,
    tabulated_basis,
)
from dhpoly import linalg

from helpers import random_poly, random_rational
from reference_data import BILINEAR_INTERPOLANT


def sympy_laplacian(P):
    """Independent symbolic oracle for the stencil identity."""
    x, y = sympy.symbols("x y")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**a * y**b
        for (a, b), c in P.terms()
    )
    image = sympy.expand(
        4 * expr
        - expr.subs(x, x - 1)
        - expr.subs(x, x + 1)
        - expr.subs(y, y - 1)
        - expr.subs(y, y + 1)
    )
    poly = sympy.Poly(image, x, y) if image != 0 else None
    if poly is None:
        return BiPoly.zero()
    return BiPoly(
        {
            (int(a), int(b)): Fraction(int(c.p), int(c.q))
            for (a, b), c in zip(poly.monoms(), [sympy.Rational(v) for v in poly.coeffs()])
        }
    )


class TestBiPoly:
    def test_arithmetic_and_equality(self):
        p = (X + Y) * (X - Y)
        assert p == X**2 - Y**2
        assert p - p == BiPoly.zero()
        assert (X * Y) ** 2 == X**2 * Y**2

    def test_zero_degree_is_minus_one(self):
        assert BiPoly.zero().degree == -1
        assert BiPoly.constant(5).degree == 0
        assert (X**2 * Y).degree == 3

    def test_no_zero_terms_stored(self):
        p = X + (-1) * X
        assert not list(p.terms())

    def test_evaluate_exact(self):
        p = X**3 - 3 * X * Y**2
        assert p.evaluate(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 8) - Fraction(1, 6)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            BiPoly({(0, 0): 0.5})
        with pytest.raises(TypeError):
            X.evaluate(0.5, 1)

    def test_swap(self):
        assert (X**2 * Y).swap_xy() == X * Y**2


class TestLaplacianMonomial:
    def test_squares(self):
        assert laplacian_monomial(2, "x") == BiPoly.constant(-2)

    def test_cube(self):
        assert laplacian_monomial(3, "x") == -6 * X

    def test_linear_is_flat(self):
        assert laplacian_monomial(1, "y").is_zero
        assert laplacian_monomial(0, "x").is_zero

    @pytest.mark.parametrize("n", range(11))
    def test_matches_direct_expansion(self, n):
        # 2v^n - (v-1)^n - (v+1)^n via binomial expansion, independently
        direct = {}
        for k in range(n + 1):
            c = -sympy.binomial(n, k) * ((-1) ** (n - k) + 1)
            if c and k != n:
                direct[(k, 0)] = Fraction(int(c))
        assert laplacian_monomial(n, "x") == BiPoly(direct)


class TestDiscreteLaplacian:
    def test_quartic_harmonic_element(self):
        p = X**4 - 2 * X**2 - 6 * X**2 * Y**2 + Y**4
        assert discrete_laplacian_poly(p).is_zero

    def test_continuum_harmonic_but_not_discrete(self):
        p = X**4 - 6 * X**2 * Y**2 + Y**4
        assert discrete_laplacian_poly(p) == BiPoly.constant(-4)

    def test_bilinear_interpolant_not_flat(self):
        assert not discrete_laplacian_poly(BILINEAR_INTERPOLANT).is_zero

    def test_degree_drops_by_two(self):
        rng = random.Random(7)
        for _ in range(1000):
            p = random_poly(rng, max_degree=12, n_terms=6)
            image = discrete_laplacian_poly(p)
            assert image.degree <= max(p.degree - 2, -1)

    def test_linearity(self):
        rng = random.Random(8)
        for _ in range(50):
            p = random_poly(rng)
            q = random_poly(rng)
            a = random_rational(rng)
            b = random_rational(rng)
            assert discrete_laplacian_poly(a * p + b * q) == (
                a * discrete_laplacian_poly(p) + b * discrete_laplacian_poly(q)
            )

    def test_monomial_product_rule(self):
        for a in range(11):
            for b in range(11):
                m = BiPoly.monomial(a, b)
                expected = (
                    BiPoly.monomial(a, 0) * laplacian_monomial(b, "y")
                    + BiPoly.monomial(0, b) * laplacian_monomial(a, "x")
                )
                assert discrete_laplacian_poly(m) == expected

    def test_stencil_consistency_at_points(self):
        rng = random.Random(9)
        p = random_poly(rng, max_degree=7, n_terms=10)
        image = discrete_laplacian_poly(p)
        for _ in range(100):
            u = random_rational(rng)
            v = random_rational(rng)
            direct = (
                4 * p.evaluate(u, v)
                - p.evaluate(u - 1, v)
                - p.evaluate(u + 1, v)
                - p.evaluate(u, v - 1)
                - p.evaluate(u, v + 1)
            )
            assert image.evaluate(u, v) == direct

    def test_against_symbolic_oracle(self):
        rng = random.Random(10)
        for _ in range(20):
            p = random_poly(rng, max_degree=8, n_terms=7)
            assert discrete_laplacian_poly(p) == sympy_laplacian(p)


class TestIsDiscreteHarmonic:
    def test_xy(self):
        assert is_discrete_harmonic(X * Y)

    def test_cubes_are_not(self):
        assert not is_discrete_harmonic(X**3 + Y**3)

    def test_all_tabulated_elements(self):
        for p in tabulated_basis().elements:
            assert is_discrete_harmonic(p)


def coefficient_vectors(polys):
    monos = sorted({key for p in polys for key, _ in p.terms()})
    return [[p.coefficient(*m) for m in monos] for p in polys]


class TestGenerateBasis:
    @pytest.mark.parametrize("N", range(10))
    def test_count_and_harmonicity(self, N):
        basis = generate_basis(N)
        assert len(basis) == 2 * N + 1
        for p in basis:
            assert is_discrete_harmonic(p)

    @pytest.mark.parametrize("N", range(10))
    def test_degree_slices(self, N):
        basis = generate_basis(N)
        assert len(basis.of_degree(0)) == 1
        for k in range(1, N + 1):
            assert len(basis.of_degree(k)) == 2

    def test_linear_independence(self):
        basis = generate_basis(9)
        assert linalg.rank(coefficient_vectors(basis.elements)) == 19

    def test_degree_one(self):
        basis = generate_basis(1)
        assert basis.elements == (BiPoly.constant(1), X, Y)

    def test_degree_two_slice(self):
        slice2 = generate_basis(2).of_degree(2)
        vectors = coefficient_vectors(list(slice2) + [X * Y, X**2 - Y**2])
        assert linalg.rank(vectors) == 2

    def test_spans_tabulated(self):
        basis = generate_basis(9)
        base_vectors = coefficient_vectors(basis.elements)
        base_rank = linalg.rank(base_vectors)
        for u in tabulated_basis().elements:
            vectors = coefficient_vectors(list(basis.elements) + [u])
            assert linalg.rank(vectors) == base_rank

    def test_primitive_normalization(self):
        for p in generate_basis(6).elements:
            coeffs = [c for _, c in p.sorted_terms()]
            assert all(c.denominator == 1 for c in coeffs)
            from math import gcd
            assert gcd(*(abs(c.numerator) for c in coeffs)) == 1

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            generate_basis(-1)


class TestTabulatedBasis:
    def test_structure(self):
        basis = tabulated_basis()
        assert basis.max_degree == 9
        assert len(basis) == 19

    def test_element_zero(self):
        assert tabulated_basis().elements[0] == BiPoly.constant(1)

    def test_element_eight(self):
        expected = X**4 - 2 * X**2 - 6 * X**2 * Y**2 + Y**4
        assert tabulated_basis().elements[8] == expected

    def test_element_eleven(self):
        F = Fraction
        expected = X**5 * Y - F(10, 3) * X**3 * Y**3 - F(10, 3) * X * Y**3 + X * Y**5
        assert tabulated_basis().elements[11] == expected

    def test_degrees_graded(self):
        degs = [p.degree for p in tabulated_basis().elements]
        assert degs == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9]
