"""
Why plain interpolation is not enough
=====================================

Tensor-product Lagrange ("bilinear") interpolation reproduces any matrix on
the lattice, but matching lattice values says nothing off the lattice: the
result is generally not discrete harmonic even when the matrix is
inner-harmonic.  That is the whole point of the harmonic construction.
"""

from dhpoly import (
    RatMatrix,
    bilinear,
    discrete_laplacian_poly,
    interpolates,
    is_discrete_harmonic,
    telescopic,
)

H = RatMatrix(
    [
        [27, 18, -9, -54],
        [8, 2, -16, -46],
        [1, -2, -11, -26],
        [-3, 0, 0, 0],
    ]
)

B = bilinear(H)
print("bilinear interpolant:", B)
print()
print("interpolates the matrix?", interpolates(B, H))
print("discrete harmonic?", is_discrete_harmonic(B))
print("its stencil image:", discrete_laplacian_poly(B))
print()

P = telescopic(H)
print("harmonic interpolant of the same matrix (degree", str(P.degree) + "):")
print("interpolates?", interpolates(P, H), "| harmonic?", is_discrete_harmonic(P))
print()

# Both polynomials take identical values on the 4-lattice yet differ as
# polynomials -- their difference vanishes on the lattice without being zero.
diff = B - P
print("difference is the zero polynomial?", diff.is_zero)
print("difference at the off-lattice point (5, 5):", diff.evaluate(5, 5))
