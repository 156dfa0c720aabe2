"""
Discrete harmonic polynomials
=============================

The stencil identity extends to polynomials on the whole plane:
4P(x,y) - P(x-1,y) - P(x+1,y) - P(x,y-1) - P(x,y+1) is again a polynomial,
of degree lower by at least two.  Polynomials it annihilates identically are
"discrete harmonic" -- a different class from the continuum-harmonic ones.
"""

from dhpoly import (
    X,
    Y,
    discrete_laplacian_poly,
    generate_basis,
    is_discrete_harmonic,
    tabulated_basis,
)

# The four possible combinations of (continuum) harmonic / discrete harmonic:
samples = [
    ("x^3 + y^3", X**3 + Y**3),                              # neither
    ("x^4 - 6x^2y^2 + y^4", X**4 - 6 * X**2 * Y**2 + Y**4),  # harmonic only
    ("x^4 - 2x^2 - 6x^2y^2 + y^4",
     X**4 - 2 * X**2 - 6 * X**2 * Y**2 + Y**4),              # discrete only
    ("xy", X * Y),                                           # both
]
for name, p in samples:
    print(f"{name:32s} stencil image: {discrete_laplacian_poly(p)}")
print()

# The kernel up to degree N has dimension 2N+1: the constant plus two
# polynomials of each exact degree.
basis = generate_basis(4)
print(f"canonical basis up to degree 4 ({len(basis)} elements):")
for p in basis:
    print(f"  degree {p.degree}: {p}")
print()

# A fixed tabulated basis up to degree 9 ships with the package.
tab = tabulated_basis()
print("tabulated basis sizes per degree:",
      {k: len(tab.of_degree(k)) for k in range(10)})
print("all tabulated elements harmonic?",
      all(is_discrete_harmonic(p) for p in tab))
