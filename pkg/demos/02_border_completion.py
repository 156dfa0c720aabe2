"""
Filling a border to an inner-harmonic matrix
============================================

Fix arbitrary rational values on the border of a square matrix.  Forcing the
stencil to vanish at every inner site is a linear system in the interior
unknowns whose matrix is diagonally dominant, so the filling exists and is
unique: a discrete Dirichlet problem solved exactly.
"""

from fractions import Fraction

from dhpoly import BorderSpec, build_system, complete, extract_border, is_inner_harmonic

# Border values are listed clockwise from the top-left display corner.
border = BorderSpec(4, (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, Fraction(-1, 2)))

system = build_system(4)
print("inner-site system matrix (4 on the diagonal, -1 between neighbors):")
for row in system.matrix:
    print("  ", [int(v) for v in row])
print("right-hand side from the border:", [str(v) for v in system.rhs(border)])
print()

M = complete(border)
print("completed matrix:")
for row in M.rows:
    print("  ", [str(v) for v in row])
print("inner-harmonic?", is_inner_harmonic(M))
print()

# Completion is exact and idempotent: stripping the interior and refilling
# reproduces the matrix.
print("refill reproduces it?", complete(extract_border(M)) == M)

# The all-zero border forces the all-zero matrix.
print("zero border completes to zero?", complete(BorderSpec(5, (0,) * 16)).rows == tuple((Fraction(0),) * 5 for _ in range(5)))
