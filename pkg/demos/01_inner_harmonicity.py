"""
Checking inner-harmonicity of rational matrices
===============================================

A square matrix is inner-harmonic when the five-point stencil
4*h(x,y) - h(x-1,y) - h(x+1,y) - h(x,y-1) - h(x,y+1) vanishes at every
inner site.  Matrices are read as lattice functions with the lower-left
display corner at the origin.
"""

from dhpoly import (
    RatMatrix,
    discrete_laplacian_matrix,
    is_inner_harmonic,
    matrix_to_lattice,
)

# A size-7 example with plain integer entries.  Every inner entry is exactly
# the average-of-neighbors times four, however wild the numbers look.
H = RatMatrix(
    [
        [2, 0, 0, 1, 0, 1, 2],
        [0, 2, 1, 2, 0, 2, 1],
        [1, 7, 0, 6, -4, 6, 2],
        [1, 25, -14, 26, -28, 24, 1],
        [2, 106, -107, 140, -158, 117, 2],
        [2, 504, -660, 799, -861, 600, 1],
        [1, 2568, -3836, 4577, -4685, 3143, 0],
    ]
)

print("display entry (7, 1) sits at lattice point", matrix_to_lattice(7, 1, 7))
print("display entry (1, 7) sits at lattice point", matrix_to_lattice(1, 7, 7))
print()

print("stencil values at the 5x5 inner block:")
for row in discrete_laplacian_matrix(H).rows:
    print("  ", [str(v) for v in row])
print("inner-harmonic?", is_inner_harmonic(H))
print()

# Perturb one inner entry and the property is gone.
rows = H.to_lists()
rows[3][3] += 1
print("after adding 1 to the center entry:", is_inner_harmonic(RatMatrix(rows)))
print()

# The identity matrix fails immediately: the stencil at each diagonal inner
# site evaluates to 4.
print("3x3 identity inner-harmonic?", is_inner_harmonic(RatMatrix.identity(3)))
