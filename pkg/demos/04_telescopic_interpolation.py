"""
Interpolating an inner-harmonic matrix by a discrete harmonic polynomial
========================================================================

Any inner-harmonic matrix of size L is the restriction of some discrete
harmonic polynomial of degree at most 2(L-1).  The construction is
telescopic: solve the 3x3 lower-left block exactly, then grow one size at a
time.  Each growth step can only disagree at five border sites, and four
"impulse" polynomials (harmonic, zero everywhere on the smaller lattice
except one designated site) absorb those mismatches.
"""

from dhpoly import (
    RatMatrix,
    build_impulse_set,
    evaluate_on_lattice,
    extension_coefficients,
    interpolate_3x3,
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

# Step 1: the lower-left 3x3 block has a degree-4 harmonic interpolant.
minor = H.lower_left_minor(3)
chi = interpolate_3x3(minor)
print("3x3 interpolant:", chi)
print()

# Step 2: restrict chi to the full 4-lattice.  Most border entries already
# match (the stencil forces them); a handful do not.
restriction = evaluate_on_lattice(chi, 4)
print("3x3 interpolant on the 4-lattice (compare against the target):")
for got, want in zip(restriction.rows, H.rows):
    marks = ["ok" if g == w else f"{g}!={w}" for g, w in zip(got, want)]
    print("  ", marks)
print()

# Step 3: the impulse polynomials patch exactly those sites.  Each one is
# discrete harmonic and vanishes on the whole 4-lattice except one site
# (a +/- pair for the fourth).
impulses = build_impulse_set(3)
print("impulse values at their designated sites:", [str(v) for v in impulses.values])
z = extension_coefficients(chi, H, impulses)
print("patch multipliers:", [str(v) for v in z])
print()

# The full pipeline does all of the above through any size.
P = telescopic(H)
print("final interpolant degree:", P.degree, "(bound: 2(L-1) = 6)")
print("interpolates the matrix exactly?", interpolates(P, H))
print("discrete harmonic?", is_discrete_harmonic(P))
print(P)
