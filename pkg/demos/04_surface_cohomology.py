"""
Poisson cohomology of the singular surface
==========================================

The bracket descends to the quotient algebra A/<phi> (functions on the
surface phi = 0).  There the Casimirs shrink to the constants, the top
cohomology vanishes, and H^1, H^2 are finite dimensional, spanned by the
classes of u_j * euler_field and u_j * grad(phi) over the basis monomials
u_j of degree deg(phi) - |w|.  In particular both vanish when
deg(phi) < |w|, and they are one-dimensional lines when deg(phi) = |w| and
u_0 = 1 is the only basis monomial in degree zero.
"""

from poissonsing import (
    PoissonStructure,
    WeightSystem,
    check_isolated,
    default_window,
    parse_poly,
    predicted_dims,
    surface_brute_force_dims,
    surface_closed_form,
)

CASES = [
    ("x^2+y^2+z^2", (1, 1, 1)),   # deg < |w|: both vanish
    ("x^3+y^3+z^3", (1, 1, 1)),   # deg = |w|: a single line each
    ("x^4+y^4+z^4", (1, 1, 1)),   # deg > |w|: u_j in {x, y, z} qualify
    ("x^2+y^3+z^6", (3, 2, 1)),   # weighted with deg = |w| = 6
]

for text, weights in CASES:
    P = PoissonStructure(parse_poly(text), WeightSystem(weights))
    M = check_isolated(P.phi, P.weights)
    window = default_window(P)
    print("\nphi = %s, weights %s, deg(phi) = %d, |w| = %d"
          % (P.phi, weights, P.degree, P.weight_sum))
    for k in range(4):
        desc = surface_closed_form(P, M, k)
        predicted = predicted_dims(desc, window)
        computed = surface_brute_force_dims(P, k, window)
        labels = ", ".join(g.label for g in desc.generators) or "0"
        print("  H^%d = <%s>   dims %s   agree: %s"
              % (k, labels, dict(computed.dims) or 0, computed.matches(predicted)))
