"""
Poisson cohomology of the ambient algebra
=========================================

All four cohomology spaces of (F[x,y,z], {.,.}_phi) are modules over the
Casimir algebra F[phi], described by finitely many generators indexed by a
monomial basis u_0 = 1, u_1, ... of the Jacobian quotient:

  H^0: the powers of phi;
  H^1: zero, unless deg(phi) = |w|, when the Euler field survives;
  H^2: gradients grad(u_j) and multiples u_j*grad(phi), with a finite
       extra part when some u_j has degree deg(phi) - |w|;
  H^3: free on all the u_j.

Each description is checked against kernel/image ranks of the coboundary
matrices at every degree of a window.
"""

from poissonsing import (
    PoissonStructure,
    WeightSystem,
    brute_force_dims,
    check_isolated,
    closed_form,
    default_window,
    parse_poly,
    predicted_dims,
)

P = PoissonStructure(parse_poly("x^3+y^3+z^3"), WeightSystem((1, 1, 1)))
M = check_isolated(P.phi, P.weights)
window = default_window(P)
print("phi =", P.phi, " window =", window)

for k in range(4):
    desc = closed_form(P, M, k)
    predicted = predicted_dims(desc, window)
    computed = brute_force_dims(P, k, window)
    gens = ", ".join(
        "%s (deg %d%s)" % (g.label, g.degree, "" if g.kind == "free_over_Cas" else ", one-shot")
        for g in desc.generators
    ) or "0"
    print("\nH^%d generated by: %s" % (k, gens))
    print("  predicted dims:", dict(predicted.dims))
    print("  computed dims: ", dict(computed.dims))
    print("  agree:", computed.matches(predicted))

# For the cubic the bracket class itself, grad(phi), is NOT a coboundary;
# for any phi with deg(phi) != |w| it is one.  Compare with the sphere:
S = PoissonStructure(parse_poly("x^2+y^2+z^2"), WeightSystem((1, 1, 1)))
MS = check_isolated(S.phi, S.weights)
print("\nsphere H^2 description is zero:", closed_form(S, MS, 2).zero)
