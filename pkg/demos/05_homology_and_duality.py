"""
Poisson homology and the duality with cohomology
================================================

On the polynomial algebra the chain spaces of differential forms identify
with the multiderivation spaces (Omega^k with X^{3-k}, shifting degrees by
|w|), and under that identification the boundary is the signed coboundary.
So H_k at form degree i is H^{3-k} at derivation degree i - |w|; the
identity is verified matrix by matrix.

On the surface the four homology spaces are finite dimensional of dims
(mu, mu-1, mu, mu): two shifted copies of the Jacobian quotient at the ends,
the Euler-field multiples in the middle, and the gradients of u_1, ...,
u_{mu-1} in degree one.
"""

from poissonsing import (
    PoissonStructure,
    WeightSystem,
    check_isolated,
    default_form_window,
    duality_identity_holds,
    homology_dims,
    parse_poly,
    surface_homology_description,
    surface_homology_dims,
)

P = PoissonStructure(parse_poly("x^3+y^3+z^3"), WeightSystem((1, 1, 1)))
M = check_isolated(P.phi, P.weights)
fw = default_form_window(P)
print("phi =", P.phi, " form-degree window =", fw)

# the boundary/coboundary bridge, checked entrywise on a few degrees
print("\nboundary_k == (-1)^k * coboundary^{3-k}:")
for k in (1, 2, 3):
    ok = all(duality_identity_holds(P, k, i) for i in range(fw[0], fw[1] + 1))
    print("  k = %d across the window: %s" % (k, ok))

print("\nambient homology dims (form grading):")
for k in range(4):
    print("  H_%d:" % k, dict(homology_dims(P, k, fw).dims))

print("\nsurface homology:")
for k in range(4):
    dims = surface_homology_dims(P, k, fw)
    gens = ", ".join(g.label for g in surface_homology_description(P, M, k).generators)
    print("  H_%d (total %d) = <%s>" % (k, dims.total(), gens))
