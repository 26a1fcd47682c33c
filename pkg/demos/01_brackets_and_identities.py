"""
The bracket attached to a polynomial
====================================

Every polynomial phi in x, y, z induces a Poisson bracket on the polynomial
algebra: the brackets of the coordinates are the partial derivatives of phi,
{x,y} = d(phi)/dz and cyclically.  phi itself is always a Casimir.
"""

from poissonsing import PoissonStructure, WeightSystem, parse_poly

# the sphere polynomial, ordinary grading
P = PoissonStructure(parse_poly("x^2+y^2+z^2"), WeightSystem((1, 1, 1)))

x, y, z = (parse_poly(v) for v in "xyz")
print("{x,y} =", P.bracket(x, y))
print("{y,z} =", P.bracket(y, z))
print("{z,x} =", P.bracket(z, x))

# phi is a Casimir: it brackets to zero with everything
print("{phi, x^3*y - z} =", P.bracket(P.phi, parse_poly("x^3*y - z")))

# the Jacobi identity holds for any phi; here with a messier triple
f, g, h = parse_poly("x*y + z^2"), parse_poly("x^2 - y*z"), parse_poly("z^3 + x")
print("jacobiator(f,g,h) =", P.jacobiator(f, g, h))

# The three coboundary operators are built from the gradient of phi.  They
# raise the weighted degree by deg(phi) - |w| and compose to zero:
v = P.delta0(parse_poly("x*y*z"))
print("delta0(x*y*z) =", v)
print("delta1(delta0(x*y*z)) =", P.delta1(v))

# weighted example: x^2 + y^3 + z^5 is homogeneous of degree 30 for the
# weights (15, 10, 6), and every operator drops the degree by one
Q = PoissonStructure(parse_poly("x^2+y^3+z^5"), WeightSystem((15, 10, 6)))
print("deg(phi) =", Q.degree, " |w| =", Q.weight_sum, " shift =", Q.coboundary_degree)
print("{y,z} =", Q.bracket(y, z))
