"""
The isolated-singularity gate and the Milnor number
===================================================

The surface phi = 0 has an isolated singularity at the origin exactly when
the quotient of the polynomial algebra by the three partial derivatives of
phi is finite dimensional.  The gate certifies this degree by degree: the
quotient of an accepted phi lives below the socle bound 3*deg(phi) - 2*|w|,
so it suffices to check one window of degrees above the bound.
"""

from poissonsing import NotIsolated, Poly, WeightSystem, check_isolated, parse_poly

w111 = WeightSystem((1, 1, 1))

# Fermat cubic: the quotient has dimension 8, with a monomial basis
data = check_isolated(parse_poly("x^3+y^3+z^3"), w111)
print("x^3+y^3+z^3: mu =", data.mu, " socle bound =", data.socle_bound)
print("  graded dims:", dict(data.graded_dims))
print("  basis:", ", ".join(str(Poly.monomial(m)) for m, _ in data.basis))

# A weighted example: degrees are weighted, the basis lives in y and z only
data = check_isolated(parse_poly("x^2+y^3+z^5"), WeightSystem((15, 10, 6)))
print("x^2+y^3+z^5 with weights (15,10,6): mu =", data.mu)
print("  basis:", ", ".join(
    "%s (deg %d)" % (Poly.monomial(m), d) for m, d in data.basis))

# x*y*z is square free but its singular locus is the three coordinate axes;
# the quotient contains every pure power, and the gate reports the first
# witness above the socle bound
try:
    check_isolated(parse_poly("x*y*z"), w111)
except NotIsolated as exc:
    print("x*y*z rejected:", exc)

# a singular line: every power of z survives in the quotient
try:
    check_isolated(parse_poly("x^2+y^2"), w111)
except NotIsolated as exc:
    print("x^2+y^2 rejected:", exc)
