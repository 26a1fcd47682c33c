"""Verification suites: structural identities and degree-by-degree exactness.

Each family either replays an algebraic identity on seeded random inputs
(vector calculus identities, Jacobi, delta o delta = 0, Casimir commutation)
or checks an exactness/dimension statement on every degree of a window
(Koszul rows, de Rham columns, the 2-cocycle decomposition, the closed-form
(co)homology against the rank computations).  All checks are exact; a failed
check carries a minimal counterexample in its details.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import cohomology as ch
from . import homology as hm
from .linalg import Echelon, basis_of, rank_of_columns
from .milnor import MilnorData, check_isolated
from .operators import (
    boundary_matrix,
    cross_grad_phi_matrix,
    curl_matrix,
    delta_matrix,
    delta_rank,
    div_matrix,
    dot_grad_phi_matrix,
    grad_matrix,
    mult_grad_phi_matrix,
)
from .poisson import PoissonStructure
from .poly import Monomial, Poly, WeightSystem, monomials_of_degree, weighted_degree
from .vectorcalc import VecPoly, cross, curl, divergence, dot, euler_field, grad

SUITE_NAMES = ("identities", "koszul", "cohomology", "homology", "surface")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    details: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = " -- %s" % self.details if self.details and not self.passed else ""
        return "%s %-42s (%d cases)%s" % (status, self.name, self.cases, extra)


# ---------------------------------------------------------------------------
# Random generators
# ---------------------------------------------------------------------------


def random_poly(rng: random.Random, max_exp: int = 2, terms: int = 3) -> Poly:
    out = Poly.zero()
    for _ in range(terms):
        m: Monomial = (
            rng.randint(0, max_exp),
            rng.randint(0, max_exp),
            rng.randint(0, max_exp),
        )
        c = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
        out = out + Poly.monomial(m, c)
    return out


def random_vec(rng: random.Random, max_exp: int = 2, terms: int = 2) -> VecPoly:
    return VecPoly(
        tuple(random_poly(rng, max_exp, terms) for _ in range(3))  # type: ignore[arg-type]
    )


def random_homogeneous(rng: random.Random, w: WeightSystem, terms: int = 3) -> Poly:
    seed_monomial: Monomial = (
        rng.randint(0, 3),
        rng.randint(0, 3),
        rng.randint(0, 3),
    )
    degree = w.monomial_degree(seed_monomial)
    pool = monomials_of_degree(degree, w)
    out = Poly.zero()
    for _ in range(min(terms, len(pool))):
        out = out + Poly.monomial(rng.choice(pool), rng.choice([-3, -2, -1, 1, 2, 3]))
    if out.is_zero():
        out = Poly.monomial(seed_monomial)
    return out


# ---------------------------------------------------------------------------
# Identity families (randomized, seeded)
# ---------------------------------------------------------------------------


def _run_random_family(name, cases, rng, body) -> CheckResult:
    for n in range(cases):
        bad = body(rng)
        if bad is not None:
            return CheckResult(name, False, n + 1, bad)
    return CheckResult(name, True, cases, "")


def identities_suite(P: PoissonStructure, seed: int, cases: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    w = P.weights
    e_w = euler_field(w)
    results = []

    def curl_product(r):
        f, g = random_poly(r), random_vec(r)
        lhs = curl(g * f)
        rhs = cross(grad(f), g) + curl(g) * f
        return None if lhs == rhs else "f=%s, g=%s" % (f, g)

    def div_product(r):
        f, g = random_poly(r), random_vec(r)
        return (
            None
            if divergence(g * f) == dot(grad(f), g) + divergence(g) * f
            else "f=%s, g=%s" % (f, g)
        )

    def div_cross(r):
        f, g = random_vec(r), random_vec(r)
        lhs = divergence(cross(f, g))
        rhs = dot(curl(f), g) - dot(f, curl(g))
        return None if lhs == rhs else "f=%s, g=%s" % (f, g)

    def euler_degree(r):
        f = random_homogeneous(r, w)
        deg = weighted_degree(f, w)
        return None if dot(grad(f), e_w) == f * deg else "f=%s" % f

    def euler_div(r):
        f = random_homogeneous(r, w)
        deg = weighted_degree(f, w)
        return (
            None
            if divergence(e_w * f) == f * (deg + w.weight_sum)
            else "f=%s" % f
        )

    def curl_grad(r):
        f = random_poly(r)
        return None if curl(grad(f)).is_zero() else "f=%s" % f

    def div_cross_grads(r):
        f, g = random_poly(r), random_poly(r)
        return (
            None
            if divergence(cross(grad(f), grad(g))).is_zero()
            else "f=%s, g=%s" % (f, g)
        )

    def jacobi(r):
        f, g, h = random_poly(r), random_poly(r), random_poly(r)
        return (
            None
            if P.jacobiator(f, g, h).is_zero()
            else "f=%s, g=%s, h=%s" % (f, g, h)
        )

    def delta_squared(r):
        f, v = random_poly(r), random_vec(r)
        if not P.delta1(P.delta0(f)).is_zero():
            return "delta1 o delta0 on f=%s" % f
        if not P.delta2(P.delta1(v)).is_zero():
            return "delta2 o delta1 on v=%s" % v
        return None

    def casimir_commutes(r):
        f, v = random_poly(r), random_vec(r)
        phi = P.phi
        if P.delta0(phi * f) != P.delta0(f) * phi:
            return "k=0, f=%s" % f
        if P.delta1(v * phi) != P.delta1(v) * phi:
            return "k=1, v=%s" % v
        if P.delta2(v * phi) != P.delta2(v) * phi:
            return "k=2, v=%s" % v
        return None

    def bracket_expansion(r):
        f, g = random_poly(r), random_poly(r)
        px, py, pz = (P.phi.partial(a) for a in range(3))
        fx, fy, fz = (f.partial(a) for a in range(3))
        gx, gy, gz = (g.partial(a) for a in range(3))
        direct = (
            pz * (fx * gy - fy * gx)
            + px * (fy * gz - fz * gy)
            + py * (fz * gx - fx * gz)
        )
        return None if P.bracket(f, g) == direct else "f=%s, g=%s" % (f, g)

    families = [
        ("curl_of_scalar_product", curl_product),
        ("div_of_scalar_product", div_product),
        ("div_of_cross_product", div_cross),
        ("euler_degree_formula", euler_degree),
        ("euler_divergence_formula", euler_div),
        ("curl_of_gradient_vanishes", curl_grad),
        ("div_of_gradient_cross_vanishes", div_cross_grads),
        ("jacobi_identity", jacobi),
        ("coboundary_squared_vanishes", delta_squared),
        ("casimir_multiplication_commutes", casimir_commutes),
        ("bracket_matches_biderivation", bracket_expansion),
    ]
    for name, body in families:
        results.append(_run_random_family(name, cases, rng, body))
    return results


# ---------------------------------------------------------------------------
# Koszul / de Rham exactness (per degree)
# ---------------------------------------------------------------------------


def _second_part_witness(P: PoissonStructure, i: int) -> str:
    """A vector killed by .grad(phi) but not hit by cross-with-grad(phi)."""
    dotm = dot_grad_phi_matrix(P, i)
    image = Echelon()
    for col in cross_grad_phi_matrix(P, i - P.degree).columns:
        image.insert(col)
    for vec in dotm.kernel_basis():
        if not image.contains(vec):
            witness = dotm.source.element_from_coords(vec)
            check = dot(witness, P.nabla_phi)  # type: ignore[arg-type]
            return "witness %s at degree %d, dot with grad(phi) = %s" % (
                witness,
                i,
                check,
            )
    return "exactness defect at degree %d" % i


def koszul_suite(P: PoissonStructure, window: ch.Window) -> list[CheckResult]:
    lo, hi = window
    degrees = range(lo, hi + 1)
    w = P.weights
    s = w.weight_sum
    results = []

    def per_degree(name, body):
        count = 0
        for i in degrees:
            count += 1
            bad = body(i)
            if bad is not None:
                return CheckResult(name, False, count, bad)
        return CheckResult(name, True, count, "")

    def injective(i):
        m = mult_grad_phi_matrix(P, i)
        return None if m.rank() == m.source.dim else "kernel at degree %d" % i

    def first_exact(i):
        crossm = cross_grad_phi_matrix(P, i)
        kernel = crossm.source.dim - crossm.rank()
        image = mult_grad_phi_matrix(P, i - P.degree).rank()
        return (
            None
            if kernel == image
            else "degree %d: kernel %d vs image %d" % (i, kernel, image)
        )

    def second_exact(i):
        dotm = dot_grad_phi_matrix(P, i)
        kernel = dotm.source.dim - dotm.rank()
        image = cross_grad_phi_matrix(P, i - P.degree).rank()
        if kernel == image:
            return None
        return _second_part_witness(P, i)

    def grad_kernel(i):
        g = grad_matrix(w, i)
        expected = 1 if i == -s else 0
        return (
            None
            if g.source.dim - g.rank() == expected
            else "degree %d: constants mismatch" % i
        )

    def curl_exact(i):
        c = curl_matrix(w, i)
        kernel = c.source.dim - c.rank()
        image = grad_matrix(w, i).rank()
        return (
            None
            if kernel == image
            else "degree %d: kernel %d vs image %d" % (i, kernel, image)
        )

    def div_exact(i):
        dv = div_matrix(w, i)
        kernel = dv.source.dim - dv.rank()
        image = curl_matrix(w, i).rank()
        return (
            None
            if kernel == image
            else "degree %d: kernel %d vs image %d" % (i, kernel, image)
        )

    def div_onto(i):
        dv = div_matrix(w, i)
        return (
            None
            if dv.rank() == dv.target.dim
            else "degree %d: divergence misses a polynomial" % i
        )

    def z2_spanned(i):
        cocycles = basis_of("X2", i, w).dim - delta_rank(P, 2, i)
        gradients = grad_matrix(w, i)
        multiples = mult_grad_phi_matrix(P, i - P.degree)
        d2 = delta_matrix(P, 2, i)
        if not d2.compose(gradients).is_zero():
            return "a gradient is not a 2-cocycle at degree %d" % i
        if not d2.compose(multiples).is_zero():
            return "a grad(phi) multiple is not a 2-cocycle at degree %d" % i
        span = rank_of_columns(list(gradients.columns) + list(multiples.columns))
        return (
            None
            if span == cocycles
            else "degree %d: span %d vs cocycles %d" % (i, span, cocycles)
        )

    results.append(per_degree("koszul_multiplication_injective", injective))
    results.append(per_degree("koszul_first_exactness", first_exact))
    results.append(per_degree("koszul_second_exactness", second_exact))
    results.append(per_degree("de_rham_gradient_kernel", grad_kernel))
    results.append(per_degree("de_rham_curl_exactness", curl_exact))
    results.append(per_degree("de_rham_divergence_exactness", div_exact))
    results.append(per_degree("de_rham_divergence_onto", div_onto))
    results.append(per_degree("two_cocycles_are_gradients_plus_multiples", z2_spanned))
    return results


# ---------------------------------------------------------------------------
# Cohomology families
# ---------------------------------------------------------------------------


def cohomology_suite(
    P: PoissonStructure, M: MilnorData, window: ch.Window
) -> list[CheckResult]:
    lo, hi = window
    d, s = P.degree, P.weight_sum
    results = []

    for k in range(4):
        predicted = ch.predicted_dims(ch.closed_form(P, M, k), window)
        computed = ch.brute_force_dims(P, k, window)
        ok = computed.matches(predicted)
        details = ""
        if not ok:
            for i in range(lo, hi + 1):
                if predicted.dim_at(i) != computed.dim_at(i):
                    details = "H%d degree %d: predicted %d, computed %d" % (
                        k,
                        i,
                        predicted.dim_at(i),
                        computed.dim_at(i),
                    )
                    break
        results.append(
            CheckResult("ambient_H%d_matches_closed_form" % k, ok, hi - lo + 1, details)
        )

    def casimir_bound(i):
        cocycles = basis_of("X0", i, P.weights).dim - delta_rank(P, 0, i)
        expected = 1 if (i >= 0 and i % d == 0) else 0
        if cocycles != expected:
            return "degree %d: %d Casimir cocycles" % (i, cocycles)
        if expected and not P.delta0(P.phi ** (i // d)).is_zero():
            return "phi^%d is not a cocycle" % (i // d)
        return None

    count, bad = 0, ""
    for i in range(lo, hi + 1):
        count += 1
        bad = casimir_bound(i) or ""
        if bad:
            break
    results.append(CheckResult("casimir_cocycles_spanned_by_phi_powers", not bad, count, bad))

    # divergence rigidity: g.grad(phi)=0 and div(g)=a*phi^r force a=0
    count, bad = 0, ""
    r = 0
    while r * d <= hi:
        count += 1
        i = r * d
        dotm = dot_grad_phi_matrix(P, i)
        divm = div_matrix(P.weights, i)
        off = dotm.target.dim
        stacked = [
            {**dotm.columns[j], **{key + off: val for key, val in divm.columns[j].items()}}
            for j in range(dotm.source.dim)
        ]
        base = rank_of_columns(stacked)
        target_vec = {
            off + key: val
            for key, val in divm.target.coords_of(P.phi**r).items()
        }
        if rank_of_columns(stacked + [target_vec]) != base + 1:
            bad = "phi^%d is a constrained divergence" % r
            break
        r += 1
    results.append(CheckResult("divergence_rigidity_alpha_zero", not bad, count, bad))

    # one-form of the Euler multiples: delta1(phi^i u_j e_w) in closed form
    e_w = euler_field(P.weights)
    count, bad = 0, ""
    for j, (u, deg_u) in enumerate(M.basis_polys()):
        for i in (0, 1):
            count += 1
            lhs = P.delta1(e_w * (P.phi**i * u))
            rhs = (P.nabla_phi * (P.phi**i * u)) * (deg_u - d + s) - (
                grad(u) * (P.phi ** (i + 1))
            ) * d
            if lhs != rhs:
                bad = "u%d, power %d" % (j, i)
                break
        if bad:
            break
    results.append(CheckResult("euler_multiple_coboundary_formula", not bad, count, bad))

    # grad(phi) is a coboundary exactly when deg(phi) differs from |w|
    d1 = delta_matrix(P, 1, 0)
    target_vec = d1.target.coords_of(P.nabla_phi)
    base = d1.rank()
    exact = rank_of_columns(list(d1.columns) + [target_vec]) == base
    expected_exact = d != s
    results.append(
        CheckResult(
            "bracket_class_exact_iff_degree_differs",
            exact == expected_exact,
            1,
            "" if exact == expected_exact else "exactness of the structure class is wrong",
        )
    )
    return results


# ---------------------------------------------------------------------------
# Surface and homology families
# ---------------------------------------------------------------------------


def surface_suite(
    P: PoissonStructure, M: MilnorData, window: ch.Window
) -> list[CheckResult]:
    lo, hi = window
    results = []
    for k in range(4):
        predicted = ch.predicted_dims(ch.surface_closed_form(P, M, k), window)
        computed = ch.surface_brute_force_dims(P, k, window)
        ok = computed.matches(predicted)
        details = ""
        if not ok:
            for i in range(lo, hi + 1):
                if predicted.dim_at(i) != computed.dim_at(i):
                    details = "H%d degree %d: predicted %d, computed %d" % (
                        k,
                        i,
                        predicted.dim_at(i),
                        computed.dim_at(i),
                    )
                    break
        results.append(
            CheckResult("surface_H%d_matches_closed_form" % k, ok, hi - lo + 1, details)
        )

    count, bad = 0, ""
    for i in range(lo, hi + 1):
        count += 1
        if ch.surface_cochain_dim(P, 3, i) != 0:
            bad = "3-derivations of the surface survive at degree %d" % i
            break
    results.append(CheckResult("surface_top_derivations_vanish", not bad, count, bad))
    return results


def homology_suite(
    P: PoissonStructure, M: MilnorData, window: ch.Window
) -> list[CheckResult]:
    s = P.weight_sum
    form_window = (window[0] + s, window[1] + s)
    lo, hi = form_window
    results = []

    count, bad = 0, ""
    for k in (1, 2):
        for i in range(lo, hi + 1):
            count += 1
            outer = boundary_matrix(P, k, i + P.coboundary_degree)
            inner = boundary_matrix(P, k + 1, i)
            if not outer.compose(inner).is_zero():
                bad = "boundary squared at k=%d, form degree %d" % (k, i)
                break
        if bad:
            break
    results.append(CheckResult("boundary_squared_vanishes", not bad, count, bad))

    count, bad = 0, ""
    for k in (1, 2, 3):
        for i in range(lo, hi + 1):
            count += 1
            if not hm.duality_identity_holds(P, k, i):
                bad = "k=%d, form degree %d" % (k, i)
                break
        if bad:
            break
    results.append(CheckResult("boundary_equals_signed_coboundary", not bad, count, bad))

    for k in range(4):
        predicted = hm.predicted_homology_dims(P, M, k, form_window)
        computed = hm.homology_dims(P, k, form_window, verify=False)
        ok = computed.matches(predicted)
        results.append(
            CheckResult(
                "ambient_H_%d_matches_closed_form" % k, ok, hi - lo + 1,
                "" if ok else "dims differ",
            )
        )

    for k in range(4):
        predicted = ch.predicted_dims(hm.surface_homology_description(P, M, k), form_window)
        computed = hm.surface_homology_dims(P, k, form_window)
        ok = computed.matches(predicted)
        details = ""
        if not ok:
            for i in range(lo, hi + 1):
                if predicted.dim_at(i) != computed.dim_at(i):
                    details = "H_%d form degree %d: predicted %d, computed %d" % (
                        k, i, predicted.dim_at(i), computed.dim_at(i),
                    )
                    break
        results.append(
            CheckResult("surface_H_%d_matches_closed_form" % k, ok, hi - lo + 1, details)
        )

    computed0 = hm.surface_homology_dims(P, 0, form_window)
    milnor_dims = {i: n for i, n in M.graded_dims if lo <= i <= hi}
    ok = computed0.as_dict() == milnor_dims
    results.append(
        CheckResult(
            "surface_H_0_equals_jacobian_quotient", ok, hi - lo + 1,
            "" if ok else "dims differ from the Jacobian quotient",
        )
    )

    count, bad = 0, ""
    for k in (1, 2, 3):
        for i in range(lo, hi + 1):
            count += 1
            if not hm.projection_commutes(P, k, i):
                bad = "relations escape at k=%d, form degree %d" % (k, i)
                break
        if bad:
            break
    results.append(CheckResult("quotient_boundary_well_defined", not bad, count, bad))
    return results


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def run_suite(
    P: PoissonStructure,
    suite: str,
    window: ch.Window | None = None,
    seed: int = 0,
    cases: int = 200,
) -> list[CheckResult]:
    """Run one named suite (or 'all'); raises NotIsolated when a suite that
    needs the Milnor data is requested for a rejected phi."""
    if window is None:
        window = ch.default_window(P)
    names = SUITE_NAMES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    milnor: MilnorData | None = None
    for name in names:
        if name == "identities":
            results.extend(identities_suite(P, seed, cases))
        elif name == "koszul":
            results.extend(koszul_suite(P, window))
        else:
            if milnor is None:
                milnor = check_isolated(P.phi, P.weights)
            if name == "cohomology":
                results.extend(cohomology_suite(P, milnor, window))
            elif name == "surface":
                results.extend(surface_suite(P, milnor, window))
            elif name == "homology":
                results.extend(homology_suite(P, milnor, window))
            else:
                raise ValueError("unknown suite %r" % name)
    return results
