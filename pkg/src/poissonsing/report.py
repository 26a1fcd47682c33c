"""Analysis report: gate result, Milnor data, all sixteen (co)homology spaces
with predicted and computed Hilbert functions, suite summary, conventions.

Reports are plain dicts of JSON-serializable values, deterministic given the
input and the seed (suites use a seeded generator, dims are exact), so two
runs with the same flags produce byte-identical output.
"""

from __future__ import annotations

from typing import Any

from . import cohomology as ch
from . import homology as hm
from .milnor import MilnorData, NotIsolated, check_isolated
from .poisson import PoissonStructure
from .poly import Poly
from .suites import SUITE_NAMES, CheckResult, run_suite

SCHEMA_KEYS = (
    "input",
    "gate",
    "invariants_summary",
    "milnor",
    "cohomology",
    "homology",
    "conventions",
)


def _describe(desc: ch.ModuleDescription) -> dict[str, Any]:
    return {
        "coefficient_ring": desc.coefficient_ring,
        "cas_period": desc.cas_period,
        "zero": desc.zero,
        "free_rank": desc.free_rank(),
        "finite_part": desc.finite_count(),
        "generators": [
            {
                "label": g.label,
                "representative": str(g.representative),
                "degree": g.degree,
                "kind": g.kind,
            }
            for g in desc.generators
        ],
    }


def _space_entry(
    desc: ch.ModuleDescription,
    predicted: ch.GradedDims,
    computed: ch.GradedDims,
    grading: str,
) -> dict[str, Any]:
    return {
        "description": _describe(desc),
        "predicted": predicted.pairs(),
        "computed": computed.pairs(),
        "match": computed.matches(predicted),
        "window": list(predicted.window),
        "grading": grading,
    }


def _conventions(P: PoissonStructure, seed: int) -> dict[str, Any]:
    return {
        "monomial_order": "graded-lex with x > y > z, listed descending",
        "derivation_grading": (
            "X^1 components live in degrees i+w_j, X^2 in i+|w|-w_j, X^3 in i+|w|; "
            "negative degrees are allowed"
        ),
        "form_grading": (
            "Omega^k identified with X^{3-k}; form degree = derivation degree + |w| "
            "(|w| = %d here)" % P.weight_sum
        ),
        "boundary_sign": "boundary_k = (-1)^k * coboundary^{3-k} under that identification",
        "casimir_expansion": (
            "a free generator of degree e contributes one dimension at e, e+d, e+2d, ... "
            "with d = deg(phi) = %d" % P.degree
        ),
        "finiteness_certificate": (
            "gate accepts iff the Jacobian quotient vanishes on degrees "
            "(3d-2|w|, 3d-2|w|+max(w)]; vanishing there propagates upward"
        ),
        "basis_choice": (
            "u_j are monomials extending the Jacobian echelon, greedy in the fixed "
            "order; dimension data is basis-independent, representatives are not"
        ),
        "seed": seed,
    }


def gate_section(phi: Poly, P: PoissonStructure) -> tuple[dict[str, Any], MilnorData | None]:
    try:
        milnor = check_isolated(phi, P.weights)
        return {"accepted": True}, milnor
    except NotIsolated as exc:
        section: dict[str, Any] = {"accepted": False, "reason": exc.reason}
        if exc.witness_degree is not None:
            section["witness_degree"] = exc.witness_degree
        if exc.witness_monomial is not None:
            section["witness_monomial"] = str(Poly.monomial(exc.witness_monomial))
        return section, None


def milnor_section(P: PoissonStructure, M: MilnorData) -> dict[str, Any]:
    return {
        "degree": P.degree,
        "weight_sum": P.weight_sum,
        "coboundary_degree": P.coboundary_degree,
        "socle_bound": M.socle_bound,
        "mu": M.mu,
        "graded_dims": [[i, n] for i, n in M.graded_dims],
        "basis": [
            {"monomial": str(Poly.monomial(m)), "degree": d} for m, d in M.basis
        ],
    }


def build_report(
    phi_text: str,
    P: PoissonStructure,
    window: ch.Window | None = None,
    seed: int = 0,
    cases: int = 200,
) -> tuple[dict[str, Any], int]:
    """Assemble the full analysis; returns (report, exit_code)."""
    report: dict[str, Any] = {
        "input": {
            "phi": phi_text,
            "phi_canonical": str(P.phi),
            "weights": list(P.weights.weights),
            "seed": seed,
        }
    }
    gate, milnor = gate_section(P.phi, P)
    report["gate"] = gate
    report["conventions"] = _conventions(P, seed)
    if milnor is None:
        report["invariants_summary"] = {}
        report["milnor"] = None
        report["cohomology"] = None
        report["homology"] = None
        return report, 3

    if window is None:
        window = ch.default_window(P)
    s = P.weight_sum
    form_window = (window[0] + s, window[1] + s)
    report["milnor"] = milnor_section(P, milnor)

    all_match = True
    ambient: dict[str, Any] = {}
    surface: dict[str, Any] = {}
    for k in range(4):
        desc = ch.closed_form(P, milnor, k)
        entry = _space_entry(
            desc,
            ch.predicted_dims(desc, window),
            ch.brute_force_dims(P, k, window),
            "derivation",
        )
        ambient["H%d" % k] = entry
        all_match = all_match and entry["match"]

        sdesc = ch.surface_closed_form(P, milnor, k)
        sentry = _space_entry(
            sdesc,
            ch.predicted_dims(sdesc, window),
            ch.surface_brute_force_dims(P, k, window),
            "derivation",
        )
        surface["H%d" % k] = sentry
        all_match = all_match and sentry["match"]
    report["cohomology"] = {"ambient": ambient, "surface": surface}

    h_ambient: dict[str, Any] = {}
    h_surface: dict[str, Any] = {}
    for k in range(4):
        desc = hm.ambient_homology_description(P, milnor, k)
        try:
            computed = hm.homology_dims(P, k, form_window, verify=True)
            bridge_ok = True
        except RuntimeError:
            computed = hm.homology_dims(P, k, form_window, verify=False)
            bridge_ok = False
        entry = _space_entry(
            desc,
            hm.predicted_homology_dims(P, milnor, k, form_window),
            computed,
            "form",
        )
        if not bridge_ok:
            entry["match"] = False
            entry["boundary_bridge"] = "failed"
        h_ambient["H_%d" % k] = entry
        all_match = all_match and entry["match"]

        sdesc = hm.surface_homology_description(P, milnor, k)
        sentry = _space_entry(
            sdesc,
            ch.predicted_dims(sdesc, form_window),
            hm.surface_homology_dims(P, k, form_window),
            "form",
        )
        h_surface["H_%d" % k] = sentry
        all_match = all_match and sentry["match"]
    report["homology"] = {"ambient": h_ambient, "surface": h_surface}

    summary: dict[str, str] = {}
    suites_pass = True
    for suite in SUITE_NAMES:
        for res in run_suite(P, suite, window=window, seed=seed, cases=cases):
            summary[res.name] = "pass" if res.passed else "fail"
            suites_pass = suites_pass and res.passed
    report["invariants_summary"] = summary

    return report, 0 if (all_match and suites_pass) else 4


def first_mismatch(report: dict[str, Any]) -> str:
    """Name the first offending space for the exit-4 diagnostic."""
    for block_name in ("cohomology", "homology"):
        block = report.get(block_name)
        if not block:
            continue
        for side in ("ambient", "surface"):
            for space, entry in block[side].items():
                if not entry["match"]:
                    return "%s/%s/%s" % (block_name, side, space)
    for name, status in report.get("invariants_summary", {}).items():
        if status == "fail":
            return "invariant %s" % name
    return ""


def render_text(report: dict[str, Any]) -> str:
    """Plain-text rendering carrying the same numbers as the JSON."""
    lines: list[str] = []
    inp = report["input"]
    lines.append("phi = %s   weights = %s   seed = %d" % (
        inp["phi_canonical"], tuple(inp["weights"]), inp["seed"]))
    gate = report["gate"]
    if not gate["accepted"]:
        lines.append("gate: REJECTED -- %s" % gate["reason"])
        if "witness_degree" in gate:
            lines.append(
                "  witness: degree %d, monomial %s"
                % (gate["witness_degree"], gate.get("witness_monomial", "?"))
            )
        return "\n".join(lines) + "\n"
    m = report["milnor"]
    lines.append(
        "gate: accepted   mu = %d   deg(phi) = %d   |w| = %d   shift = %d   socle = %d"
        % (m["mu"], m["degree"], m["weight_sum"], m["coboundary_degree"], m["socle_bound"])
    )
    lines.append("quotient basis: " + ", ".join(
        "%s (deg %d)" % (b["monomial"], b["degree"]) for b in m["basis"]))
    for block_name, label in (("cohomology", "H^"), ("homology", "H_")):
        for side in ("ambient", "surface"):
            for space, entry in report[block_name][side].items():
                flag = "ok " if entry["match"] else "MISMATCH"
                dims = " ".join("%d:%d" % (i, n) for i, n in entry["computed"]) or "0"
                lines.append(
                    "%-10s %-8s %-5s [%s] dims %s"
                    % (space, side, flag, entry["grading"], dims)
                )
    lines.append("invariants:")
    for name, status in sorted(report["invariants_summary"].items()):
        lines.append("  %-45s %s" % (name, status))
    return "\n".join(lines) + "\n"


def suite_lines(results: list[CheckResult]) -> str:
    return "\n".join(r.line() for r in results) + "\n"
