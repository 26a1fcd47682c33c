"""Command-line interface: analyze | bracket | verify | milnor.

Exit codes: 0 success, 2 parse/validation failure, 3 rejected by the
isolated-singularity gate, 4 verification mismatch or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohomology as ch
from .milnor import NotIsolated, check_isolated
from .poisson import PoissonStructure
from .poly import (
    NotHomogeneous,
    Poly,
    PolyParseError,
    UNIT_WEIGHTS,
    WeightSystem,
    parse_poly,
)
from .report import build_report, first_mismatch, render_text, suite_lines
from .suites import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_ISOLATED = 3
EXIT_MISMATCH = 4


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi", required=True, help="polynomial in x, y, z")
    p.add_argument("--weights", default="1,1,1", help="positive coprime weights a,b,c")


def _add_window(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonsing",
        description=(
            "Exact Poisson (co)homology of the bracket attached to a "
            "weight-homogeneous polynomial with an isolated singularity"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full pipeline with verification")
    _add_common(p_an)
    _add_window(p_an)
    p_an.add_argument("--format", choices=("json", "text"), default="json")
    p_an.add_argument("--cases", type=int, default=200,
                      help="random cases per identity family")

    p_br = sub.add_parser("bracket", help="evaluate the bracket of two polynomials")
    _add_common(p_br)
    p_br.add_argument("f", help="first argument polynomial")
    p_br.add_argument("g", help="second argument polynomial")

    p_ve = sub.add_parser("verify", help="run invariant suites")
    _add_common(p_ve)
    _add_window(p_ve)
    p_ve.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p_ve.add_argument("--cases", type=int, default=200)

    p_mi = sub.add_parser("milnor", help="gate, Milnor number and quotient basis")
    _add_common(p_mi)
    p_mi.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _structure(args) -> PoissonStructure:
    weights = WeightSystem.from_string(args.weights) if args.weights else UNIT_WEIGHTS
    phi = parse_poly(args.phi)
    return PoissonStructure(phi, weights)


def _window(args, P: PoissonStructure) -> ch.Window:
    lo, hi = ch.default_window(P)
    if args.min_degree is not None:
        lo = args.min_degree
    if args.max_degree is not None:
        hi = args.max_degree
    return (lo, hi)


def cmd_analyze(args) -> int:
    P = _structure(args)
    report, code = build_report(
        args.phi, P, window=_window(args, P), seed=args.seed, cases=args.cases
    )
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_text(report), end="")
    if code == EXIT_MISMATCH:
        print("first mismatch: %s" % first_mismatch(report), file=sys.stderr)
    return code


def cmd_bracket(args) -> int:
    P = _structure(args)
    f = parse_poly(args.f)
    g = parse_poly(args.g)
    print(P.bracket(f, g))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _structure(args)
    try:
        results = run_suite(
            P, args.suite, window=_window(args, P), seed=args.seed, cases=args.cases
        )
    except NotIsolated as exc:
        print("rejected by the gate: %s" % exc, file=sys.stderr)
        return EXIT_NOT_ISOLATED
    print(suite_lines(results), end="")
    failed = [r for r in results if not r.passed]
    if failed:
        print("first failure: %s -- %s" % (failed[0].name, failed[0].details),
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_milnor(args) -> int:
    P = _structure(args)
    try:
        data = check_isolated(P.phi, P.weights)
    except NotIsolated as exc:
        print("rejected: %s" % exc, file=sys.stderr)
        return EXIT_NOT_ISOLATED
    if args.format == "json":
        payload = {
            "mu": data.mu,
            "socle_bound": data.socle_bound,
            "graded_dims": [[i, n] for i, n in data.graded_dims],
            "basis": [
                {"monomial": str(Poly.monomial(m)), "degree": d}
                for m, d in data.basis
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("mu = %d, socle bound = %d" % (data.mu, data.socle_bound))
        print("dims: " + " ".join("%d:%d" % (i, n) for i, n in data.graded_dims))
        print("basis: " + ", ".join(
            "%s (deg %d)" % (Poly.monomial(m), d) for m, d in data.basis))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        handler = {
            "analyze": cmd_analyze,
            "bracket": cmd_bracket,
            "verify": cmd_verify,
            "milnor": cmd_milnor,
        }[args.command]
        return handler(args)
    except (PolyParseError, NotHomogeneous, ValueError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
