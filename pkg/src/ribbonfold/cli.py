"""Command-line interface: ``ribbonfold {bound,plan,render,verify,sweep}``.

Exit codes: 0 success, 1 certificate or validation failure, 2 invalid input,
3 parameters describe a link (gcd(p, q) != 1).

Nothing here is random, so the RIBBONFOLD_SEED environment variable is not
read; identical arguments give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from pathlib import Path

from .braid import braid_equal, torus_decomposition_identity, twisted_torus_braid
from .geometry import assemble_layout, diagram_from_plan, render_svg, validate_layout
from .invariants import alexander_from_braid, alexander_from_diagram
from .planner import (
    Case,
    LinkError,
    ParameterError,
    build_plan,
    case_branch,
    normalize_params,
    plan_length,
    plan_report,
    ribbonlength_upper_bound,
)

EXIT_OK, EXIT_CERT, EXIT_INPUT, EXIT_LINK = 0, 1, 2, 3
ROUTE_CROSSING_LIMIT = 60


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return value


def _range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from exc
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _emit(data, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "text":
        stream.write(_as_text(data))
    else:
        stream.write(json.dumps(data, indent=2) + "\n")


def _as_text(data, indent: str = "") -> str:
    if isinstance(data, dict):
        out = ""
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v:
                out += f"{indent}{k}:\n" + _as_text(v, indent + "  ")
            else:
                out += f"{indent}{k}: {v}\n"
        return out
    if isinstance(data, list):
        out = ""
        for item in data:
            if isinstance(item, (dict, list)):
                block = _as_text(item, indent + "  ")
                out += indent + "- " + block[len(indent) + 2 :]
            else:
                out += f"{indent}- {item}\n"
        return out
    return f"{indent}{data}\n"


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def _bound_report(p: int, q: int, r: int, s: int, permissive: bool) -> dict:
    params = normalize_params(p, q, r, s, permissive=permissive)
    return {
        "params": params.to_json(),
        "case": case_branch(params).value,
        "rib_upper_bound": ribbonlength_upper_bound(p, q, r, s, permissive=permissive),
        "warnings": list(params.warnings),
    }


# -- subcommands -------------------------------------------------------------


def cmd_bound(args) -> int:
    _emit(_bound_report(args.p, args.q, args.r, args.s, args.permissive), args.format)
    return EXIT_OK


def cmd_plan(args) -> int:
    case = Case.STANDARD if args.standard else None
    plan = build_plan(args.p, args.q, args.r, args.s, w=args.width, permissive=args.permissive, case=case)
    _emit(plan_report(plan), args.format)
    return EXIT_OK


def cmd_render(args) -> int:
    plan = build_plan(args.p, args.q, args.r, args.s, w=args.width, permissive=args.permissive)
    layout = assemble_layout(plan)
    report = validate_layout(layout)
    svg = render_svg(layout)
    if args.out:
        Path(args.out).write_text(svg)
        _emit(report.to_json(), "json" if args.format == "svg" else args.format)
    else:
        sys.stdout.write(svg)
        _emit(report.to_json(), "json", sys.stderr)
    return EXIT_OK if report.passed else EXIT_CERT


def verify_certificate(p: int, q: int, r: int, s: int, permissive: bool = False) -> dict:
    """Run the four consistency checks for one parameter tuple."""
    params = normalize_params(p, q, r, s, permissive=permissive)
    P, Q, R, S = params.p, params.q, params.r, params.s
    checks: dict[str, dict] = {}

    if Q >= 2:
        left, right = torus_decomposition_identity(P, Q)
        checks["identity_check"] = {"passed": braid_equal(left, right)}
    else:
        checks["identity_check"] = {"passed": True, "skipped": "q = 1 has no torus decomposition"}

    braid = twisted_torus_braid(P, Q, R, S)
    alex = alexander_from_braid(braid)
    if Q >= 2:
        swapped = alexander_from_braid(twisted_torus_braid(Q, P, R, S))
        checks["invariant_check"] = {"passed": swapped == alex, "alexander": alex.to_json()}
    else:
        checks["invariant_check"] = {"passed": True, "skipped": "q = 1: swapped braid needs q >= 2"}

    plan = build_plan(p, q, r, s, permissive=permissive)
    diagram = diagram_from_plan(plan)
    if diagram.crossing_count <= ROUTE_CROSSING_LIMIT:
        checks["route_check"] = {
            "passed": alexander_from_diagram(diagram) == alex,
            "crossings": diagram.crossing_count,
        }
    else:
        checks["route_check"] = {
            "passed": True,
            "skipped": f"{diagram.crossing_count} crossings exceeds {ROUTE_CROSSING_LIMIT}",
        }

    bound = ribbonlength_upper_bound(p, q, r, s, permissive=permissive)
    length = plan_length(build_plan(p, q, r, s, w=1, permissive=permissive))
    checks["plan_length_check"] = {"passed": length == bound, "bound": bound, "plan_length": str(length)}
    return {
        "params": params.to_json(),
        "transforms": params.transforms.to_json(),
        **checks,
        "passed": all(c["passed"] for c in checks.values()),
    }


def cmd_verify(args) -> int:
    cert = verify_certificate(args.p, args.q, args.r, args.s, args.permissive)
    _emit(cert, args.format)
    return EXIT_OK if cert["passed"] else EXIT_CERT


def _sweep_one(item: tuple[int, int, int, int, bool]) -> dict:
    p, q, r, s, permissive = item
    try:
        return _bound_report(p, q, r, s, permissive)
    except ParameterError as exc:
        return {"params": {"p": p, "q": q, "r": r, "s": s}, "skipped": str(exc)}


def cmd_sweep(args) -> int:
    ranges = [args.range_p, args.range_q, args.range_r, args.range_s]
    items = [(*t, args.permissive) for t in sorted(product(*ranges))]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, items, chunksize=64))
    else:
        results = [_sweep_one(item) for item in items]
    _emit(results, args.format)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonfold", description="Folded ribbonlength bounds for twisted torus knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p: argparse.ArgumentParser) -> None:
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        p.add_argument("-r", type=int, required=True)
        p.add_argument("-s", type=int, required=True)

    def common(p: argparse.ArgumentParser, formats=("json", "text")) -> None:
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--permissive", action="store_true", help="allow q = 1 (result marked uncertified)")

    bound = sub.add_parser("bound", help="ribbonlength upper bound and case branch")
    params(bound)
    common(bound)
    bound.set_defaults(func=cmd_bound)

    plan = sub.add_parser("plan", help="band decomposition and fold assignment")
    params(plan)
    common(plan)
    plan.add_argument("--width", type=_fraction, default=Fraction(1))
    plan.add_argument("--standard", action="store_true", help="use the r <= p construction even when r <= p - q")
    plan.set_defaults(func=cmd_plan)

    render = sub.add_parser("render", help="SVG layout plus validation report")
    params(render)
    common(render, ("json", "text", "svg"))
    render.add_argument("--width", type=_fraction, default=Fraction(1))
    render.add_argument("--out", help="SVG path; without it the SVG goes to stdout and the report to stderr")
    render.set_defaults(func=cmd_render)

    verify = sub.add_parser("verify", help="identity, symmetry, route and length certificates")
    params(verify)
    common(verify)
    verify.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="bound reports over a parameter grid")
    for name in "pqrs":
        sweep.add_argument(f"--range-{name}", type=_range, required=True, metavar="A:B")
    common(sweep)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except LinkError as exc:
        return _fail("link", str(exc), EXIT_LINK)
    except ParameterError as exc:
        return _fail("invalid_parameters", str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
