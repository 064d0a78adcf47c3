"""Command-line front end.

Three subcommands: `generate` writes named curves or point sets as JSON,
`analyze` runs the full invariant pipeline on a polynomial, and
`unexpected` tests a point set for unexpected curves.  Exit codes: 0 on
success, 2 for bad input names or parameters, 3 for a non-reduced curve,
4 for an internal diagnostic failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import arrangements, interpolation, saturation, syzygies
from .classify import classify as _classify, unexpected_by_criterion
from .errors import DiagnosticError, NonReducedCurveError
from .poly import poly_from_json, poly_to_json

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NOT_REDUCED = 3
EXIT_DIAGNOSTIC = 4

_FAMILIES = {
    "fermat": (arrangements.fermat, 3),
    "fermat_deleted": (arrangements.fermat_deleted, 3),
    "conic_family": (arrangements.conic_family, 2),
}


def _emit(data, args):
    if getattr(args, "pretty", False):
        print(json.dumps(data, indent=2))
    else:
        print(json.dumps(data))


def cmd_generate(args):
    name = args.name
    if name in _FAMILIES:
        ctor, minimum = _FAMILIES[name]
        if args.param is None or args.param < minimum:
            print(
                f"{name} needs an integer parameter >= {minimum}",
                file=sys.stderr,
            )
            return EXIT_BAD_INPUT
        obj = ctor(args.param)
        if isinstance(obj, tuple):  # fermat returns (curve, table)
            obj = obj[0]
    else:
        try:
            obj = arrangements.named(name)
        except KeyError:
            print(f"unknown name: {name}", file=sys.stderr)
            return EXIT_BAD_INPUT
    if isinstance(obj, arrangements.PointSet):
        data = obj.to_json()
    else:
        data = poly_to_json(obj)
    text = json.dumps(data, indent=2 if args.pretty else None)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def cmd_analyze(args):
    try:
        f = poly_from_json(_load_json(args.file))
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"cannot read polynomial: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    t0 = time.time()
    record = _classify(f, skip_reduced=args.skip_reduced)
    defect = saturation.n_profile(f, skip_reduced=True)
    report = {
        "input": {"degree": f.degree, "terms": len(f.terms)},
        "classification": record.to_json(),
        "defect": defect.to_json(),
        "mdr": syzygies.mdr(f),
    }
    if args.resolution:
        profile = syzygies.graded_resolution(f, skip_reduced=True)
        report["resolution"] = syzygies.render_resolution(profile)
        report["second_syzygy_degrees"] = list(profile.second_syzygy_degrees)
    report["seconds"] = round(time.time() - t0, 3)
    _emit(report, args)
    return EXIT_OK


def cmd_unexpected(args):
    try:
        Z = arrangements.PointSet.from_json(_load_json(args.file))
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"cannot read point set: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = {"points": len(Z)}
    if args.scan:
        verdict = unexpected_by_criterion(Z)
        report["criterion"] = verdict.to_json()
        confirmed = []
        if verdict.admits:
            j_min, j_max = verdict.degree_range
            for j in range(j_min, j_max + 1):
                check = interpolation.has_unexpected(
                    Z, j, j - 1, seed=args.seed
                )
                if check.admits:
                    confirmed.append(j)
                report[f"U(2,{j},{j - 1})"] = check.to_json()
        report["confirmed_degrees"] = confirmed
    else:
        if args.d is None or args.m is None:
            print("provide --d and --m, or --scan", file=sys.stderr)
            return EXIT_BAD_INPUT
        verdict = interpolation.has_unexpected(Z, args.d, args.m, seed=args.seed)
        report["verdict"] = verdict.to_json()
        if args.emit_curve:
            curve = interpolation.unexpected_curve_equation(
                Z, args.d, args.m, seed=args.seed
            )
            report["curve"] = poly_to_json(curve)
    _emit(report, args)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="planecurves",
        description="Jacobian syzygies, defects, and unexpected curves of "
        "plane curve arrangements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a named curve or point set")
    gen.add_argument("name")
    gen.add_argument("param", nargs="?", type=int, default=None)
    gen.add_argument("--output", "-o", default=None)
    gen.add_argument("--pretty", action="store_true")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="full invariant report for a curve")
    ana.add_argument("file", help="polynomial JSON file, or - for stdin")
    ana.add_argument("--resolution", action="store_true")
    ana.add_argument("--skip-reduced", action="store_true")
    ana.add_argument("--json", action="store_true", dest="json_out")
    ana.add_argument("--pretty", action="store_true")
    ana.set_defaults(func=cmd_analyze)

    unx = sub.add_parser("unexpected", help="unexpected-curve tests")
    unx.add_argument("file", help="point-set JSON file, or - for stdin")
    unx.add_argument("--d", type=int, default=None)
    unx.add_argument("--m", type=int, default=None)
    unx.add_argument("--scan", action="store_true")
    unx.add_argument("--seed", type=int, default=0)
    unx.add_argument("--emit-curve", action="store_true")
    unx.add_argument("--json", action="store_true", dest="json_out")
    unx.add_argument("--pretty", action="store_true")
    unx.set_defaults(func=cmd_unexpected)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonReducedCurveError as exc:
        print(f"not reduced: {exc}", file=sys.stderr)
        return EXIT_NOT_REDUCED
    except DiagnosticError as exc:
        print(f"diagnostic failure: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except ValueError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
