"""Command-line front end.

One subcommand per pipeline, canonical JSON reports (sorted keys) on
stdout, diagnostics on stderr.  Exit codes: 0 success, 2 domain error,
3 resource-cap error, 4 reproduction-check failure.
"""

import argparse
import json
import sys
import time

from . import __version__
from .cohomology import genus_profile, hyperbolicity_verdict, plurigenus
from .enumeration import EnumerationTask, enumeration_report
from .errors import ParameterError, ResourceLimitError, VerificationError
from .fixed_points import strata_report
from .geometry import (
    ProjectivePoint,
    arrangement_from_json,
    arrangement_to_json,
    fermat_model,
    fiber_over,
    in_general_position,
    point_to_json,
    random_omega_sample,
    VarietyModel,
)
from .groups import GroupParams, elem_normalize, subgroup_from_lift_rows
from .invariants import quotient_model_report
from .reproduce import run_reproduce

SCHEMA_VERSION = 1


def _emit(payload, fmt="json"):
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "toolVersion": __version__,
        **payload,
    }
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for key, value in sorted(report.items()):
            print(f"{key}: {value}")
    return 0


def _parse_int_list(text):
    return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())


def _parse_rows(text):
    return [_parse_int_list(chunk) for chunk in text.split(";") if chunk.strip()]


def _load_arrangement(args):
    if args.lam:
        with open(args.lam) as fh:
            return arrangement_from_json(json.load(fh))
    if args.seed is None:
        raise ParameterError("either --lambda or --seed is required")
    return random_omega_sample(args.seed, args.n, args.d)


def cmd_fixed_points(args):
    params = GroupParams(p=args.p, n=args.n, d=args.d)
    x = elem_normalize(_parse_int_list(args.element), params)
    return _emit({"task": {"p": args.p, "n": args.n, "d": args.d},
                  "results": strata_report(x, args.d)}, args.format)


def cmd_enumerate(args, classify=False):
    task = EnumerationTask(
        d=args.d, p=args.p, n=args.n, m=args.m,
        cap_subspaces=args.cap_subspaces, cap_elements=args.cap_elements,
    )
    payload = enumeration_report(task, classify=classify or args.classify)
    return _emit(payload, args.format)


def cmd_classify(args):
    return cmd_enumerate(args, classify=True)


def cmd_cohomology(args):
    prof = genus_profile(args.d, args.p, args.n)
    results = prof.to_json()
    if args.r is not None:
        from .cohomology import h0_twist

        results["h0"] = {"r": args.r, "value": h0_twist(args.d, args.p, args.n, args.r)}
    if args.m is not None:
        results["plurigenus"] = {"m": args.m, "value": plurigenus(args.d, args.p, args.n, args.m)}
    results["hyperbolicity"] = hyperbolicity_verdict(args.d, args.p, args.n).to_json()
    return _emit({"task": {"d": args.d, "p": args.p, "n": args.n}, "results": results},
                 args.format)


def cmd_hyperbolicity(args):
    v = hyperbolicity_verdict(args.d, args.p, args.n)
    return _emit({"task": {"d": args.d, "p": args.p, "n": args.n},
                  "results": v.to_json()}, args.format)


def cmd_arrangement(args):
    if args.lam:
        with open(args.lam) as fh:
            arr = arrangement_from_json(json.load(fh))
        results = {"generalPosition": in_general_position(arr),
                   "arrangement": arrangement_to_json(arr)}
    else:
        if args.seed is None:
            raise ParameterError("--seed required when no --lambda file is given")
        arr = random_omega_sample(args.seed, args.n, args.d)
        results = {"generalPosition": True, "arrangement": arrangement_to_json(arr)}
    return _emit({"results": results}, args.format)


def cmd_fiber(args):
    arr = _load_arrangement(args)
    model = VarietyModel(p=args.p, arrangement=arr)
    coords = [complex(c) for c in args.point.split(",")]
    y = ProjectivePoint(tuple(coords))
    points = fiber_over(y, model, cap=args.cap_elements)
    for pt in points:
        print(json.dumps({"coords": point_to_json(pt)}))
    print(json.dumps({"schemaVersion": SCHEMA_VERSION, "count": len(points)},
                     sort_keys=True), file=sys.stderr)
    return 0


def cmd_invariants(args):
    params = GroupParams(p=args.p, n=args.n, d=args.d)
    rows = _parse_rows(args.gens)
    K = subgroup_from_lift_rows(rows, params)
    model = None
    if args.lam:
        with open(args.lam) as fh:
            model = VarietyModel(p=args.p, arrangement=arrangement_from_json(json.load(fh)))
    elif args.n == args.d + 1:
        model = fermat_model(p=args.p, d=args.d)
    results = quotient_model_report(K, model=model)
    return _emit({"task": {"p": args.p, "n": args.n, "d": args.d}, "results": results},
                 args.format)


def cmd_reproduce_paper(args):
    t0 = time.perf_counter()
    all_ok, results = run_reproduce(args.filter)
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        print(f"[{status}] {r['check']}: {r['detail']} ({r['elapsed_ms']} ms)",
              file=sys.stderr)
    _emit({"results": {"checks": results, "allPassed": all_ok},
           "elapsed_ms": round((time.perf_counter() - t0) * 1000, 1)}, args.format)
    if not all_ok:
        raise VerificationError("one or more reproduction checks failed")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genfermat",
        description="Diagonal p-torsion actions on generalized Fermat varieties",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, *, d=False, p=False, n=False, m=False):
        if d:
            sp.add_argument("--d", type=int, required=True)
        if p:
            sp.add_argument("--p", type=int, required=True)
        if n:
            sp.add_argument("--n", type=int, required=True)
        if m:
            sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--cap-subspaces", type=int, default=2_000_000)
        sp.add_argument("--cap-elements", type=int, default=2 ** 20)

    sp = sub.add_parser("fixed-points", help="level sets and fixed strata of one element")
    add_common(sp, d=True, p=True, n=True)
    sp.add_argument("--element", required=True, help="comma-separated raw exponents, length n+1")
    sp.set_defaults(func=cmd_fixed_points)

    sp = sub.add_parser("enumerate", help="enumerate freely-acting subgroups")
    add_common(sp, d=True, p=True, n=True, m=True)
    sp.add_argument("--classify", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("classify", help="enumerate and classify into permutation orbits")
    add_common(sp, d=True, p=True, n=True, m=True)
    sp.add_argument("--classify", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("cohomology", help="cohomological invariants")
    add_common(sp, d=True, p=True, n=True)
    sp.add_argument("--r", type=int, default=None, help="also report one twist dimension")
    sp.add_argument("--m", type=int, default=None, help="also report one plurigenus")
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("hyperbolicity", help="algebraic-hyperbolicity verdict")
    add_common(sp, d=True, p=True, n=True)
    sp.set_defaults(func=cmd_hyperbolicity)

    sp = sub.add_parser("arrangement", help="sample or validate hyperplane data")
    add_common(sp, d=True, n=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--lambda", dest="lam", default=None, help="path to arrangement JSON")
    sp.set_defaults(func=cmd_arrangement)

    sp = sub.add_parser("fiber", help="fiber of the covering projection (JSON lines)")
    add_common(sp, d=True, p=True, n=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--lambda", dest="lam", default=None)
    sp.add_argument("--point", required=True,
                    help="comma-separated base-point coordinates (d+1 complex numbers)")
    sp.set_defaults(func=cmd_fiber)

    sp = sub.add_parser("invariants", help="invariant-monomial quotient model")
    add_common(sp, d=True, p=True, n=True)
    sp.add_argument("--gens", required=True,
                    help="semicolon-separated raw exponent vectors of length n+1")
    sp.add_argument("--lambda", dest="lam", default=None)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("reproduce-paper", help="run every golden reproduction check")
    sp.add_argument("--filter", default=None, help="only run checks whose name contains this")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_reproduce_paper)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
