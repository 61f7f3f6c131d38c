#!/usr/bin/env python3
"""Sweep the enumeration of freely-acting subgroups over a parameter grid.

For each (d, p, n, m) cell within the subspace budget, report the number of
candidate subspaces, the number of freely-acting subgroups, and the orbit
decomposition under generator permutations.

Usage:
    python scripts/sweep_free_subgroups.py --d 2 --p 2 3 5 --max-n 7 --budget 100000
"""

import argparse
import json
import time

from genfermat.enumeration import (
    EnumerationTask,
    classify_orbits,
    enumerate_all,
    gaussian_binomial,
    necessary_bounds,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--budget", type=int, default=100_000,
                    help="skip cells with more candidate subspaces than this")
    ap.add_argument("--classify", action="store_true",
                    help="also decompose each nonempty cell into orbits")
    args = ap.parse_args()

    for p in args.p:
        for n in range(args.d + 1, args.max_n + 1):
            for m in range(1, n + 1):
                verdict = necessary_bounds(args.d, p, n, m)
                cell = {"d": args.d, "p": p, "n": n, "m": m}
                if not verdict.possibly_nonempty:
                    cell["count"] = 0
                    cell["prunedBy"] = verdict.reason
                    print(json.dumps(cell))
                    continue
                candidates = gaussian_binomial(n, n - m, p)
                if candidates > args.budget:
                    cell["skipped"] = f"{candidates} candidates over budget"
                    print(json.dumps(cell))
                    continue
                t0 = time.perf_counter()
                found = enumerate_all(EnumerationTask(d=args.d, p=p, n=n, m=m))
                cell["candidates"] = candidates
                cell["count"] = len(found)
                if args.classify and found:
                    orbits = classify_orbits(found)
                    cell["orbits"] = [o.orbit_size for o in orbits]
                cell["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 1)
                print(json.dumps(cell))


if __name__ == "__main__":
    main()
