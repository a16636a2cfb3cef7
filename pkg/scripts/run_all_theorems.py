"""Sweep every congruence family at its default range and print a summary.

    python3 scripts/run_all_theorems.py [--workers 4] [--json out.json]
"""

import argparse
import json
import sys
import time

from qcong import __version__, verify
from qcong.claims import THEOREMS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--min-instances", type=int, default=verify.DEFAULT_MIN_INSTANCES)
    ap.add_argument("--json")
    args = ap.parse_args()

    everything = []
    for thm in THEOREMS:
        t0 = time.perf_counter()
        reports = verify.verify_theorem_suite(thm, min_instances=args.min_instances, workers=args.workers)
        ok = sum(r.passed for r in reports)
        print(f"{thm}: {ok}/{len(reports)} instances pass in {time.perf_counter() - t0:.2f} s")
        for r in reports:
            if not r.passed:
                print("   ", r.describe())
        everything.extend(reports)

    if args.json:
        doc = {"artifact_version": __version__, "command": "run_all_theorems",
               "reports": [r.to_dict() for r in everything]}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    return 0 if all(r.passed for r in everything) else 1


if __name__ == "__main__":
    sys.exit(main())
