"""Run every identity suite at its acceptance size and print one line per identity.

    python scripts/run_acceptance.py            # text
    python scripts/run_acceptance.py --json out.json
"""

import argparse
import json
import sys
import time

from umbra import verify
from umbra.config import ACCEPTANCE_RUNS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="also write all results to this file")
    args = ap.parse_args()

    failed: set[int] = set()
    dump = []
    for run in ACCEPTANCE_RUNS:
        t0 = time.perf_counter()
        rep = verify.SUITES[run.suite](**run.params)
        for line in rep.lines():
            print(f"[{run.criterion}] {line}")
        print(f"  -- {run.label()} done in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
        if not rep.passed:
            failed.add(run.criterion)
        dump.extend({"criterion": run.criterion, **res} for res in rep.to_json())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2)
    for k in sorted({run.criterion for run in ACCEPTANCE_RUNS}):
        print(f"{'FAIL' if k in failed else 'PASS'} criterion {k}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
