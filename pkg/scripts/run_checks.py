#!/usr/bin/env python3
"""Run the full verification sweep plus the branch-quiver cone instance.

Usage: python scripts/run_checks.py [--max-rank N] [--box B]
"""

import argparse
import sys
import time

from stringcone.quiver import parse_quiver
from stringcone.verify import check_conjecture, run_suite

BRANCH_SPEC = "4>3,3>1,3>2"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--box", type=int, default=2)
    args = parser.parse_args()

    t0 = time.time()
    summary = run_suite(args.max_rank, args.box)
    print(f"type A sweep to rank {args.max_rank}: "
          f"{len(summary.reports)} checks, {len(summary.failures)} failures "
          f"({time.time() - t0:.1f}s)")
    for report in summary.failures:
        print(f"  FAIL {report.check} on {report.instance}: {report.witness}")

    t0 = time.time()
    report = check_conjecture(parse_quiver(BRANCH_SPEC), box=args.box)
    verdict = "PASS" if report.passed else f"FAIL witness={report.witness}"
    print(f"branch quiver {BRANCH_SPEC} {report.check}: {verdict} "
          f"({time.time() - t0:.1f}s)")

    return 0 if summary.ok and report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
