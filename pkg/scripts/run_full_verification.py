#!/usr/bin/env python3
"""Sweep the complete duality check suite over S_1 .. S_n.

Prints one summary row per symmetric group: permutations checked, pass
count, wall time, and the aggregated observation counters (non-minimal
transversals encountered during dualization, how many of those were
reduced pipe dreams, and antidiagonal family members reaching below the
staircase).  Exits non-zero on the first failing check.

Usage:
    python scripts/run_full_verification.py --max-n 6 --budget 600 --jobs 2
"""

import argparse
import sys

from pipedual.verification import verify_range


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--budget", type=float, default=600.0,
                        help="per-group time budget in seconds")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    header = (
        f"{'n':>2}  {'checked':>7}  {'passed':>6}  {'time':>8}  "
        f"{'nonmin':>6}  {'reduced-nonmin':>14}  {'off-staircase':>13}"
    )
    print(header)
    print("-" * len(header))
    failures = 0
    for n in range(1, args.max_n + 1):
        run = verify_range(n, budget_seconds=args.budget, jobs=args.jobs)
        nonmin = sum(
            r.stats.get("nonminimal_transversals_seen", 0) for r in run.reports
        )
        reduced_nonmin = sum(
            r.stats.get("reduced_nonminimal_transversals", 0) for r in run.reports
        )
        off_staircase = sum(
            r.stats.get("antidiagonals_off_staircase", 0) for r in run.reports
        )
        note = " (budget exhausted)" if run.exhausted else ""
        print(
            f"{n:>2}  {len(run.reports):>7}  {run.passed_count:>6}  "
            f"{run.elapsed:>7.1f}s  {nonmin:>6}  {reduced_nonmin:>14}  "
            f"{off_staircase:>13}{note}"
        )
        failures += len(run.reports) - run.passed_count
        for report in run.reports:
            if not report.passed:
                print(
                    f"   FAIL {report.permutation}: "
                    f"{', '.join(report.failed_checks())}",
                    file=sys.stderr,
                )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
