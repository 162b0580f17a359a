#!/usr/bin/env python3
"""Run the verification suite and print one summary line per case id.

Usage:
    python scripts/run_verification.py [--ids ID [ID ...]] [--json]

Exit status is 1 if any case fails.
"""

from __future__ import annotations

import argparse
import sys
import time

from tourneykit.verify import LEMMA_IDS, run_lemma


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--ids", nargs="+", choices=sorted(LEMMA_IDS), default=sorted(LEMMA_IDS)
    )
    parser.add_argument("--json", action="store_true", help="dump full reports")
    args = parser.parse_args()

    failures = 0
    for lemma_id in args.ids:
        t0 = time.monotonic()
        report = run_lemma(lemma_id)
        elapsed = time.monotonic() - t0
        status = "pass" if report.passed else "FAIL"
        print(f"{lemma_id:15s} {status:4s} {len(report.cases):4d} cases "
              f"{elapsed:7.2f}s")
        if args.json:
            print(report.to_json())
        if not report.passed:
            failures += 1
            for case in report.cases:
                if not case.passed:
                    print(f"    {case.name}: observed {case.observed}, "
                          f"required {case.required}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
