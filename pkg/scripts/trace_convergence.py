#!/usr/bin/env python3
"""Dump the partial-sum trace of one identity to CSV for plotting.

Example:
    python scripts/trace_convergence.py --identity fib-lucas-neg --digits 30 \
        --out fib_neg_trace.csv
"""

import argparse
import sys

from dilogid.harness import RunConfig, run_identity, write_trace_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--identity", default="fib-lucas-neg")
    parser.add_argument("--digits", type=int, default=30)
    parser.add_argument("--max-terms", type=int, default=10000)
    parser.add_argument("--out", default="trace.csv")
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                        help="identity parameter, e.g. --param P=1 --param Q=-1")
    args = parser.parse_args()

    params = dict(item.split("=", 1) for item in args.param)
    config = RunConfig(args.identity, params, args.digits, args.max_terms)
    rows = []
    report = run_identity(config, trace=rows)
    write_trace_csv(rows, args.out)
    print(f"{report.identity_id}: verdict={report.verdict} terms={report.terms_used}")
    print(f"trace with {len(rows)} rows written to {args.out}")
    return 0 if report.verdict == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
