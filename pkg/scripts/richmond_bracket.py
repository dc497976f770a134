#!/usr/bin/env python3
"""Bracket pi^2/6 by partial sums of L(1/n^2) at increasing truncation points.

Shows how the certified bracket (partial-sum enclosure plus integral-style
tail bound) tightens roughly like log(N)/N.
"""

import time

from dilogid.enclosure import PrecisionBudget, mpf_to_fraction
from dilogid.series import catalog_verify

from mpmath import mp


def main() -> None:
    budget = PrecisionBudget.for_digits(15)
    with mp.workdps(30):
        target = mp.pi ** 2 / 6
    print(f"target pi^2/6 = {target}")
    print(f"{'N':>8} {'lower':>14} {'upper':>14} {'width':>12} {'secs':>6}")
    for n_terms in (100, 1000, 10000, 100000):
        start = time.perf_counter()
        report = catalog_verify("richmond-szekeres", budget, max_terms=n_terms)
        elapsed = time.perf_counter() - start
        lo, hi = report.lhs.endpoints()
        hi += mpf_to_fraction(report.tail_bound)
        print(
            f"{n_terms:>8} {float(lo):>14.9f} {float(hi):>14.9f} "
            f"{float(hi - lo):>12.3e} {elapsed:>6.1f}"
        )


if __name__ == "__main__":
    main()
