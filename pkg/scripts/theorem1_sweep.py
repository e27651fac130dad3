"""Check every Paley case below the q > (n-1)^2 threshold for clique failures.

For n in 2..5 this covers all prime powers q <= (n-1)^2; n=6 is capped at
q <= 13 by default (q = 17 needs a ~2.4e7-element field; pass --full-n6
and a sufficient --cap to include it).  An empty violation and
counterexample list supports dropping the threshold altogether.
"""

import argparse
import sys
import time
from pathlib import Path

from cayley_cliques import DEFAULT_CAP, SweepConfig, sweep
from cayley_cliques.verify import report_lines, summary_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--full-n6", action="store_true",
                    help="raise the n=6 base bound from 13 to 17")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=None, help="JSONL path (CSV lands next to it)")
    args = ap.parse_args()

    all_reports = []
    for n in range(2, args.n_max + 1):
        if n == 6:
            base_cap = 17 if args.full_n6 else 13
        else:
            base_cap = (n - 1) ** 2
        config = SweepConfig(max_order=max(base_cap**n, 9), n_min=n, n_max=n,
                             max_base=base_cap, kinds=("paley",),
                             cap=args.cap, workers=args.workers)
        t0 = time.perf_counter()
        reports = sweep(config)
        broken = [r for r in reports if r.maximal_subfield_clique and not r.maximal_clique]
        print(f"n={n} q<={base_cap}: {len(reports)} cases, "
              f"{len(broken)} non-maximal subfield cliques "
              f"[{time.perf_counter() - t0:.1f}s]")
        all_reports.extend(reports)

    if args.out is not None:
        args.out.write_text(report_lines(all_reports))
        args.out.with_suffix(".csv").write_text(summary_csv(all_reports))
        print(f"wrote {len(all_reports)} reports to {args.out}")

    violations = [r for r in all_reports if r.verdict == "VIOLATION"]
    broken = [r for r in all_reports if r.maximal_subfield_clique and not r.maximal_clique]
    print(f"total: {len(all_reports)} cases, {len(broken)} failures, "
          f"{len(violations)} violations")
    return 1 if violations or broken else 0


if __name__ == "__main__":
    sys.exit(main())
