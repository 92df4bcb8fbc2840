"""Run a Monte Carlo sweep from a JSON config and print one line per (n, alpha) cell.

    python scripts/threshold_sweep.py scripts/configs/k1_threshold.json --out-dir runs/k1 --workers 4
"""

from __future__ import annotations

import argparse
import logging
import time

from flagcollapse.experiment import ExperimentConfig, run_sweep, summarize, write_results


def fmt(x, pattern=".2f"):
    return "-" if x is None else format(x, pattern)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("config")
    ap.add_argument("--out-dir", default="runs/sweep")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--trials", type=int, help="override the config's trial count")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING)

    cfg = ExperimentConfig.from_file(args.config)
    if args.trials:
        cfg.trials = args.trials
    t0 = time.perf_counter()
    records = run_sweep(cfg, workers=args.workers)
    cells = summarize(records, cfg.k)
    write_results(records, cells, args.out_dir, cfg)

    print(f"k={cfg.k} strategy={cfg.strategy} trials/cell={cfg.trials} ({time.perf_counter() - t0:.1f}s)")
    print(f"{'n':>5} {'alpha':>6} {'p':>8} {'cond':>5} {'succ':>5} {'b_k>0':>6} {'conn':>5} {'supp':>6} {'err':>4}")
    for c in cells:
        print(
            f"{c.n:>5} {c.alpha:>6.2f} {c.p:>8.4f} {c.condition_satisfied:>5.2f} {c.collapse_success:>5.2f} "
            f"{fmt(c.betti_k_nonzero):>6} {fmt(c.connected):>5} {c.max_max_support:>6} {c.errors:>4}"
        )
        if c.theorem_violations:
            print(f"      !! {c.theorem_violations} trials satisfied the condition but did not collapse")
    print(f"results in {args.out_dir}/results.csv and summary.json")


if __name__ == "__main__":
    main()
