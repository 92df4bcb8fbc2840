"""Search random clique complexes for overlapping flag closures at d = k+1 >= 3.

For d = 2 the closures of distinct maximal relevant subcomplexes meet in
dimension <= 1 and every shared edge is maximal in one of them. This script
measures how often that intersection bound fails for larger d, and whether
the theorem strategy then needed its greedy completion.

    python scripts/closure_overlap.py --n 14 --p 0.5 --trials 200 --k 2
"""

from __future__ import annotations

import argparse
from collections import Counter

from flagcollapse import (
    SamplerConfig,
    check_condition,
    check_intersection_bound,
    closure_partition,
    collapse_to_dim,
    derive_seed,
    sample_xnp,
    verify_certificate,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    tally = Counter()
    for t in range(args.trials):
        c = sample_xnp(SamplerConfig(args.n, args.p, derive_seed(args.seed, args.n, t)))
        bound_ok = check_intersection_bound(closure_partition(c, args.k + 1), args.k + 1).passed
        cond = check_condition(c, args.k).status
        out = collapse_to_dim(c, args.k)
        if out.success and not verify_certificate(c, out.certificate).ok:
            tally["invalid certificate"] += 1
        tally[("bound ok" if bound_ok else "bound fails", cond, out.status, out.greedy_fallback)] += 1

    print(f"n={args.n} p={args.p} k={args.k} trials={args.trials}")
    for key, count in sorted(tally.items(), key=str):
        print(f"{count:>6}  {key}")


if __name__ == "__main__":
    main()
