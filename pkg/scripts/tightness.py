"""Exact optima of the lower-bound constructions, next to the theorem bounds."""
import argparse
from itertools import combinations

from pshelly import oracle
from pshelly.core import pairs_covered, pairwise_intersecting
from pshelly.generators import gen_all_subsets_minus_one, gen_disjoint_blocks, gen_h0

BUDGET = oracle.OracleBudget(max_n=20, max_m=60, max_subset_size=6, time_cap=120.0)


def min_hit(h):
    return len(oracle.min_hitting_set(h, BUDGET))


def wise(h, k):
    masks = h.masks()
    for group in combinations(masks, k):
        acc = -1
        for mk in group:
            acc &= mk
        if not acc:
            return False
    return True


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()

    print("family               n   m  pairwise  pairs-covered  min-hit  min-cover")
    for k in range(2, args.max_k + 1):
        h = gen_h0(k)
        print(f"H0({k}){'':14s} {h.n:2d} {h.m:3d}  {pairwise_intersecting(h)!s:8s}  {pairs_covered(h)!s:13s}"
              f"  {min_hit(h):7d}  {len(oracle.min_cover(h, BUDGET)):9d}")
    for l in range(3, 6):
        h = gen_all_subsets_minus_one(l)
        print(f"minus-one({l}){'':8s} {h.n:2d} {h.m:3d}  {l - 1}-wise={wise(h, l - 1)!s:5s}{'':17s}{min_hit(h):3d}")
    for k in range(1, 5):
        h = gen_disjoint_blocks([2] * (k + 1))
        print(f"{k + 1} blocks{'':12s} {h.n:2d} {h.m:3d}{'':28s}{min_hit(h):3d}")


if __name__ == "__main__":
    main()
