"""Sizes of maximal B_h subsets of {1, ..., n}.

Intervals are not B_{2h-1,h-1}, so maximal B_h subsets come in several
sizes; this tabulates how many of each.

    python scripts/maximal_sidon_intervals.py --h 2 --max-n 12
"""

import argparse
from collections import Counter

from sidonmat import AmbientGroup
from sidonmat.oracle import brute_maximal_independents


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--h", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        sets = brute_maximal_independents(range(1, n + 1), args.h, AmbientGroup())
        sizes = Counter(len(s) for s in sets)
        row = ", ".join(f"{k}: {v}" for k, v in sorted(sizes.items(), reverse=True))
        print(f"n={n:2d}  {row}")


if __name__ == "__main__":
    main()
