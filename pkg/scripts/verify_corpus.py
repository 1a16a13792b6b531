"""Run the full structural check suite over seeded B_{2h-1,h-1} instances.

    python scripts/verify_corpus.py --h 2 --count 30 --seed 1
"""

import argparse
import sys
import time
from collections import Counter

from sidonmat.generators import validated_instances
from sidonmat.oracle import verify_paper


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--h", type=int, default=2)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--max-size", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    instances = validated_instances(args.h, args.count, args.max_size, args.seed)
    tally = Counter()
    failed = 0
    for X in instances:
        rep = verify_paper(X, args.h)
        tally.update(c.status for c in rep.checks)
        if not rep.ok:
            failed += 1
            for c in rep.failures():
                print(f"FAIL {c.name} on {c.instance}: {c.counterexample}")
    print(f"{len(instances)} instances, h={args.h}: {dict(sorted(tally.items()))}, "
          f"{failed} with failures, {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
