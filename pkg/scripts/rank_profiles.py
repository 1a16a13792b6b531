"""Rank profiles rho_1 < rho_2 < ... of the B_h matroid on tower sets.

A tower starts at {1, 2, 3} and repeatedly appends h*max + 1, which keeps it
in B_{3,1} \\ B_{3,2}; read as a ground set for h = 2 it is B_{3,1}.

    python scripts/rank_profiles.py --steps 6
"""

import argparse

from sidonmat import new_matroid
from sidonmat.generators import tower


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=5)
    args = ap.parse_args()
    for steps in range(args.steps + 1):
        X = tower(3, 1, steps)
        M = new_matroid(X, 2)
        prof = M.rank_profile()
        print(f"|X|={len(X):2d}  rho={list(prof.rho)}  covering number={prof.covering_number}  basis={sorted(M.find_basis())}")


if __name__ == "__main__":
    main()
