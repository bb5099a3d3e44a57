#!/usr/bin/env python3
"""Print how the deformation reshuffles level counts and degeneracies.

For each spin up to a maximum, compares the undeformed picture (one
level, n^2 states) with the constrained deformed one (one level per
|m|, 4j+1 or 4j+2 states), then prints the deformed level table at the
chosen q.

Example:
    python scripts/degeneracy_report.py --q 1.2 --twice-j-max 6
"""

import argparse
import sys

from qhydrogen import (
    DeformationParameter,
    SpinLabel,
    degeneracy_summary,
    enumerate_states,
    level_table,
)


def half(twice):
    return str(twice // 2) if twice % 2 == 0 else f"{twice}/2"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=float, default=1.2)
    parser.add_argument("--twice-j-max", type=int, default=6)
    args = parser.parse_args(argv)

    d = DeformationParameter(args.q)
    print(f"q = {d.q}   (s = ln q = {d.s:.6g})\n")
    print(f"{'j':>4}  {'n':>3}  {'undeformed states':>18}  {'deformed states':>16}  "
          f"{'deformed levels':>16}")
    for tj in range(args.twice_j_max + 1):
        j = SpinLabel(tj)
        undeformed = len(enumerate_states(j, "undeformed"))
        levels, states = degeneracy_summary(j)
        print(f"{half(tj):>4}  {tj + 1:>3}  {undeformed:>18}  {states:>16}  {levels:>16}")

    print("\ndeformed level table (Rydberg):")
    print(f"{'j':>4}  {'|m|':>4}  {'energy':>20}  {'mult':>4}")
    for lv in level_table(SpinLabel(args.twice_j_max), d, "deformed"):
        print(f"{half(lv.j.twice_j):>4}  {half(lv.twice_abs_m):>4}  "
              f"{lv.energy_ry:>20.15g}  {lv.multiplicity:>4}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
