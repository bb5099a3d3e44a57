#!/usr/bin/env python3
"""Sweep the deformation strength and record how one n-level splits.

Writes the scan as CSV and optionally plots the |m|-resolved deviation
from -1/n^2 against s = ln q.

Example:
    python scripts/splitting_scan.py --twice-j 4 --s-max 1.0 --count 101 \
        --csv splitting_j2.csv --plot splitting_j2.png
"""

import argparse
import sys

import numpy as np

from qhydrogen import SpinLabel, splitting_scan


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--twice-j", type=int, default=4,
                        help="spin as twice-j (default 4, i.e. j = 2)")
    parser.add_argument("--s-max", type=float, default=1.0)
    parser.add_argument("--count", type=int, default=101)
    parser.add_argument("--csv", type=str, default=None, help="output CSV path")
    parser.add_argument("--plot", type=str, default=None, help="output PNG path")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    if args.twice_j < 0:
        print("twice-j must be >= 0", file=sys.stderr)
        return 1
    s_values = [float(s) for s in np.linspace(-args.s_max, args.s_max, args.count)]
    rows = splitting_scan(SpinLabel(args.twice_j), s_values)

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write("s,q,twice_j,twice_abs_m,energy_ry,deviation_ry,flag\n")
            for r in rows:
                cells = [r.s, r.q, r.twice_j, r.twice_abs_m, r.energy_ry, r.deviation_ry]
                text = ",".join("" if c is None else repr(c) for c in cells)
                handle.write(f"{text},{r.flag}\n")
        print(f"wrote {len(rows)} rows to {args.csv}")

    flagged = sum(1 for r in rows if r.flag)
    if flagged:
        print(f"{flagged} flagged rows (unphysical points)", file=sys.stderr)

    if args.plot:
        try:
            import matplotlib
            matplotlib.use("Agg")
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib is not installed; skipping plot", file=sys.stderr)
            return 1
        fig, ax = plt.subplots(figsize=(6, 4))
        for tam in sorted({r.twice_abs_m for r in rows}):
            pts = [(r.s, r.deviation_ry) for r in rows
                   if r.twice_abs_m == tam and r.flag == ""]
            label = f"|m| = {tam // 2}" if tam % 2 == 0 else f"|m| = {tam}/2"
            ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label)
        n = args.twice_j + 1
        ax.set_xlabel("s = ln q")
        ax.set_ylabel(f"E - (-1/{n}^2)  [Ry]")
        ax.set_title(f"Splitting of the n = {n} level")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"wrote {args.plot}")

    if not args.csv and not args.plot:
        for r in rows[: 5 * (args.twice_j // 2 + 1)]:
            print(r)
        print(f"... {len(rows)} rows total (use --csv to keep them)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
