"""Decay of residue-class imbalance in the cycle count.

For each (a, q) prints, per n on the grid, the largest deviation of a
residue-class share from 1/q and the float bound coming from the filter
magnitudes. Output is CSV on stdout.

    python scripts/convergence_table.py --a 0 1 --q 2 3 4 --grid 10:150:20
"""

import argparse
import csv
import sys

from cyclecensus.balance import decay_series


def parse_grid(text):
    lo, hi, step = (int(x) for x in text.split(":"))
    return range(lo, hi + 1, step)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=int, nargs="+", default=[0, 1])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--grid", type=parse_grid, default=parse_grid("10:150:20"))
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["a", "q", "n", "max_deviation", "filter_bound"])
    for a in args.a:
        for q in args.q:
            series = decay_series(a, q, [n for n in args.grid if n >= a + 1])
            for n, dev, mag in series.rows():
                out.writerow([a, q, n, f"{float(dev):.6e}", f"{(q - 1) / q * mag:.6e}"])


if __name__ == "__main__":
    main()
