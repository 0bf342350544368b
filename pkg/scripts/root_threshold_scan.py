"""Smallest n from which every a-derangement polynomial has a root near -t.

Each reported threshold is certified: for every n in [N, n_max] a Sturm count
proves a root within epsilon of -t, and N-1 fails (or N is the scan start).

    python scripts/root_threshold_scan.py --t 1 2 3 --epsilon 1/20 --n-max 100
"""

import argparse
import time
from fractions import Fraction

from cyclecensus.genfunc import build_polynomial
from cyclecensus.rootloc import isolate_root_near, pigeonhole_bound, threshold_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--t", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--epsilon", type=Fraction, default=Fraction(1, 20))
    ap.add_argument("--n-max", type=int, default=100)
    args = ap.parse_args()

    print("t,threshold,pigeonhole_at_threshold,witness_radius,seconds")
    for t in args.t:
        start = time.perf_counter()
        n = threshold_scan(t, args.epsilon, args.a, args.n_max)
        elapsed = time.perf_counter() - start
        if n is None:
            print(f"{t},none,,,{elapsed:.2f}")
            continue
        w = isolate_root_near(build_polynomial(args.a, n), t, args.epsilon)
        bound = pigeonhole_bound(n, t, args.a)
        print(f"{t},{n},{bound:.4g},{float(w.achieved_radius):.3e},{elapsed:.2f}")


if __name__ == "__main__":
    main()
