"""Measure where the shortening and augmentation results land inside their windows.

    python scripts/surgery_windows.py --seeds 20

Reports, per mechanism, the mean position of the new length inside the
guaranteed window (0 = shortest end, 1 = longest end) and wall time.
"""

import argparse
import math
import statistics
import time
from fractions import Fraction

from pancyclic.generators import augment_instance, gnp
from pancyclic.graph import greedy_path
from pancyclic.invariants import independence_number, min_degree
from pancyclic.surgery import augment_path, shorten_by_degree, shorten_by_independence


def _position(value, lo, hi):
    return 1.0 if hi == lo else (value - lo) / (hi - lo)


def degree_rows(seeds, n=200, p=0.6):
    for seed in seeds:
        g = gnp(n, p, seed)
        path = greedy_path(g, 0)
        L, delta = path.num_vertices, min_degree(g)
        t = time.perf_counter()
        res = shorten_by_degree(g, path)
        lo = L - math.ceil(Fraction(20 * n, delta))
        yield _position(res.new_path.num_vertices, lo, L - 1), time.perf_counter() - t


def independence_rows(seeds, n=150, p=0.5):
    for seed in seeds:
        g = gnp(n, p, seed)
        alpha = independence_number(g).value
        path = greedy_path(g, 0)
        L = path.num_vertices
        t = time.perf_counter()
        res = shorten_by_independence(g, path, alpha)
        lo = L - math.ceil(Fraction(20 * alpha * alpha, L))
        yield _position(res.new_path.num_vertices, lo, L - 1), time.perf_counter() - t


def augment_rows(seeds):
    for seed in seeds:
        g, path, r, kappa, alpha = augment_instance(seed)
        t = time.perf_counter()
        res = augment_path(g, path, r, kappa, alpha)
        yield _position(res.new_len - res.old_len, 1, r), time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=20)
    args = ap.parse_args()
    seeds = range(args.seeds)
    for name, rows in [
        ("degree-shorten G(200,0.6)", degree_rows(seeds)),
        ("independence-shorten G(150,0.5)", independence_rows(seeds)),
        ("augment planted n=2000", augment_rows(seeds)),
    ]:
        rows = list(rows)
        pos = statistics.mean(r[0] for r in rows)
        sec = statistics.mean(r[1] for r in rows)
        print(f"{name:34s} mean window position {pos:.3f}  mean time {1000 * sec:.1f} ms")


if __name__ == "__main__":
    main()
