"""Write a seeded corpus of conditioned random graphs as edge-list files.

    python scripts/make_corpus.py out_dir --count 50 --n-lo 6 --n-hi 14

The files feed ``pancyclic bench out_dir/*.edges --seed 0``.
"""

import argparse
from pathlib import Path

from pancyclic.generators import gnp_conditioned
from pancyclic.graph import serialize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--n-lo", type=int, default=6)
    ap.add_argument("--n-hi", type=int, default=14)
    ap.add_argument("--p", type=float, nargs="+", default=[0.6, 0.7, 0.8])
    ap.add_argument("--predicate", default="kappa>alpha")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    span = args.n_hi - args.n_lo + 1
    for i in range(args.count):
        n = args.n_lo + i % span
        p = args.p[i % len(args.p)]
        g = gnp_conditioned(n, p, args.seed + i, args.predicate)
        (args.out / f"g{i:04d}_n{n}.edges").write_text(serialize(g))
    print(f"wrote {args.count} graphs to {args.out}")


if __name__ == "__main__":
    main()
