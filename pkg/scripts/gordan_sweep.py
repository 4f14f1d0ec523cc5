"""Sweep random weight lists and tabulate the Gordan alternative.

For each (dimension, list length) the sweep records how often a strict
separator exists, and cross-checks every answer against an exhaustive
circuit search.
"""

import argparse
import random
import sys
from collections import defaultdict
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from cxone.cones import Separator, strict_separator  # noqa: E402
from oracles import gordan_has_blocker  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200, help="lists per (dim, length) pair")
    ap.add_argument("--max-dim", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--bound", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    table = defaultdict(lambda: [0, 0])
    mismatches = 0
    for d in range(1, args.max_dim + 1):
        for k in range(1, args.max_len + 1):
            for _ in range(args.trials):
                ws = [tuple(Fraction(rng.randint(-args.bound, args.bound)) for _ in range(d)) for _ in range(k)]
                sep = isinstance(strict_separator(ws, d), Separator)
                mismatches += sep == gordan_has_blocker(ws)
                table[d, k][0] += sep
                table[d, k][1] += 1
    print("separator frequency (rows: dim, columns: number of weights)")
    print("dim " + " ".join(f"{k:>6d}" for k in range(1, args.max_len + 1)))
    for d in range(1, args.max_dim + 1):
        print(f"{d:3d} " + " ".join(f"{table[d, k][0] / table[d, k][1]:6.2f}" for k in range(1, args.max_len + 1)))
    print(f"oracle mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
