#!/usr/bin/env python3
"""Measure compiled-size overhead as gate width grows.

For each width w we compile looped square gates and short rings of w-wide
gates, then report the size ratio (total gadget area over source area) and
its quotient by w.  The quotient stabilizing is the point of the exercise:
compilation cost stays linear in the gate dimension.
"""

import argparse
import random
from fractions import Fraction

from detcircuits import Circuit, Stack, compile_circuit, labeled


def rand_grid(rng, r, c, lo=-5, hi=5):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(c)]
            for _ in range(r)]


def looped_gate(rng, w):
    rows = tuple(range(w + 1, 2 * w + 1))
    cols = tuple(range(1, w + 1))
    g = labeled(rows, cols, rand_grid(rng, w, w))
    return Circuit((Stack((g,)),), (tuple(zip(rows, cols)),))


def ring(rng, w, depth):
    fresh = iter(range(1, 10 ** 6))
    bounds = [tuple(next(fresh) for _ in range(w)) for _ in range(depth)]
    stacks, wirings = [], []
    for i in range(depth):
        rows = tuple(next(fresh) for _ in range(w))
        stacks.append(Stack((labeled(rows, bounds[i], rand_grid(rng, w, w)),)))
        wirings.append(tuple(zip(rows, bounds[(i + 1) % depth])))
    return Circuit(tuple(stacks), tuple(wirings))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-width", type=int, default=8)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'width':>5} {'mean ratio':>11} {'max ratio':>10} {'max/w':>6}")
    for w in range(1, args.max_width + 1):
        ratios = []
        for t in range(args.trials):
            c = looped_gate(rng, w) if t % 2 else ring(rng, w, rng.randint(2, 4))
            ratios.append(float(compile_circuit(c).size_ratio))
        mean = sum(ratios) / len(ratios)
        peak = max(ratios)
        print(f"{w:>5} {mean:>11.2f} {peak:>10.2f} {peak / w:>6.2f}")


if __name__ == "__main__":
    main()
