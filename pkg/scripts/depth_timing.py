#!/usr/bin/env python3
"""Time the determinant evaluation as circuit depth grows.

Builds rings of random square rational gates at a fixed wire width and
times evaluate() at increasing depth.  With width held constant the cost
per stack should be roughly flat, i.e. total time linear in depth.
"""

import argparse
import random
import time
from fractions import Fraction

from detcircuits import Circuit, Stack, evaluate, labeled


def ring(rng, w, depth, lo=-3, hi=3):
    fresh = iter(range(1, 10 ** 7))
    bounds = [tuple(next(fresh) for _ in range(w)) for _ in range(depth)]
    stacks, wirings = [], []
    for i in range(depth):
        rows = tuple(next(fresh) for _ in range(w))
        grid = [[Fraction(rng.randint(lo, hi)) for _ in range(w)]
                for _ in range(w)]
        stacks.append(Stack((labeled(rows, bounds[i], grid),)))
        wirings.append(tuple(zip(rows, bounds[(i + 1) % depth])))
    return Circuit(tuple(stacks), tuple(wirings))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--width", type=int, default=4)
    ap.add_argument("--depths", type=int, nargs="+",
                    default=[4, 8, 16, 32, 64])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"width {args.width}, best of {args.repeats}")
    print(f"{'depth':>6} {'time (ms)':>10} {'ms/stack':>9}")
    for depth in args.depths:
        c = ring(rng, args.width, depth)
        best = min(_timed(c) for _ in range(args.repeats))
        print(f"{depth:>6} {best * 1e3:>10.2f} {best * 1e3 / depth:>9.3f}")


def _timed(c) -> float:
    t0 = time.perf_counter()
    evaluate(c)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
