#!/usr/bin/env python3
"""Wall-time growth of the full line solver as n doubles at fixed k.

Prints one line per size plus the doubling ratios; the pipeline is
polynomial, so ratios should stay far below exponential blowup.
"""

import sys
import time

from sofl.instance import generate, parse_instance
from sofl.solver import solve_csofl


def run(sizes=(20, 40, 80), k=2, seed=42, repeats=2):
    times = {}
    for n in sizes:
        inst = parse_instance(generate(seed, n, k, "csofl"))
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            pl = solve_csofl(inst.points, 0.0, k)
            best = min(best, time.perf_counter() - t0)
        times[n] = best
        print(f"n={n:4d} k={k}: {best:8.3f}s  weight={pl.total_weight:g} radius={pl.radius:.6g}")
    for a, b in zip(sizes, sizes[1:]):
        print(f"t({b})/t({a}) = {times[b] / times[a]:.1f}x")
    return times


if __name__ == "__main__":
    k = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    run(k=k)
