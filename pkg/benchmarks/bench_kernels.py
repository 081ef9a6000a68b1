#!/usr/bin/env python3
"""Head-to-head benchmark of the two elimination-kernel lanes.

The hot loop of the whole package is the brute-force vertex oracle: one
exact linear solve per candidate active set (2 220 075 of them at n = 3).
This script times the compiled lane against the pure numpy lane on the same
inputs and checks that they return identical results.

    python benchmarks/bench_kernels.py           # quick: n=2 full, n=3 slice
    python benchmarks/bench_kernels.py --full    # adds the complete n=3 run
"""
import argparse
import sys
import time

from stochpoly import _kernels
from stochpoly.polytope import build_lp_polytope


def time_lane(rows, rank, backend, subset_limit=None, repeats=1):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = _kernels.basic_feasible_solutions(
            rows, rank, subset_limit=subset_limit, backend=backend
        )
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def run_case(label, n, subset_limit=None, repeats=1):
    hp = build_lp_polytope(n)
    rows, rank = hp.rows, hp.rank
    timings = {}
    results = {}
    for backend in _kernels.available_backends():
        timings[backend], results[backend] = time_lane(
            rows, rank, backend, subset_limit=subset_limit, repeats=repeats
        )
    lanes = sorted(timings)
    agree = len({tuple(results[b]) for b in lanes}) == 1
    line = f"{label:<28}"

    def fmt(seconds):
        return f"{seconds * 1000:8.3f}ms" if seconds < 0.1 else f"{seconds:9.3f}s"

    for backend in ("compiled", "pure"):
        if backend in timings:
            line += f"  {backend}: {fmt(timings[backend])}"
    if "compiled" in timings and "pure" in timings and timings["compiled"] > 0:
        line += f"  speedup: {timings['pure'] / timings['compiled']:6.1f}x"
    line += f"  solutions: {len(results[lanes[0]]):6d}  agree: {agree}"
    print(line)
    if not agree:
        print("LANE MISMATCH", file=sys.stderr)
        sys.exit(1)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true", help="run the complete n=3 sweep on both lanes (minutes)")
    args = parser.parse_args()

    print(f"available backends: {', '.join(_kernels.available_backends())}")
    if "compiled" not in _kernels.available_backends():
        print("note: compiled lane missing; timing the pure lane only")

    run_case("n=2 (8 subsets) x1000", 2, repeats=1000)
    run_case("n=3 first 100k subsets", 3, subset_limit=100_000)
    if args.full:
        run_case("n=3 all 2.2M subsets", 3)


if __name__ == "__main__":
    main()
