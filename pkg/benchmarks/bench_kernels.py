#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads mirror the hot loops of the verification suite: per-graph Wiener
sums, eccentricity sweeps, and canonical-ordering searches over every
unicyclic isomorphism class on n vertices.

Usage: python benchmarks/bench_kernels.py [--n 9] [--repeat 3]
"""

import argparse
import time

from uniwiener.canon import refined_cells
from uniwiener.enumeration import enumerate_unicyclic
from uniwiener.kernels import available_backends


def time_workload(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=9, help="vertex count of the corpus")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    graphs = [g.graph for g in enumerate_unicyclic(args.n)]
    prepared = [(g.n, *g.csr(), refined_cells(g)) for g in graphs]
    print(f"corpus: {len(graphs)} unicyclic graphs on {args.n} vertices")
    print(f"backends: {', '.join(backends)}")

    workloads = {
        "transmission_sum": lambda mod: [
            mod.transmission_sum(n, indptr, indices) for n, indptr, indices, _ in prepared
        ],
        "eccentricities": lambda mod: [
            mod.eccentricities(n, indptr, indices) for n, indptr, indices, _ in prepared
        ],
        "canonical_columns": lambda mod: [
            mod.canonical_columns(n, indptr, indices, cells)
            for n, indptr, indices, cells in prepared
        ],
    }

    header = f"{'workload':<20}" + "".join(f"{name:>12}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print()
    print(header)
    print("-" * len(header))
    for name, workload in workloads.items():
        times = {b: time_workload(lambda m=mod: workload(m), args.repeat)
                 for b, mod in backends.items()}
        row = f"{name:<20}" + "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends)
        if "pure" in times and "compiled" in times:
            row += f"{times['pure'] / times['compiled']:>9.1f}x"
        print(row)

    # sanity: identical results across backends
    if len(backends) == 2:
        mods = list(backends.values())
        for name, workload in workloads.items():
            assert workload(mods[0]) == workload(mods[1]), f"{name} results differ"
        print("\nresults identical across backends")


if __name__ == "__main__":
    main()
