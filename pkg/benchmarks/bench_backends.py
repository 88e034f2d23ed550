#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the numpy fallback.

Runs the hot loops on each available backend, checks that the outputs agree
exactly, and prints a timing table. Usage:

    python benchmarks/bench_backends.py [--trials 100000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from snwalk import GeneratorSet, Partition, StatisticId, class_elements
from snwalk import kernels


def time_call(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def workloads(trials):
    gamma12 = GeneratorSet.one_fixed_point(12)
    types12 = tuple(tuple(t) for t in gamma12.types)
    gens6 = np.array(
        [[x - 1 for x in pi] for pi in class_elements(Partition((2, 1, 1, 1, 1)))],
        dtype=np.int32,
    )
    perms12 = None

    def walk():
        return kernels.walk_products(12, types12, gamma12.sizes, 6, trials, seed=2025)

    def stats():
        return kernels.stat_values(perms12, StatisticId("inv"))

    def sample():
        return kernels.sample_class_perms(10, (5, 3, 2), trials, seed=7, stream=0)

    def enumerate_tuples():
        return kernels.tuple_product_counts(6, gens6, 5)

    perms12 = walk()
    return [
        ("walk_products n=12 t=6", walk),
        ("stat_values inv n=12", stats),
        ("sample_class_perms n=10", sample),
        ("tuple_product_counts 15^5", enumerate_tuples),
    ]


def equal_outputs(a, b):
    if isinstance(a, dict):
        return a == b
    return bool((np.asarray(a) == np.asarray(b)).all())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(kernels.available_backends())
    print(f"backends: {backends}   trials: {args.trials}\n")
    header = f"{'kernel':<28}" + "".join(f"{name:>12}" for name in backends)
    if set(backends) == {"cython", "pure"}:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn in workloads(args.trials):
        times = {}
        results = {}
        for name in backends:
            kernels.set_backend(name)
            times[name], results[name] = time_call(fn, args.repeat)
        if len(backends) == 2:
            first, second = results.values()
            assert equal_outputs(first, second), f"{label}: backends disagree"
        row = f"{label:<28}" + "".join(f"{times[name]:>11.3f}s" for name in backends)
        if set(backends) == {"cython", "pure"}:
            row += f"{times['pure'] / times['cython']:>9.1f}x"
        print(row)
    kernels.set_backend("cython" if "cython" in kernels.available_backends() else "pure")


if __name__ == "__main__":
    main()
