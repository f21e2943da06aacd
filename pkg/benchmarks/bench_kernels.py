"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max-n 7] [--repeat 3]

Times one block-diagonal product per size and the full count of n x n
graph mosaics, for every available kernel implementation.
"""
import argparse
import time

import numpy as np

from graphmosaic import kernels
from graphmosaic.census import count_graph_mosaics
from graphmosaic.statematrix import build_state_matrices


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_bd_mul(repeat):
    rng = np.random.default_rng(0)
    print(f"{'block product':<22}" + "".join(f"{name:>12}" for name in kernels.IMPLEMENTATIONS))
    for m, k in [(3, 3), (4, 4), (5, 4), (5, 5)]:
        d = 1 << (m + k)
        a = kernels.to_u128(rng.integers(0, 2**62, (d, d)).astype(object) << 40)
        b = np.ascontiguousarray(build_state_matrices(m).o_plus.entries)
        row = f"d={d:<5} block={1 << m:<4}   "
        for name, kern in kernels.IMPLEMENTATIONS.items():
            out = kernels.u128_zeros(d, d)
            row += f"{best_of(lambda: kern.bd_mul(a, b, out), repeat):>11.4f}s"
        print(row)


def bench_count(max_n, repeat):
    print(f"\n{'count n x n':<22}" + "".join(f"{name:>12}" for name in kernels.IMPLEMENTATIONS))
    for n in range(4, max_n + 1):
        row = f"n={n:<20}"
        for name in kernels.IMPLEMENTATIONS:
            row += f"{best_of(lambda: count_graph_mosaics(n, n, impl=name), repeat):>11.4f}s"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"default implementation: {kernels.DEFAULT_IMPLEMENTATION}, threads: {kernels.default_threads()}\n")
    bench_bd_mul(args.repeat)
    bench_count(args.max_n, args.repeat)


if __name__ == "__main__":
    main()
