#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the full search scan at a few orders through both backends, checks
they agree, and prints throughput. The numba path pays its JIT cost in a
warmup call so the timings reflect steady state.

    python3 benchmarks/bench_backends.py [--n 4 5] [--repeat 3]
"""

import argparse
import time

from critigraph._kernels import load_backend


def time_scan(backend, n, repeat):
    total = 1 << (n * (n - 1))
    enforce = 3 <= n <= 5
    backend.search_chunk(n, 0, min(total, 1 << 12), enforce)  # warmup / JIT
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = backend.search_chunk(n, 0, total, enforce)
        best = min(best, time.perf_counter() - t0)
    return result, best, total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[4, 5])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    numba_backend = load_backend("numba")
    numpy_backend = load_backend("numpy")

    print(f"{'n':>3} {'backend':>8} {'graphs':>12} {'seconds':>10} "
          f"{'graphs/s':>14} {'speedup':>8}")
    for n in args.n:
        res_nb, t_nb, total = time_scan(numba_backend, n, args.repeat)
        res_np, t_np, _ = time_scan(numpy_backend, n, args.repeat)
        if res_nb != res_np:
            raise SystemExit(
                f"backend disagreement at n={n}: numba={res_nb} numpy={res_np}"
            )
        for name, t in (("numba", t_nb), ("numpy", t_np)):
            print(f"{n:>3} {name:>8} {total:>12} {t:>10.4f} "
                  f"{total / t:>14.0f} {t_np / t:>7.1f}x")
        print(f"    agreed: max_edges={res_nb[0]} attain={res_nb[2]} "
              f"critical={res_nb[3]} sc={res_nb[4]}")


if __name__ == "__main__":
    main()
