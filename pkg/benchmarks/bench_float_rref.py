"""Benchmark the numba RREF kernel against the pure-numpy fallback.

Run:  python3 benchmarks/bench_float_rref.py [--sizes 200x120,400x240]

The matrices mimic the float-backend workload: dense complex constraint
systems with planted rank deficiencies.  Timings exclude the one-time JIT
compilation (a warm-up call is made first).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from amenalyzer import _kernels


def make_system(rows, cols, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    # plant dependencies so pivoting logic is exercised
    for k in range(0, cols, 7):
        if k + 2 < cols:
            a[:, k + 2] = 0.5 * a[:, k] - 1.5 * a[:, k + 1]
    return a.astype(np.complex128)


def bench(fn, a, repeats):
    best = float("inf")
    for _ in range(repeats):
        work = a.copy()
        t0 = time.perf_counter()
        rank, _ = fn(work, 1e-9)
        best = min(best, time.perf_counter() - t0)
    return best, rank


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--sizes", default="120x60,240x120,480x240", help="comma list of RxC sizes"
    )
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    sizes = []
    for chunk in args.sizes.split(","):
        r, c = chunk.lower().split("x")
        sizes.append((int(r), int(c)))

    if not _kernels.HAVE_NUMBA:
        print(
            "numba unavailable or disabled (AMENALYZER_NO_NUMBA); "
            "benchmarking the numpy path only"
        )

    print(f"{'size':>12} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>9}")
    for rows, cols in sizes:
        a = make_system(rows, cols, seed=rows * 1000 + cols)
        if _kernels.HAVE_NUMBA:
            _kernels._rref_numba(a.copy(), 1e-9)  # warm up the JIT
        t_np, rank_np = bench(_kernels._rref_numpy, a, args.repeats)
        line = f"{rows}x{cols:>5} {t_np * 1e3:>12.2f}"
        if _kernels.HAVE_NUMBA:
            t_nb, rank_nb = bench(_kernels._rref_numba, a, args.repeats)
            assert rank_np == rank_nb, "paths disagree on rank"
            line += f" {t_nb * 1e3:>12.2f} {t_np / t_nb:>8.1f}x"
        else:
            line += f" {'-':>12} {'-':>9}"
        print(line + f"   (rank {rank_np})")


if __name__ == "__main__":
    main()
