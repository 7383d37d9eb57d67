#!/usr/bin/env python3
"""Benchmark the compiled sampling kernel against the pure-NumPy fallback.

Times the union-mask kernel (the hot inner loop of every Monte-Carlo run)
on a few (n, N, p) shapes and the end-to-end per-trial pipeline
(masks -> Laplacians -> eigenvalues), then prints throughput and speedup.

Usage: python benchmarks/bench_kernels.py [--trials T]
"""
import argparse
import time

import numpy as np

from erunion import _kernels_np, rng
from erunion.graphs import laplacians_from_masks

try:
    from erunion import _unionsampler
except ImportError:
    _unionsampler = None

SHAPES = [
    # (n, N, p)
    (10, 1, 0.5),
    (10, 50, 0.1),
    (50, 50, 0.1),
    (60, 8, 0.3),
    (200, 4, 0.05),
]


def time_kernel(impl, seeds, num_pairs, rounds, threshold, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = impl.union_mask_block(seeds, num_pairs, rounds, threshold)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=512)
    args = parser.parse_args()

    if _unionsampler is None:
        print("compiled kernel not built; benchmarking the NumPy lane only")

    header = f"{'shape (n, N, p)':>20} {'draws':>12} {'numpy':>12} {'cython':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n, rounds, p in SHAPES:
        num_pairs = n * (n - 1) // 2
        seeds = rng.trial_seeds_np(12345, 0, args.trials)
        threshold = rng.threshold_u64(p)
        draws = args.trials * rounds * num_pairs

        t_np, m_np = time_kernel(_kernels_np, seeds, num_pairs, rounds, threshold)
        row = f"{f'({n}, {rounds}, {p})':>20} {draws:>12,} {draws/t_np/1e6:>10.1f}M/s"
        if _unionsampler is not None:
            t_cy, m_cy = time_kernel(_unionsampler, seeds, num_pairs, rounds, threshold)
            assert np.array_equal(m_np, m_cy), "backends disagree"
            row += f" {draws/t_cy/1e6:>10.1f}M/s {t_np/t_cy:>7.1f}x"
        print(row)

    # end-to-end single shape: masks -> Laplacians -> eigenvalues
    n, rounds, p = 50, 50, 0.1
    num_pairs = n * (n - 1) // 2
    seeds = rng.trial_seeds_np(1, 0, args.trials)
    threshold = rng.threshold_u64(p)
    print()
    for name, impl in (("numpy", _kernels_np), ("cython", _unionsampler)):
        if impl is None:
            continue
        t0 = time.perf_counter()
        masks = impl.union_mask_block(seeds, num_pairs, rounds, threshold)
        laps = laplacians_from_masks(masks, n)
        np.linalg.eigvalsh(laps)
        dt = time.perf_counter() - t0
        print(f"end-to-end (n=50, N=50, p=0.1), {args.trials} trials, {name:>6}: "
              f"{dt:.3f}s ({args.trials/dt:.0f} trials/s)")


if __name__ == "__main__":
    main()
