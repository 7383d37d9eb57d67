"""Pure-NumPy sampling kernel, the fallback when the compiled core is absent.

Produces bit-identical masks to ``erunion._unionsampler`` because both
evaluate the same integer-only recurrence (see :mod:`erunion.rng`).
"""
from __future__ import annotations

import numpy as np

from .rng import _PHI_U64, mix64_np

# cap on intermediate draw-array elements (8 bytes each) per slice
_SLICE_BUDGET = 1 << 23


def union_mask_block(seeds: np.ndarray, num_pairs: int, rounds: int,
                     threshold: int) -> np.ndarray:
    """Union-of-rounds Bernoulli masks, one row per stream seed.

    Draw ``j = k * num_pairs + e`` of stream ``s`` is ``mix64(s + (j+1)*PHI)``;
    pair ``e`` is present when any of its ``rounds`` draws falls below
    ``threshold``. Returns a uint8 array of shape (len(seeds), num_pairs).
    """
    seeds = np.ascontiguousarray(seeds, dtype=np.uint64)
    total = rounds * num_pairs
    thr = np.uint64(threshold)
    with np.errstate(over="ignore"):
        counters = np.arange(1, total + 1, dtype=np.uint64) * _PHI_U64
    out = np.empty((len(seeds), num_pairs), dtype=np.uint8)
    step = max(1, _SLICE_BUDGET // max(1, total))
    for lo in range(0, len(seeds), step):
        hi = min(lo + step, len(seeds))
        with np.errstate(over="ignore"):
            draws = mix64_np(seeds[lo:hi, None] + counters[None, :])
        hits = draws < thr
        out[lo:hi] = hits.reshape(hi - lo, rounds, num_pairs).any(axis=1)
    return out
