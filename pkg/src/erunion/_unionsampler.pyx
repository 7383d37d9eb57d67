# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled sampling kernel: counter-based SplitMix64 union masks.

Same draw definition as erunion.rng / erunion._kernels_np: draw
j = k*num_pairs + e of stream s is mix64(s + (j+1)*PHI), pair e present
when any of its `rounds` draws falls below `threshold`. Because draws are
pure functions of (s, j), the inner loop may stop early for a pair once a
hit is found without changing the result.
"""
from libc.stdint cimport uint8_t, uint64_t

import numpy as np

cdef uint64_t PHI = <uint64_t> 0x9E3779B97F4A7C15
cdef uint64_t MUL1 = <uint64_t> 0xBF58476D1CE4E5B9
cdef uint64_t MUL2 = <uint64_t> 0x94D049BB133111EB


cdef inline uint64_t mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * MUL1
    z = (z ^ (z >> 27)) * MUL2
    return z ^ (z >> 31)


def union_mask_block(seeds_obj, int num_pairs, int rounds, threshold_obj):
    """Union-of-rounds Bernoulli masks, one row per stream seed (uint8)."""
    cdef uint64_t threshold = <uint64_t> int(threshold_obj)
    seeds_arr = np.ascontiguousarray(seeds_obj, dtype=np.uint64)
    cdef uint64_t[::1] seeds = seeds_arr
    cdef Py_ssize_t nblock = seeds.shape[0]
    out_arr = np.zeros((nblock, num_pairs), dtype=np.uint8)
    cdef uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t b
    cdef int e, k
    cdef uint64_t s, j, m
    with nogil:
        for b in range(nblock):
            s = seeds[b]
            for e in range(num_pairs):
                for k in range(rounds):
                    j = (<uint64_t> k) * (<uint64_t> num_pairs) + (<uint64_t> e) + 1
                    if mix64(s + j * PHI) < threshold:
                        out[b, e] = 1
                        break
    return out_arr
