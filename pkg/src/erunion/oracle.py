"""Exact ground truth by weighted enumeration of all labelled graphs (n <= 6).

Every edge subset of the n(n-1)/2 admissible pairs is enumerated as a bitmask
over the lexicographic pair order (bit e = pair e); a graph with m edges has
probability weight p^m q^(M-m). All quantities are probability-weighted sums
over the full 2^M-graph sample space and are entirely independent of the
closed-form moment formulas they are used to check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bounds import union_effective_params
from .errors import CapabilityError
from .graphs import ModelParams, pair_arrays
from .spectral import EPS_ZERO, line_graph_lambda_min

ORACLE_N_CAP = 6

# same indicator slack as the Monte-Carlo module: the n-node path attains
# lambda_min exactly and the eigensolver sits ~1e-16 off the closed form
_LAMBDA_MIN_SLACK = 1e-9


@dataclass(frozen=True)
class ExactReport:
    """Probability-weighted exact quantities for one (n, p)."""

    n: int
    p: float
    expected_trace_lk: dict        # k in 1..4 -> E[trace(L^k)]
    eigenvalue_moments: dict       # k in 1..4 -> E[trace(L^k)] / (n-1)
    expected_lambda2: float
    prob_connected: float
    prob_lambda2_ge_lambda_min: float
    weight_total: float


@lru_cache(maxsize=8)
def _structure(n: int):
    """Per-bitmask edge counts, Laplacian power traces, and lambda_2 (p-free)."""
    i, j = pair_arrays(n)
    m = len(i)
    masks = np.arange(1 << m, dtype=np.uint32)
    bits = ((masks[:, None] >> np.arange(m, dtype=np.uint32)) & 1).astype(np.float64)
    edge_counts = bits.sum(axis=1)

    lap = np.zeros((1 << m, n, n))
    lap[:, i, j] = -bits
    lap[:, j, i] = -bits
    idx = np.arange(n)
    deg = np.zeros((1 << m, n))
    np.add.at(deg, (slice(None), i), bits)
    np.add.at(deg, (slice(None), j), bits)
    lap[:, idx, idx] = deg

    l2 = lap @ lap
    l3 = l2 @ lap
    l4 = l3 @ lap
    traces = {
        1: np.einsum("bii->b", lap),
        2: np.einsum("bii->b", l2),
        3: np.einsum("bii->b", l3),
        4: np.einsum("bii->b", l4),
    }
    lambda2s = np.linalg.eigvalsh(lap)[:, 1]
    return edge_counts, traces, lambda2s


def _weights(edge_counts: np.ndarray, num_pairs: int, p: float) -> np.ndarray:
    q = 1.0 - p
    if min(p, q) < 1e-3:
        # log-space path for extreme probabilities
        logw = edge_counts * math.log(p) + (num_pairs - edge_counts) * math.log1p(-p)
        return np.exp(logw)
    return p ** edge_counts * q ** (num_pairs - edge_counts)


def enumerate_exact(params: ModelParams) -> ExactReport:
    """Exact expectations/probabilities by full enumeration; n <= 6 only."""
    n = params.n
    if n > ORACLE_N_CAP:
        raise CapabilityError(
            f"exact enumeration is capped at n = {ORACLE_N_CAP}, got n = {n}")
    edge_counts, traces, lambda2s = _structure(n)
    w = _weights(edge_counts, params.num_pairs, params.p)
    lam_min = line_graph_lambda_min(n)
    return ExactReport(
        n=n,
        p=params.p,
        expected_trace_lk={k: float(w @ traces[k]) for k in (1, 2, 3, 4)},
        eigenvalue_moments={k: float(w @ traces[k]) / (n - 1) for k in (1, 2, 3, 4)},
        expected_lambda2=float(w @ lambda2s),
        prob_connected=float(w[lambda2s > EPS_ZERO].sum()),
        prob_lambda2_ge_lambda_min=float(w[lambda2s >= lam_min - _LAMBDA_MIN_SLACK].sum()),
        weight_total=float(w.sum()),
    )


def exact_union_report(params: ModelParams, num_graphs: int) -> ExactReport:
    """Exact report for a union of num_graphs samples: enumeration at p_hat."""
    u = union_effective_params(params, num_graphs)
    return enumerate_exact(ModelParams(params.n, u.p_hat))
