"""Erdos-Renyi graph samples, unions, and matrix views.

Nodes are labelled 0..n-1. Admissible node pairs are enumerated in
lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...; this order fixes
both the sampling draw order and the bitmask encoding used by the
enumeration oracle. Sampling draws one uniform per pair per constituent
graph (no sparse shortcuts), so a sample is a pure function of
(params, seed); see :mod:`erunion.rng` for the stream definition.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import IO, Iterable, Sequence

import numpy as np

from . import backend, rng
from .errors import DimensionError, ValidationError


@dataclass(frozen=True)
class ModelParams:
    """G(n, p): n labelled nodes, each admissible edge present with probability p."""

    n: int
    p: float

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise ValidationError(f"n must be an integer >= 2, got {self.n!r}")
        if not 0.0 < float(self.p) < 1.0:
            raise ValidationError(f"p must lie in the open interval (0, 1), got {self.p!r}")

    @property
    def q(self) -> float:
        """Complement probability 1 - p."""
        return 1.0 - self.p

    @property
    def num_pairs(self) -> int:
        """Number of admissible edges n(n-1)/2."""
        return self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class GraphSample:
    """Simple undirected graph on n labelled nodes; edges stored as sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"n must be a positive integer, got {self.n!r}")
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < self.n):
                raise ValidationError(f"invalid edge {e!r} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "GraphSample":
        """Build a sample from unordered pairs, normalising each to (min, max)."""
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValidationError(f"self-loop ({i}, {j}) is not allowed")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix."""
        a = np.zeros((self.n, self.n))
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1.0
        return a

    def degrees(self) -> np.ndarray:
        """Node degrees as an integer array."""
        d = np.zeros(self.n, dtype=np.int64)
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d


@lru_cache(maxsize=64)
def all_pairs(n: int) -> tuple:
    """Admissible node pairs of an n-node graph in lexicographic order."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=64)
def pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Lexicographic pair endpoints as two index arrays (row, col)."""
    pairs = all_pairs(n)
    i = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=len(pairs))
    j = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=len(pairs))
    return i, j


@lru_cache(maxsize=16)
def _incidence(n: int) -> np.ndarray:
    """(num_pairs, n) 0/1 matrix mapping an edge mask to node degrees."""
    i, j = pair_arrays(n)
    inc = np.zeros((len(i), n))
    inc[np.arange(len(i)), i] = 1.0
    inc[np.arange(len(j)), j] = 1.0
    return inc


def laplacians_from_masks(masks: np.ndarray, n: int) -> np.ndarray:
    """Batched graph Laplacians from edge masks over the lexicographic pairs.

    All entries are small integers, hence exact in float64; the result is
    independent of how the batch was blocked.
    """
    masks = np.asarray(masks)
    i, j = pair_arrays(n)
    m = masks.astype(np.float64)
    lap = np.zeros((masks.shape[0], n, n))
    lap[:, i, j] = -m
    lap[:, j, i] = -m
    idx = np.arange(n)
    lap[:, idx, idx] = m @ _incidence(n)
    return lap


def sample_union(params: ModelParams, num_graphs: int, seed: int) -> GraphSample:
    """Union of ``num_graphs`` independent G(n, p) samples from one stream.

    Constituent k consumes draws k*M .. (k+1)*M-1 of the stream (M = number
    of pairs), so ``sample_union(params, 1, seed)`` is the plain single-graph
    sampler and trial t of a Monte-Carlo run is exactly
    ``sample_union(params, N, rng.trial_seed(master_seed, t))``.
    """
    if not isinstance(num_graphs, int) or num_graphs < 1:
        raise ValidationError(f"num_graphs must be a positive integer, got {num_graphs!r}")
    seeds = np.array([seed & rng.MASK], dtype=np.uint64)
    mask = backend.union_mask_block(seeds, params.num_pairs,
                                    num_graphs, rng.threshold_u64(params.p))[0]
    pairs = all_pairs(params.n)
    edges = frozenset(pairs[e] for e in np.flatnonzero(mask))
    return GraphSample(params.n, edges)


def sample_graph(params: ModelParams, seed: int) -> GraphSample:
    """One G(n, p) sample: each admissible pair drawn independently with probability p."""
    return sample_union(params, 1, seed)


def union_graphs(samples: Sequence[GraphSample]) -> GraphSample:
    """Edge-set union of graphs on a common node set."""
    if not samples:
        raise ValidationError("union_graphs needs at least one graph")
    n = samples[0].n
    merged = set()
    for g in samples:
        if g.n != n:
            raise DimensionError(f"node counts differ: {g.n} != {n}")
        merged |= g.edges
    return GraphSample(n, frozenset(merged))


def laplacian(g: GraphSample) -> np.ndarray:
    """Graph Laplacian L = D - A (dense, symmetric, zero row sums)."""
    lap = np.zeros((g.n, g.n))
    for i, j in g.edges:
        lap[i, j] = lap[j, i] = -1.0
    d = g.degrees()
    lap[np.arange(g.n), np.arange(g.n)] = d.astype(np.float64)
    return lap


def is_connected_bfs(g: GraphSample) -> bool:
    """True iff every node is reachable from node 0 (breadth-first traversal)."""
    if g.n == 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def write_edgelist(g: GraphSample, fp: IO[str]) -> None:
    """Serialise as the edge-list text format: header ``n=<count>``, one ``i j`` per line."""
    fp.write(f"n={g.n}\n")
    for i, j in sorted(g.edges):
        fp.write(f"{i} {j}\n")


def read_edgelist(fp: IO[str]) -> GraphSample:
    """Parse the edge-list text format produced by :func:`write_edgelist`."""
    header = fp.readline().strip()
    if not header.startswith("n="):
        raise ValidationError(f"edge-list header must be 'n=<count>', got {header!r}")
    try:
        n = int(header[2:])
    except ValueError as exc:
        raise ValidationError(f"bad node count in header {header!r}") from exc
    edges = []
    for line in fp:
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return GraphSample.from_edges(n, edges)
