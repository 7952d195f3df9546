"""Planted dense-subgraph model, compact graph storage, and cut metrics.

The random model is an n-node Erdos-Renyi graph at edge probability p with
a denser Erdos-Renyi block at probability q planted on the first m nodes.
Community ``C = {0..m-1}``; disclosed seeds ``S = {0..k-1}``.  Sampling is
O(expected edges) via geometric skipping over the three pair blocks
(community internal at rate q, community-to-outside and outside internal
at rate p), with one counter-based random stream per block so that a
config (seed included) maps to exactly one graph, byte for byte, on
either kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from ._rng import (
    SALT_BLOCK_BRIDGE,
    SALT_BLOCK_COMMUNITY,
    SALT_BLOCK_OUTSIDE,
    salted_seed,
    stream_seed,
)
from .errors import ZeroVolume

__all__ = [
    "PlantedGraphConfig",
    "Graph",
    "NodeSet",
    "sample_planted_er",
    "volume",
    "cut_size",
    "conductance",
    "write_edgelist",
    "read_edgelist",
]


@dataclass(frozen=True)
class PlantedGraphConfig:
    """Model parameters (n, m, k, p, q, seed).

    Community ``C`` is the first m node ids, the seed set ``S`` the first
    k.  Requires 1 <= k <= m <= n and 0 <= p <= q <= 1 (q = p is allowed
    for trivial cases).
    """

    n: int
    m: int
    k: int
    p: float
    q: float
    seed: int = 0

    def __post_init__(self):
        if not (1 <= self.k <= self.m <= self.n):
            raise ValueError(f"need 1 <= k <= m <= n, got k={self.k} m={self.m} n={self.n}")
        if not (0.0 <= self.p <= self.q <= 1.0):
            raise ValueError(f"need 0 <= p <= q <= 1, got p={self.p} q={self.q}")
        if not (0 <= int(self.seed) <= 0xFFFFFFFFFFFFFFFF):
            raise ValueError("seed must fit in 64 bits")

    def with_seed(self, seed: int) -> "PlantedGraphConfig":
        return replace(self, seed=seed)

    def replica(self, index: int) -> "PlantedGraphConfig":
        """Config of replica ``index``: same model, derived stream seed."""
        return replace(self, seed=stream_seed(self.seed, index))

    def community(self) -> "NodeSet":
        return NodeSet(np.arange(self.m, dtype=np.int64))

    def seeds(self) -> "NodeSet":
        return NodeSet(np.arange(self.k, dtype=np.int64))


class NodeSet:
    """Sorted, duplicate-free array of node ids."""

    __slots__ = ("ids",)

    def __init__(self, ids):
        arr = np.asarray(ids, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("node set must be one-dimensional")
        if arr.size and (np.any(np.diff(arr) <= 0) or arr[0] < 0):
            arr = np.unique(arr)
            if arr[0] < 0:
                raise ValueError("negative node id")
        self.ids = arr

    def __len__(self):
        return int(self.ids.size)

    def __iter__(self):
        return iter(self.ids.tolist())

    def __contains__(self, node):
        i = np.searchsorted(self.ids, node)
        return i < self.ids.size and self.ids[i] == node

    def __eq__(self, other):
        return isinstance(other, NodeSet) and np.array_equal(self.ids, other.ids)

    def mask(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=bool)
        out[self.ids] = True
        return out

    def complement(self, n: int) -> "NodeSet":
        return NodeSet(np.setdiff1d(np.arange(n, dtype=np.int64), self.ids,
                                    assume_unique=True))


class Graph:
    """Immutable undirected simple graph in CSR adjacency form.

    ``offsets``/``targets`` store both directions of every edge; each
    neighbor list is strictly increasing.  ``degrees[i]`` equals the
    length of list i.  Instances are safe to share across threads.
    """

    __slots__ = ("n", "offsets", "targets", "degrees")

    def __init__(self, n, offsets, targets, degrees):
        self.n = int(n)
        self.offsets = offsets
        self.targets = targets
        self.degrees = degrees

    @classmethod
    def from_edges(cls, n: int, u: np.ndarray, v: np.ndarray) -> "Graph":
        """Build from deduplicated undirected edges with u[i] < v[i]."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        degrees = np.bincount(src, minlength=n).astype(np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=offsets[1:])
        return cls(n, offsets, dst[order], degrees)

    @property
    def edge_count(self) -> int:
        return int(self.targets.size // 2)

    @property
    def total_volume(self) -> int:
        return int(self.targets.size)

    def neighbors(self, i: int) -> np.ndarray:
        return self.targets[self.offsets[i]:self.offsets[i + 1]]

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Undirected edge list (u, v) with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.targets
        return src[keep], self.targets[keep]

    def check_invariants(self) -> None:
        """Exhaustive structural validation; raises on any violation."""
        if self.offsets[0] != 0 or self.offsets[-1] != self.targets.size:
            raise AssertionError("offsets do not span targets")
        if not np.array_equal(np.diff(self.offsets), self.degrees):
            raise AssertionError("degrees disagree with adjacency lengths")
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        if np.any(src == self.targets):
            raise AssertionError("self-loop present")
        for i in range(self.n):
            row = self.neighbors(i)
            if row.size > 1 and np.any(np.diff(row) <= 0):
                raise AssertionError(f"neighbor list of {i} not strictly increasing")
        # symmetry: the reversed directed edge set must equal the original
        fwd = src * self.n + self.targets
        rev = self.targets * self.n + src
        if not np.array_equal(np.sort(fwd), np.sort(rev)):
            raise AssertionError("adjacency not symmetric")


def _decode_triangular(positions: np.ndarray, s: int, offset: int):
    """Map linear pair index t to (i, j), i < j, over s nodes."""
    t = positions.astype(np.float64)
    i = np.floor(s - 0.5 - np.sqrt((s - 0.5) ** 2 - 2.0 * t)).astype(np.int64)
    # guard against float rounding at row boundaries
    row_start = i * (2 * s - i - 1) // 2
    too_low = positions < row_start
    i[too_low] -= 1
    row_start = i * (2 * s - i - 1) // 2
    too_high = positions >= row_start + (s - 1 - i)
    i[too_high] += 1
    row_start = i * (2 * s - i - 1) // 2
    j = i + 1 + (positions - row_start)
    return i + offset, j + offset


def sample_planted_er(config: PlantedGraphConfig) -> Graph:
    """Sample one graph from the planted model, deterministically in seed."""
    n, m = config.n, config.m
    rest = n - m
    blocks = []
    pos = kernels.geometric_positions(
        np.uint64(salted_seed(config.seed, SALT_BLOCK_COMMUNITY)),
        m * (m - 1) // 2, config.q)
    blocks.append(_decode_triangular(pos, m, 0))
    if rest > 0:
        pos = kernels.geometric_positions(
            np.uint64(salted_seed(config.seed, SALT_BLOCK_BRIDGE)), m * rest, config.p)
        blocks.append((pos // rest, m + pos % rest))
        pos = kernels.geometric_positions(
            np.uint64(salted_seed(config.seed, SALT_BLOCK_OUTSIDE)),
            rest * (rest - 1) // 2, config.p)
        blocks.append(_decode_triangular(pos, rest, m))
    u = np.concatenate([b[0] for b in blocks])
    v = np.concatenate([b[1] for b in blocks])
    return Graph.from_edges(n, u, v)


def _as_ids(node_set) -> np.ndarray:
    if isinstance(node_set, NodeSet):
        return node_set.ids
    return NodeSet(node_set).ids


def volume(graph: Graph, node_set) -> int:
    """Sum of degrees over the set."""
    ids = _as_ids(node_set)
    return int(graph.degrees[ids].sum())


def cut_size(graph: Graph, node_set) -> int:
    """Number of edges with exactly one endpoint in the set."""
    ids = _as_ids(node_set)
    mask = np.zeros(graph.n, dtype=bool)
    mask[ids] = True
    src = np.repeat(mask, graph.degrees)
    crossing = src & ~mask[graph.targets]
    return int(crossing.sum())


def conductance(graph: Graph, node_set) -> float:
    """cut / min(vol(set), vol(complement)); raises ZeroVolume if either is 0."""
    ids = _as_ids(node_set)
    vol = volume(graph, ids)
    other = graph.total_volume - vol
    if vol == 0 or other == 0:
        raise ZeroVolume(f"set volume {vol}, complement volume {other}")
    return cut_size(graph, ids) / min(vol, other)


def write_edgelist(graph: Graph, path) -> None:
    """Text export: header ``# n=<n>``, then one ``i j`` line per edge, i < j."""
    u, v = graph.edges()
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"# n={graph.n}\n")
        for a, b in zip(u.tolist(), v.tolist()):
            fh.write(f"{a} {b}\n")


def read_edgelist(path) -> Graph:
    """Parse the edge-list text format written by :func:`write_edgelist`."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        if not header.startswith("# n="):
            raise ValueError(f"bad edge-list header: {header!r}")
        n = int(header[4:])
        pairs = [line.split() for line in fh if line.strip()]
    if pairs:
        arr = np.asarray(pairs, dtype=np.int64)
        u, v = arr[:, 0], arr[:, 1]
        if np.any(u >= v) or np.any(u < 0) or np.any(v >= n):
            raise ValueError("edge list must satisfy 0 <= i < j < n")
    else:
        u = v = np.empty(0, dtype=np.int64)
    return Graph.from_edges(n, u, v)
