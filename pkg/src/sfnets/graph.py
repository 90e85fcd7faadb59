"""
Simple undirected graphs over dense integer vertices.

Vertices are ``0 .. n-1``. Adjacency is a list of sets, so parallel edges are
impossible by construction and self-loops are refused by :meth:`Graph.add_edge`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
import scipy.sparse as sp

__all__ = [
    "UNREACHABLE",
    "Graph",
    "ComponentDecomposition",
    "EdgeListError",
    "new_graph",
    "bfs_distances",
    "connected_components",
    "to_edge_list",
    "from_edge_list",
    "read_edge_list",
    "write_edge_list",
    "make_rng",
]

UNREACHABLE = -1


class EdgeListError(ValueError):
    """Malformed or invalid edge-list input. ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph with ``n`` vertices labelled ``0 .. n-1``."""

    def __init__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        self._n = int(n)
        self._adj: list[set[int]] = [set() for _ in range(self._n)]
        self._edges = 0
        self._csr: sp.csr_array | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._edges

    def _check(self, v) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self._n:
            raise ValueError(f"vertex {v!r} out of range for n={self._n}")
        return int(v)

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge ``u-v``. Returns False (and changes nothing) for loops and duplicates."""
        u, v = self._check(u), self._check(v)
        if u == v or v in self._adj[u]:
            return False
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edges += 1
        self._csr = None
        return True

    def has_edge(self, u: int, v: int) -> bool:
        return self._check(v) in self._adj[self._check(u)]

    def neighbors(self, v: int) -> set[int]:
        return self._adj[self._check(v)]

    def degree(self, v: int) -> int:
        return len(self._adj[self._check(v)])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=self._n)

    def adjacency(self) -> sp.csr_array:
        """Symmetric 0/1 adjacency matrix (cached until the next insertion)."""
        if self._csr is None:
            rows, cols = [], []
            for u, nbrs in enumerate(self._adj):
                rows.extend([u] * len(nbrs))
                cols.extend(nbrs)
            data = np.ones(len(rows), dtype=np.float64)
            self._csr = sp.csr_array(
                (data, (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))),
                shape=(self._n, self._n),
            )
            self._csr.sort_indices()
        return self._csr

    def edges(self) -> list[tuple[int, int]]:
        return to_edge_list(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self._edges})"


def new_graph(n: int) -> Graph:
    return Graph(n)


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distance from ``source`` to every vertex; ``UNREACHABLE`` outside its component."""
    source = g._check(source)
    dist = np.full(g.n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adj = g._adj
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dv
                queue.append(w)
    return dist


@dataclass(frozen=True)
class ComponentDecomposition:
    component_id: np.ndarray
    component_sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.component_sizes)

    @property
    def giant_size(self) -> int:
        return max(self.component_sizes)

    @property
    def giant_size_pct(self) -> float:
        return 100.0 * self.giant_size / len(self.component_id)


def connected_components(g: Graph) -> ComponentDecomposition:
    """Label components in order of their smallest vertex."""
    labels = np.full(g.n, -1, dtype=np.int64)
    sizes = []
    adj = g._adj
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        c = len(sizes)
        labels[start] = c
        stack = [start]
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for w in adj[v]:
                if labels[w] < 0:
                    labels[w] = c
                    stack.append(w)
        sizes.append(size)
    return ComponentDecomposition(labels, tuple(sizes))


def to_edge_list(g: Graph) -> list[tuple[int, int]]:
    """Canonical edge list: ``u < v`` inside each pair, pairs sorted."""
    return [(u, v) for u in range(g.n) for v in sorted(g._adj[u]) if u < v]


def from_edge_list(n: int, pairs: Iterable) -> Graph:
    """Build a graph, rejecting malformed pairs, out-of-range indices, loops and duplicates.

    Error messages carry the 1-based position of the offending pair.
    """
    g = Graph(n)
    for lineno, pair in enumerate(pairs, start=1):
        try:
            u, v = pair
            if isinstance(u, bool) or isinstance(v, bool):
                raise TypeError
            u, v = int(u), int(v)
        except (TypeError, ValueError):
            raise EdgeListError(f"malformed pair {pair!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range in ({u},{v}) for n={n}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop ({u},{v})", lineno)
        if not g.add_edge(u, v):
            raise EdgeListError(f"duplicate edge ({u},{v})", lineno)
    return g


def write_edge_list(g: Graph, path) -> None:
    lines = [f"# n={g.n}"] + [f"{u},{v}" for u, v in to_edge_list(g)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def read_edge_list(path) -> Graph:
    text = Path(path).read_text(encoding="ascii")
    lines = text.split("\n")
    if not lines or not lines[0].startswith("# n="):
        raise EdgeListError("missing '# n=<vertex_count>' header", 1)
    try:
        n = int(lines[0][4:].strip())
    except ValueError:
        raise EdgeListError(f"bad header {lines[0]!r}", 1) from None

    g = Graph(n)
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u,v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range in {line!r} for n={n}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop {line!r}", lineno)
        if not g.add_edge(u, v):
            raise EdgeListError(f"duplicate edge {line!r}", lineno)
    return g


def make_rng(seed) -> np.random.Generator:
    """The one random source used everywhere: numpy's PCG64 seeded through SeedSequence.

    ``seed`` may be an int or a sequence of ints (used as SeedSequence entropy).
    Passing an existing Generator returns it unchanged.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
