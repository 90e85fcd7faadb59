"""
Five ways to build a simple graph with a scale-free degree profile.

``generate_ba`` grows a preferential-attachment network. The other four take a
target :class:`~sfnets.degrees.DegreeSequence` (usually read off a BA graph) and
wire it up differently:

* ``generate_mr``       random stub matching (Molloy-Reed configuration model)
* ``generate_kalisky``  stub matching grown layer by layer from the largest hub
* ``generate_model_a``  hubs first, each exhausting its links on random partners
* ``generate_model_b``  hubs first, partners taken in a fixed vertex order

Every generator is deterministic given its inputs and seed, never produces
self-loops or parallel edges, and returns ``(graph, GenerationReport)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .degrees import DegreeSequence, degrees_of
from .graph import Graph, make_rng

__all__ = [
    "GeneratorParams",
    "GenerationReport",
    "ALGORITHMS",
    "generate_ba",
    "generate_mr",
    "generate_kalisky",
    "generate_model_a",
    "generate_model_b",
    "generate",
]

ALGORITHMS = ("BA", "MR", "KALISKY", "MA", "MB")


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    m: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 1 <= self.m < self.n:
            raise ValueError(f"need 1 <= m < n, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class GenerationReport:
    """How far a generator got in realising its target degrees.

    ``discarded_stubs`` are open connections dropped without being drawn into a
    pair; ``rejected_pairs`` are drawn pairs thrown away because they would have
    made a self-loop or a parallel edge (each costs two stubs).
    """

    target: DegreeSequence
    realized: DegreeSequence
    discarded_stubs: int = 0
    rejected_pairs: int = 0

    @property
    def shortfall(self) -> int:
        return self.target.total - self.realized.total


def _sequence(targets) -> DegreeSequence:
    if not isinstance(targets, DegreeSequence):
        targets = DegreeSequence(tuple(targets))
    if len(targets) == 0:
        raise ValueError("degree sequence must not be empty")
    return targets


def _report(g, targets, discarded=0, rejected=0) -> GenerationReport:
    return GenerationReport(targets, degrees_of(g), discarded, rejected)


def generate_ba(params: GeneratorParams, rng=None, zero_appeal: float = 1.0, attachment: str = "in"):
    """Preferential attachment growth.

    Starts from a single vertex. Each of the remaining ``n - 1`` vertices links
    to ``m`` distinct existing vertices (all of them while fewer than ``m``
    exist), vertex ``i`` being picked with weight ``d_i + zero_appeal``.

    ``attachment="in"`` takes ``d_i`` as the number of links vertex ``i`` has
    *received* from later vertices (so for ``m == 1`` every non-root weight is
    exactly its degree); ``"total"`` uses its full degree. The result is always
    connected, and a tree when ``m == 1``.
    """
    if zero_appeal <= 0:
        raise ValueError("zero_appeal must be positive")
    if attachment not in ("in", "total"):
        raise ValueError(f"attachment must be 'in' or 'total', got {attachment!r}")
    rng = make_rng(params.seed if rng is None else rng)
    n, m = params.n, params.m
    g = Graph(n)
    weight = np.zeros(n, dtype=np.float64)
    weight[0] = zero_appeal
    for new in range(1, n):
        w = weight[:new].copy()
        picks = []
        for _ in range(min(m, new)):
            cum = np.cumsum(w)
            idx = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
            idx = min(idx, new - 1)
            while w[idx] == 0:  # float edge case: never land on an already chosen slot
                idx -= 1
            picks.append(idx)
            w[idx] = 0.0
        for t in picks:
            g.add_edge(new, t)
            weight[t] += 1.0
        weight[new] = zero_appeal + (len(picks) if attachment == "total" else 0)
    targets = degrees_of(g)
    return g, GenerationReport(targets, targets)


class _StubPool:
    """Open connections as a flat list of owner vertices with O(1) removal."""

    def __init__(self, targets):
        self.items: list[int] = []
        self.where: list[set[int]] = []
        for v, k in enumerate(targets):
            start = len(self.items)
            self.items.extend([v] * k)
            self.where.append(set(range(start, start + k)))
        self.owners = sum(1 for k in targets if k > 0)

    def __len__(self) -> int:
        return len(self.items)

    def open(self, v: int) -> int:
        return len(self.where[v])

    def _remove_at(self, i: int) -> int:
        items = self.items
        v = items[i]
        last = len(items) - 1
        self.where[v].discard(i)
        if i != last:
            u = items[last]
            items[i] = u
            self.where[u].discard(last)
            self.where[u].add(i)
        items.pop()
        if not self.where[v]:
            self.owners -= 1
        return v

    def pop_random(self, rng) -> int:
        return self._remove_at(int(rng.integers(len(self.items))))

    def pop_random_other(self, v: int, rng) -> int:
        """Remove a stub drawn uniformly from those not owned by ``v``."""
        while True:
            i = int(rng.integers(len(self.items)))
            if self.items[i] != v:
                return self._remove_at(i)

    def pop_of(self, v: int) -> None:
        self._remove_at(next(iter(self.where[v])))

    def drain(self) -> int:
        k = len(self.items)
        self.items.clear()
        for s in self.where:
            s.clear()
        self.owners = 0
        return k


def generate_mr(targets, rng):
    """Molloy-Reed stub matching.

    Two open stubs are drawn uniformly at a time, so a vertex is picked with
    probability proportional to its open connections. A pair that would form a
    self-loop or repeat an edge is consumed and counted in ``rejected_pairs``.
    Stubs left over when one stub, or only one vertex, remains are discarded.
    """
    targets = _sequence(targets)
    rng = make_rng(rng)
    g = Graph(len(targets))
    pool = _StubPool(targets)
    rejected = 0
    while len(pool) >= 2 and pool.owners >= 2:
        u = pool.pop_random(rng)
        v = pool.pop_random(rng)
        if not g.add_edge(u, v):
            rejected += 1
    discarded = pool.drain()
    return g, _report(g, targets, discarded, rejected)


def _argmax_random(values: np.ndarray, rng) -> int:
    top = np.flatnonzero(values == values.max())
    return int(top[0]) if top.size == 1 else int(top[rng.integers(top.size)])


def generate_kalisky(targets, rng):
    """Hierarchical stub matching grown outward from the largest hub.

    The first layer is the maximal-degree vertex. Every open connection of the
    current layer is paired with a stub drawn uniformly from the open stubs of
    all *other* vertices (inside or outside the layer); vertices reached this
    way form the next layer. A pair repeating an existing edge is consumed as in
    :func:`generate_mr`. When a layer sweep leaves stubs on vertices never
    reached, a new tree starts at the largest of them.
    """
    targets = _sequence(targets)
    rng = make_rng(rng)
    n = len(targets)
    g = Graph(n)
    pool = _StubPool(targets)
    reached = np.zeros(n, dtype=bool)
    remaining = targets.as_array().copy()
    rejected = discarded = 0

    while len(pool) >= 2 and pool.owners >= 2:
        open_unreached = np.where(reached, -1, remaining)
        root = _argmax_random(open_unreached, rng)
        reached[root] = True
        layer = [root]
        while layer:
            nxt = []
            for v in layer:
                while pool.open(v):
                    if len(pool) == 1 or pool.owners == 1:
                        discarded += pool.drain()
                        break
                    pool.pop_of(v)
                    w = pool.pop_random_other(v, rng)
                    remaining[v] -= 1
                    remaining[w] -= 1
                    if not g.add_edge(v, w):
                        rejected += 1
                    elif not reached[w]:
                        reached[w] = True
                        nxt.append(w)
            layer = nxt
    discarded += pool.drain()
    return g, _report(g, targets, discarded, rejected)


def generate_model_a(targets, rng, trace: list | None = None):
    """Hubs first, random partners.

    Repeatedly take the vertex with the highest remaining degree ``h`` (ties
    broken uniformly) and join it to ``h`` partners sampled uniformly without
    replacement among vertices that still have open connections and are not
    already its neighbours. Its links are then exhausted; if fewer than ``h``
    partners were eligible the rest are discarded.

    If ``trace`` is a list, ``(vertex, h, partners)`` is appended per step.
    """
    targets = _sequence(targets)
    rng = make_rng(rng)
    n = len(targets)
    g = Graph(n)
    remaining = targets.as_array().copy()
    discarded = 0
    while remaining.max() > 0:
        v = _argmax_random(remaining, rng)
        h = int(remaining[v])
        eligible = remaining > 0
        eligible[v] = False
        eligible[list(g.neighbors(v))] = False
        pool = np.flatnonzero(eligible)
        k = min(h, pool.size)
        partners = rng.choice(pool, size=k, replace=False) if k else pool[:0]
        for w in partners.tolist():
            g.add_edge(v, w)
        remaining[partners] -= 1
        remaining[v] = 0
        discarded += h - k
        if trace is not None:
            trace.append((v, h, tuple(partners.tolist())))
    return g, _report(g, targets, discarded)


def model_b_order(targets, rng, order: str = "descending") -> np.ndarray:
    """Processing order for :func:`generate_model_b`.

    ``"descending"`` sorts vertices by target degree, largest first, with ties
    in random order. ``"random"`` is a plain random permutation. A sequence of
    vertex indices is taken as the layout itself.
    """
    targets = _sequence(targets)
    if not isinstance(order, str):
        layout = np.asarray(order, dtype=np.int64)
        if sorted(layout.tolist()) != list(range(len(targets))):
            raise ValueError("an explicit Model B layout must be a permutation of the vertices")
        return layout
    rng = make_rng(rng)
    perm = rng.permutation(len(targets))
    if order == "random":
        return perm
    if order != "descending":
        raise ValueError(f"unknown Model B order {order!r}")
    degs = targets.as_array()[perm]
    return perm[np.argsort(-degs, kind="stable")]


def generate_model_b(targets, rng, order: str = "descending", trace: list | None = None):
    """Hubs first, partners taken in a fixed order.

    Vertices are laid out once (see :func:`model_b_order`). Repeatedly take the
    vertex with the highest remaining degree ``h`` (earliest in the layout on
    ties) and join it to the first ``h`` vertices of the layout that still have
    open connections and are not itself or already its neighbours. Its links
    are then exhausted; any shortfall is discarded.
    """
    targets = _sequence(targets)
    rng = make_rng(rng)
    layout = model_b_order(targets, rng, order)
    n = len(targets)
    g = Graph(n)
    position = np.empty(n, dtype=np.int64)
    position[layout] = np.arange(n)
    remaining = targets.as_array()[layout].copy()
    discarded = 0
    while remaining.max() > 0:
        p = int(np.argmax(remaining))
        v = int(layout[p])
        h = int(remaining[p])
        eligible = remaining > 0
        eligible[p] = False
        eligible[position[list(g.neighbors(v))]] = False
        chosen = np.flatnonzero(eligible)[:h]
        partners = layout[chosen]
        for w in partners.tolist():
            g.add_edge(v, w)
        remaining[chosen] -= 1
        remaining[p] = 0
        discarded += h - chosen.size
        if trace is not None:
            trace.append((v, h, tuple(partners.tolist())))
    return g, _report(g, targets, discarded)


def generate(algorithm: str, rng, *, n: int = 1000, m: int = 1, targets=None, **kwargs):
    """Dispatch by algorithm name. Non-BA algorithms need ``targets``."""
    name = algorithm.upper()
    if name == "BA":
        return generate_ba(GeneratorParams(n, m), rng, **kwargs)
    funcs = {
        "MR": generate_mr,
        "KALISKY": generate_kalisky,
        "MA": generate_model_a,
        "MB": generate_model_b,
    }
    if name not in funcs:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")
    if targets is None:
        raise ValueError(f"{name} needs a target degree sequence")
    return funcs[name](targets, rng, **kwargs)
