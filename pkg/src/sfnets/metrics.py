"""
Structural measures of a simple undirected graph.

All functions take a :class:`~sfnets.graph.Graph` and are pure. Quantities that
have no value for a particular graph (``knn`` of an isolated vertex, the
degree correlation of a regular graph, ...) are returned as ``None`` rather
than ``0`` or ``nan``.

Shortest-path work is done one connected component at a time with a
level-synchronous breadth-first search over many sources at once, which keeps
betweenness and efficiency vectorised.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np
import scipy.sparse as sp

from .graph import Graph, UNREACHABLE, connected_components

__all__ = [
    "BetweennessVector",
    "MetricRecord",
    "knn_vertex",
    "knn_by_degree",
    "clustering_local",
    "clustering_global",
    "betweenness",
    "central_point_dominance",
    "global_efficiency",
    "degree_correlation",
    "distance_matrix",
    "full_record",
]

# Upper bound on the size of one (sources x vertices) work array.
_BATCH_CELLS = 1 << 21


@dataclass(frozen=True)
class BetweennessVector:
    raw: np.ndarray
    relative: np.ndarray


@dataclass
class MetricRecord:
    n: int
    edges: int
    components: int
    giant_pct: float
    cc: float
    cpd: float | None
    ge: float | None
    r: float | None
    knn: dict[int, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def _check_vertex(g: Graph, i) -> int:
    if not isinstance(i, (int, np.integer)) or not 0 <= i < g.n:
        raise ValueError(f"vertex {i!r} out of range for n={g.n}")
    return int(i)


def knn_vertex(g: Graph, i: int) -> float | None:
    """Mean degree of the neighbours of ``i``; None if ``i`` is isolated."""
    i = _check_vertex(g, i)
    nbrs = g.neighbors(i)
    if not nbrs:
        return None
    return sum(g.degree(j) for j in nbrs) / len(nbrs)


def _knn_all(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    k = g.degrees()
    nbr_sum = g.adjacency() @ k.astype(np.float64)
    with np.errstate(invalid="ignore", divide="ignore"):
        knn = nbr_sum / k
    return k, knn


def knn_by_degree(g: Graph) -> dict[int, float]:
    """Average neighbour degree per degree class ``k >= 1`` (arithmetic mean over the class)."""
    k, knn = _knn_all(g)
    out = {}
    for d in np.unique(k[k > 0]).tolist():
        out[int(d)] = float(knn[k == d].mean())
    return out


def _triangles(g: Graph) -> np.ndarray:
    a = g.adjacency()
    return np.asarray((a @ a).multiply(a).sum(axis=1)).ravel() / 2.0


def _clustering_all(g: Graph) -> np.ndarray:
    k = g.degrees().astype(np.float64)
    t = _triangles(g)
    cc = np.zeros(g.n)
    ok = k >= 2
    cc[ok] = 2.0 * t[ok] / (k[ok] * (k[ok] - 1.0))
    return cc


def clustering_local(g: Graph, i: int) -> float:
    """Fraction of neighbour pairs of ``i`` that are adjacent; 0 when degree < 2."""
    i = _check_vertex(g, i)
    nbrs = sorted(g.neighbors(i))
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(1 for a in range(k) for b in range(a + 1, k) if g.has_edge(nbrs[a], nbrs[b]))
    return 2.0 * links / (k * (k - 1))


def clustering_global(g: Graph, count_low_degree: bool = True) -> float | None:
    """Mean local clustering.

    By default every vertex counts, those of degree < 2 contributing 0. With
    ``count_low_degree=False`` the mean runs over vertices of degree >= 2 only
    (None if there are none).
    """
    cc = _clustering_all(g)
    if count_low_degree:
        return float(cc.mean())
    ok = g.degrees() >= 2
    return float(cc[ok].mean()) if ok.any() else None


def _component_blocks(g: Graph):
    """Yield ``(vertices, adjacency)`` for every component with more than one vertex."""
    comps = connected_components(g)
    a = g.adjacency()
    order = np.argsort(comps.component_id, kind="stable")
    bounds = np.cumsum((0,) + comps.component_sizes)
    for c, size in enumerate(comps.component_sizes):
        if size < 2:
            continue
        verts = order[bounds[c] : bounds[c + 1]]
        yield verts, a[verts][:, verts].tocsr()


def _sweep(block: sp.csr_array, sources: np.ndarray, want_dependency: bool):
    """Multi-source BFS over one connected block.

    Work arrays are ``(vertices, sources)``. Returns ``(dist, delta)`` where
    ``delta[v, s]`` is the Brandes dependency of source ``s`` on ``v`` (None
    unless requested).
    """
    size = block.shape[0]
    b = sources.size
    cols = np.arange(b)
    dist = np.full((size, b), UNREACHABLE, dtype=np.int16 if size < 32000 else np.int32)
    dist[sources, cols] = 0
    sigma = np.zeros((size, b))
    sigma[sources, cols] = 1.0
    unseen = np.ones((size, b), dtype=bool)
    unseen[sources, cols] = False
    frontier = sigma.copy()
    level = 0
    while True:
        reach = block @ frontier
        fresh = reach > 0
        fresh &= unseen
        if not fresh.any():
            break
        level += 1
        dist[fresh] = level
        unseen &= ~fresh
        np.multiply(reach, fresh, out=frontier)
        sigma += frontier
    if not want_dependency:
        return dist, None

    inv_sigma = np.zeros_like(sigma)
    np.divide(1.0, sigma, out=inv_sigma, where=sigma > 0)
    delta = np.zeros((size, b))
    coef = np.empty_like(delta)
    below = dist == level
    for lv in range(level, 0, -1):
        on = below
        below = dist == lv - 1
        np.add(delta, 1.0, out=coef)
        coef *= inv_sigma
        coef *= on
        pulled = block @ coef
        pulled *= sigma
        pulled *= below
        delta += pulled
    delta[sources, cols] = 0.0
    return dist, delta


def _batches(size: int):
    step = max(1, _BATCH_CELLS // size)
    for start in range(0, size, step):
        yield np.arange(start, min(size, start + step))


def _betweenness_and_efficiency(g: Graph, want_dependency: bool = True):
    raw = np.zeros(g.n)
    inv_dist_sum = 0.0
    for verts, block in _component_blocks(g):
        size = verts.size
        acc = np.zeros(size)
        for src in _batches(size):
            dist, delta = _sweep(block, src, want_dependency)
            d = dist[dist > 0]
            inv_dist_sum += float(np.sum(1.0 / d))
            if delta is not None:
                acc += delta.sum(axis=1)
        raw[verts] = acc / 2.0
    return raw, inv_dist_sum


def betweenness(g: Graph) -> BetweennessVector:
    """Shortest-path betweenness over unordered source/target pairs, endpoints excluded.

    ``relative`` divides by ``(n**2 - 3n + 2) / 2``, the value attained by the
    centre of a star; it is all zeros when ``n <= 2``.
    """
    raw, _ = _betweenness_and_efficiency(g)
    norm = (g.n**2 - 3 * g.n + 2) / 2.0
    relative = raw / norm if norm > 0 else np.zeros_like(raw)
    return BetweennessVector(raw, relative)


def _cpd(relative: np.ndarray) -> float:
    return float(np.sum(relative.max() - relative) / (relative.size - 1))


def central_point_dominance(g: Graph) -> float | None:
    """Mean gap between the top relative betweenness and everyone else's; None for n < 3."""
    if g.n < 3:
        return None
    return _cpd(betweenness(g).relative)


def global_efficiency(g: Graph) -> float | None:
    """Mean of ``1/d`` over ordered vertex pairs, unreachable pairs counting 0; None for n < 2."""
    if g.n < 2:
        return None
    _, s = _betweenness_and_efficiency(g, want_dependency=False)
    return s / (g.n * (g.n - 1))


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances, ``UNREACHABLE`` across components."""
    out = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(out, 0)
    for verts, block in _component_blocks(g):
        for src in _batches(verts.size):
            dist, _ = _sweep(block, src, False)
            out[np.ix_(verts[src], verts)] = dist.T
    return out


def degree_correlation(g: Graph) -> float | None:
    """Pearson correlation of the degrees at the two ends of an edge.

    Uses Newman's edge form. None when there are no edges, or when every edge
    end has the same degree (a regular graph), which leaves zero variance.
    """
    if g.edge_count == 0:
        return None
    k = g.degrees().astype(np.float64)
    upper = sp.triu(g.adjacency(), k=1).tocoo()
    j, kk = k[upper.row], k[upper.col]
    m = float(g.edge_count)
    mean_half = np.sum(0.5 * (j + kk)) / m
    num = np.sum(j * kk) / m - mean_half**2
    den = np.sum(0.5 * (j * j + kk * kk)) / m - mean_half**2
    # den is a sum of squared differences in exact arithmetic; treat round-off as zero
    if den <= 1e-12 * max(1.0, mean_half**2):
        return None
    return float(num / den)


def full_record(g: Graph) -> MetricRecord:
    """Every measure above for one graph, sharing a single all-pairs sweep."""
    comps = connected_components(g)
    raw, inv_sum = _betweenness_and_efficiency(g)
    n = g.n
    cpd = None
    if n >= 3:
        cpd = _cpd(raw / ((n**2 - 3 * n + 2) / 2.0))
    ge = inv_sum / (n * (n - 1)) if n >= 2 else None
    return MetricRecord(
        n=n,
        edges=g.edge_count,
        components=comps.count,
        giant_pct=comps.giant_size_pct,
        cc=clustering_global(g),
        cpd=cpd,
        ge=ge,
        r=degree_correlation(g),
        knn=knn_by_degree(g),
    )
