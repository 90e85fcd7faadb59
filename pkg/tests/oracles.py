"""Deliberately naive reference implementations used only by the tests.

Nothing here touches sfnets.metrics; distances come from Floyd-Warshall and
path counts from explicit enumeration of every shortest path.
"""

import itertools
import math

import numpy as np

INF = math.inf


def adjacency_sets(g):
    return [set(g.neighbors(v)) for v in range(g.n)]


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, nbrs in enumerate(adjacency_sets(g)):
        for v in nbrs:
            d[u][v] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def all_shortest_paths(adj, d, s, t):
    """Every shortest s-t path, found by depth-first extension along distance-decreasing steps."""
    if d[s][t] == INF:
        return []
    out = []

    def extend(path):
        v = path[-1]
        if v == t:
            out.append(tuple(path))
            return
        for w in adj[v]:
            if d[w][t] == d[v][t] - 1:
                extend(path + [w])

    extend([s])
    return out


def betweenness(g):
    adj = adjacency_sets(g)
    d = floyd_warshall(g)
    b = [0.0] * g.n
    for s, t in itertools.combinations(range(g.n), 2):
        paths = all_shortest_paths(adj, d, s, t)
        if not paths:
            continue
        for v in range(g.n):
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p)
            b[v] += through / len(paths)
    return b


def central_point_dominance(g):
    n = g.n
    norm = (n * n - 3 * n + 2) / 2
    rel = [x / norm for x in betweenness(g)]
    top = max(rel)
    return sum(top - x for x in rel) / (n - 1)


def global_efficiency(g):
    d = floyd_warshall(g)
    n = g.n
    total = sum(1 / d[i][j] for i in range(n) for j in range(n) if i != j and d[i][j] != INF)
    return total / (n * (n - 1))


def clustering_global(g):
    adj = adjacency_sets(g)
    vals = []
    for i in range(g.n):
        k = len(adj[i])
        if k < 2:
            vals.append(0.0)
            continue
        closed = sum(1 for j in adj[i] for l in adj[i] if j != l and l in adj[j])
        vals.append(closed / (k * (k - 1)))
    return sum(vals) / g.n


def knn(g, i):
    adj = adjacency_sets(g)
    if not adj[i]:
        return None
    return sum(len(adj[j]) for j in adj[i]) / len(adj[i])


def degree_pearson(g):
    """Textbook Pearson correlation over both orientations of every edge."""
    adj = adjacency_sets(g)
    xs, ys = [], []
    for u in range(g.n):
        for v in adj[u]:
            xs.append(len(adj[u]))
            ys.append(len(adj[v]))
    if not xs or np.std(xs) == 0:
        return None
    return float(np.corrcoef(xs, ys)[0, 1])
