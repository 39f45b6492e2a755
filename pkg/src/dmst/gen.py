"""Instance generators: a worst-case nested-cycle family and rooted
Erdos-Renyi-style random instances."""

from __future__ import annotations

from .graph import Edge, Graph, SplitMix64


def gen_antilemon(k: int) -> Graph:
    """Nested-contraction worst case on n = k+1 vertices, root k.

    A zero-weight chain 0 -> 1 -> ... -> k-1, a back edge (i -> 0, weight i)
    for every chain vertex i >= 1, and one root edge (k -> 0, weight k).
    Solving contracts {0,1}, then {0..2}, ... up to {0..k-1}: about k-1
    nested cycles, so any strategy that rescans a blob's incoming-edge list
    per merge touches Theta(k^2) entries while m = 2k-1 stays linear.
    Optimum weight is exactly k.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    edges = []
    for i in range(k - 1):
        edges.append(Edge(i, i + 1, 0, len(edges)))
    for i in range(1, k):
        edges.append(Edge(i, 0, i, len(edges)))
    edges.append(Edge(k, 0, k, len(edges)))
    return Graph(k + 1, k, tuple(edges))


def gen_er_rooted(n: int, m: int, max_w: int, seed: int) -> Graph:
    """Feasible random instance: root 0, a random spanning arborescence
    from the root (vertex at shuffle rank j gets an edge from a uniform
    smaller rank), m-(n-1) extra uniform edges, weights uniform in
    [1, max_w]. Fully determined by the seed."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < n - 1:
        raise ValueError("m must be at least n-1")
    if max_w < 1:
        raise ValueError("max_w must be at least 1")
    rng = SplitMix64(seed)
    ranked = list(range(1, n))
    for i in range(len(ranked) - 1, 0, -1):
        j = rng.below(i + 1)
        ranked[i], ranked[j] = ranked[j], ranked[i]
    order = [0] + ranked
    ends = []
    for j in range(1, n):
        ends.append((order[rng.below(j)], order[j]))
    for _ in range(m - (n - 1)):
        ends.append((rng.below(n), rng.below(n)))
    edges = tuple(Edge(u, v, 1 + rng.below(max_w), i)
                  for i, (u, v) in enumerate(ends))
    return Graph(n, 0, edges)
