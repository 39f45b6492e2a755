"""Arborescence reconstruction from the picked-edge log.

The picks accepted by a solver form a forest: a pick becomes the child of
the later pick that absorbed its target super-vertex during a contraction.
Walking the picks newest to oldest, every undeleted pick is a forest root
and belongs to the answer; committing to it deletes the chain of earlier
picks it supersedes, from the leaf of its original target upward.
"""

from __future__ import annotations

from .graph import Graph
from .tarjan import SolveResult


def build_leaf_map(result: SolveResult, graph: Graph) -> dict[int, int]:
    """For each non-root vertex, the index of the earliest pick whose
    original target is that vertex."""
    leaf_of: dict[int, int] = {}
    edges = graph.edges
    for i, eid in enumerate(result.picked):
        t = edges[eid].target
        if t not in leaf_of:
            leaf_of[t] = i
    for v in range(graph.n):
        if v != graph.root and v not in leaf_of:
            raise RuntimeError(f"no picked edge targets vertex {v}")
    return leaf_of


def reconstruct(result: SolveResult, leaf_of: dict[int, int], graph: Graph,
                *, debug: bool = False) -> list[int]:
    """Edge ids of the minimum arborescence, exactly n-1 of them.

    Super-root sentinel edges are emitted like any other edge; callers that
    prepared the instance themselves strip them afterwards.
    """
    picked = result.picked
    fp = result.forest_parent
    edges = graph.edges
    deleted = [False] * len(picked)
    out: list[int] = []
    visits = 0
    for i in range(len(picked) - 1, -1, -1):
        if deleted[i]:
            continue
        eid = picked[i]
        out.append(eid)
        deleted[i] = True
        cur = leaf_of[edges[eid].target]
        while cur != -1 and not deleted[cur]:
            deleted[cur] = True
            visits += 1
            cur = fp[cur]
    if debug:
        if visits > len(picked):
            raise RuntimeError("reconstruction revisited a forest node")
        if len(out) != graph.n - 1:
            raise RuntimeError(f"emitted {len(out)} edges, expected {graph.n - 1}")
        if not is_arborescence(graph, out):
            raise RuntimeError("emitted edge set is not an arborescence")
        if sum(edges[eid].weight for eid in out) != result.total_weight:
            raise RuntimeError("emitted weight differs from total_weight")
    return out


def is_arborescence(graph: Graph, edge_ids) -> bool:
    """True iff edge_ids form a spanning arborescence rooted at graph.root:
    in-degree 1 everywhere but the root, and everything reachable."""
    n, root = graph.n, graph.root
    ids = list(edge_ids)
    if len(ids) != n - 1:
        return False
    indeg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid in ids:
        e = graph.edges[eid]
        indeg[e.target] += 1
        adj[e.origin].append(e.target)
    if indeg[root] != 0:
        return False
    if any(indeg[v] != 1 for v in range(n) if v != root):
        return False
    seen = [False] * n
    seen[root] = True
    stack = [root]
    reached = 1
    while stack:
        for t in adj[stack.pop()]:
            if not seen[t]:
                seen[t] = True
                reached += 1
                stack.append(t)
    return reached == n
