"""Graph model, instance text format, weight sampling, super-root preparation.

The text format is a header line ``n m r`` followed by ``m`` lines ``u v w``.
All vertex indices are 0-based. Self-loops and parallel edges are allowed;
solvers cope with both.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple

from .errors import ParseError

# Weights must stay small enough that a weight plus n accumulated offsets of
# input magnitude fits a signed 64-bit value. Large vertex counts therefore
# demand a tighter weight range.
W_LIMIT = 2**32
W_LIMIT_BIG_N = 2**24
N_SOFT_LIMIT = 2**20


class Edge(NamedTuple):
    origin: int
    target: int
    weight: int
    id: int


@dataclass(frozen=True)
class Graph:
    """Immutable directed multigraph with a designated root.

    ``edges[i].id == i`` always holds; ids are dense in input order.
    ``orig_ids`` is only set by :func:`attach_super_root` and maps the
    renumbered vertices back to the input vertex indices.
    """

    n: int
    root: int
    edges: tuple[Edge, ...]
    orig_ids: tuple[int, ...] | None = None


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer {tok!r}, line {lineno}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m r`` edge-list format.

    Raises ParseError naming the offending line for malformed lines,
    out-of-range indices, and out-of-bound weights.
    """
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("missing header, line 1")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("header must be 'n m r', line 1")
    n, m, root = (_parse_int(t, 1) for t in head)
    if n < 0 or m < 0:
        raise ParseError("negative count in header, line 1")
    if not (n == 0 or 0 <= root < n):
        raise ParseError("root out of range, line 1")
    w_limit = W_LIMIT_BIG_N if n > N_SOFT_LIMIT else W_LIMIT

    edges = []
    lineno = 1
    for raw in lines[1:]:
        if not raw.strip():
            continue
        lineno += 1
        parts = raw.split()
        if len(parts) != 3:
            raise ParseError(f"edge line must be 'u v w', line {lineno}")
        u = _parse_int(parts[0], lineno)
        v = _parse_int(parts[1], lineno)
        w = _parse_int(parts[2], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"index out of range, line {lineno}")
        if abs(w) > w_limit:
            raise ParseError(f"weight out of bound, line {lineno}")
        edges.append(Edge(u, v, w, len(edges)))
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, found {len(edges)}, line {lineno + 1}")
    return Graph(n, root, tuple(edges))


def serialize(graph: Graph) -> str:
    out = [f"{graph.n} {len(graph.edges)} {graph.root}"]
    out.extend(f"{e.origin} {e.target} {e.weight}" for e in graph.edges)
    return "\n".join(out) + "\n"


def parse_plain_edge_list(text: str) -> Graph:
    """Parse a headerless ``u v`` list (konect style).

    Raw vertex labels are arbitrary non-negative integers and get renumbered
    densely in sorted label order. Lines starting with ``%`` or ``#`` are
    skipped. All weights are 0; run :func:`sample_weights` afterwards. The
    root defaults to vertex 0 and is a placeholder until
    :func:`attach_super_root` designates a real one.
    """
    pairs = []
    labels = set()
    lineno = 0
    for raw in text.splitlines():
        lineno += 1
        s = raw.strip()
        if not s or s[0] in "%#":
            continue
        parts = s.split()
        if len(parts) < 2:
            raise ParseError(f"edge line must be 'u v', line {lineno}")
        u = _parse_int(parts[0], lineno)
        v = _parse_int(parts[1], lineno)
        if u < 0 or v < 0:
            raise ParseError(f"index out of range, line {lineno}")
        pairs.append((u, v))
        labels.add(u)
        labels.add(v)
    dense = {lab: i for i, lab in enumerate(sorted(labels))}
    edges = tuple(Edge(dense[u], dense[v], 0, i) for i, (u, v) in enumerate(pairs))
    return Graph(len(dense), 0, edges)


class SplitMix64:
    """Deterministic 64-bit generator.

    State advances by the fixed increment 0x9E3779B97F4A7C15 modulo 2**64;
    each output runs the xorshift-multiply finalizer with constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. The rule is pinned so that
    sequences are bit-identical across platforms and versions.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform value in [0, bound). Plain modulo; the bias at 64 bits is
        far below anything a frequency test at our sample sizes can see."""
        return self.next_u64() % bound


def sample_weights(graph: Graph, seed: int, max_w: int) -> Graph:
    """Replace every weight with a uniform draw from [1, max_w].

    Draws come from SplitMix64 seeded with ``seed``, one per edge in id
    order, so the result is reproducible bit for bit.
    """
    if max_w < 1:
        raise ValueError("max_w must be at least 1")
    rng = SplitMix64(seed)
    edges = tuple(
        Edge(e.origin, e.target, 1 + rng.below(max_w), e.id) for e in graph.edges
    )
    return replace(graph, edges=edges)


def weak_components(n: int, edges: Iterable[Edge]) -> list[int]:
    """Component label per vertex, ignoring edge direction. Labels are the
    smallest vertex index in each component."""
    from .dsu import PlainDSU

    dsu = PlainDSU(n)
    for e in edges:
        dsu.join(e.origin, e.target)
    label: dict[int, int] = {}
    out = [0] * n
    for v in range(n):
        r = dsu.find(v)
        if r not in label:
            label[r] = v
        out[v] = label[r]
    return out


def attach_super_root(graph: Graph) -> Graph:
    """Restrict to the largest weakly connected component and add a fresh
    root r' = n with an edge (r', v, W_INF) to every retained vertex.

    W_INF = (max input |w| + 1) * n where n is the retained vertex count, so
    a super-root edge is picked only when nothing else can reach a vertex.
    Retained vertices are renumbered densely in old index order; the result
    carries the old indices in ``orig_ids``. Ties between equal-sized
    components go to the one containing the smallest vertex index.
    """
    if graph.n == 0:
        raise ValueError("empty graph")
    comp = weak_components(graph.n, graph.edges)
    sizes: dict[int, int] = {}
    for c in comp:
        sizes[c] = sizes.get(c, 0) + 1
    best = max(sizes, key=lambda c: (sizes[c], -c))
    keep = [v for v in range(graph.n) if comp[v] == best]
    dense = {old: new for new, old in enumerate(keep)}
    nk = len(keep)

    max_abs = max((abs(e.weight) for e in graph.edges), default=0)
    w_inf = (max_abs + 1) * nk

    edges = []
    for e in graph.edges:
        if comp[e.origin] == best:
            edges.append(Edge(dense[e.origin], dense[e.target], e.weight, len(edges)))
    for v in range(nk):
        edges.append(Edge(nk, v, w_inf, len(edges)))
    return Graph(nk + 1, nk, tuple(edges), orig_ids=tuple(keep))
