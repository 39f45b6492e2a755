"""Growth-path arborescence solver, O(n log n + m).

The solver grows a path backwards from an uncovered vertex by repeatedly
querying the cheapest edge into the path head. Three cases per pick: the
origin is already on the path (contract the path suffix into one
super-vertex), the origin is an untouched vertex (extend the path), or the
origin's super-vertex is covered (it contains the root or belongs to an
already finalized path), in which case the whole path is finalized and
growth restarts at the lowest-index uncovered vertex.

Per-origin exit lists hold each super-vertex's edges into the path, newest
(closest to the head) at the array end; only the front edge is active in
the ActiveForest. Demoting a front files it in the passive list of its
target's current super-vertex. A contraction shifts member costs, clears
member exit lists whole (their edges became self-loops; entries left in
passive lists elsewhere go stale and are skipped by the in-exit flag), and
folds each member's passive list: every usable entry pays for deleting the
costlier of its origin's first two exit edges, leaving exactly one edge per
origin into the merged vertex. An entry whose edge was already deleted in
the same contraction still pays for one deletion; the round stamp
distinguishes it from a genuinely stale entry, otherwise the fold would
run short and leave a duplicate behind.
"""

from __future__ import annotations

import time
from typing import Optional

from .active_forest import ActiveForest
from .dsu import ContractionDSU
from .errors import Infeasible, SolveTimeout
from .graph import Graph
from .tarjan import SolveResult

_TICK_MASK = 511


class GgstSolver:
    """Construction is the init phase (arrays, DSU, empty forest);
    run() is the execution phase."""

    def __init__(self, graph: Graph, *, deadline: Optional[float] = None,
                 debug: bool = False):
        self.graph = graph
        self.deadline = deadline
        self.debug = debug
        n = graph.n
        self.org = [e.origin for e in graph.edges]
        self.tgt = [e.target for e in graph.edges]
        self.w = [e.weight for e in graph.edges]
        self.cdsu = ContractionDSU(n)
        self.af = ActiveForest(self.cdsu, self.org, self.tgt, self.w)
        self.in_adj: list[list[int]] = [[] for _ in range(n)]
        for e in graph.edges:
            if e.target != graph.root and e.origin != e.target:
                self.in_adj[e.target].append(e.id)
        m = len(graph.edges)
        self.exit_: list[list[int]] = [[] for _ in range(n)]
        self.passive: list[list[int]] = [[] for _ in range(n)]
        self.in_exit = bytearray(m)
        self.del_round = [0] * m

    def _extend(self, u: int) -> None:
        """u becomes the new head: file its incoming edges. Per origin the
        exit-list front must be the unique edge toward u, so a second
        parallel edge keeps only the cheaper; a front pointing at an older
        path vertex is demoted to that target's passive list."""
        cdsu = self.cdsu
        org, tgt, w = self.org, self.tgt, self.w
        exit_ = self.exit_
        in_exit = self.in_exit
        af = self.af
        for eid in self.in_adj[u]:
            x = cdsu.find(org[eid])
            if x == u:
                continue
            el = exit_[x]
            while el and not in_exit[el[-1]]:
                el.pop()
            if el:
                f = el[-1]
                if cdsu.find(tgt[f]) == u:
                    if (w[eid], eid) < (w[f], f):
                        el.pop()
                        in_exit[f] = 0
                        el.append(eid)
                        in_exit[eid] = 1
                        af.replace(x, eid)
                    continue
                self.passive[cdsu.find(tgt[f])].append(f)
                el.append(eid)
                in_exit[eid] = 1
                af.replace(x, eid)
            else:
                el.append(eid)
                in_exit[eid] = 1
                af.insert(eid, x)

    def run(self) -> SolveResult:
        graph = self.graph
        n, root = graph.n, graph.root
        cdsu = self.cdsu
        af = self.af
        org, tgt, w = self.org, self.tgt, self.w
        exit_, passive = self.exit_, self.passive
        in_exit, del_round = self.in_exit, self.del_round
        deadline = self.deadline
        debug = self.debug

        picked: list[int] = []
        pick_costs: list[int] = []
        forest_parent: list[int] = []
        pick_for = [-1] * n
        pending_children: dict[int, list[int]] = {}
        covered = bytearray(n)
        covered[root] = 1
        pos = [-1] * n
        pos_counter = 0
        path: list[int] = []
        path_index: dict[int, int] = {}
        next_start = 0
        contractions = 0
        cycle_len_sum = 0
        round_no = 0
        total = 0
        ticks = 0

        while True:
            ticks += 1
            if not ticks & _TICK_MASK and deadline is not None \
                    and time.monotonic() > deadline:
                raise SolveTimeout
            if not path:
                while next_start < n and covered[cdsu.find(next_start)]:
                    next_start += 1
                if next_start == n:
                    break
                h = next_start
                path.append(h)
                path_index[h] = 0
                pos[h] = pos_counter
                pos_counter += 1
                self._extend(h)
                if debug:
                    self._debug_check(pos)
                continue
            head = path[-1]
            res = af.query_min(head)
            if res is None:
                raise Infeasible
            _owner, eid, cost = res
            idx = len(picked)
            picked.append(eid)
            pick_costs.append(cost)
            forest_parent.append(-1)
            total += cost
            for p in pending_children.pop(head, ()):
                forest_parent[p] = idx
            pick_for[head] = idx
            u = cdsu.find(org[eid])

            if u in path_index:
                # contract the path suffix from u through the head
                round_no += 1
                j = path_index[u]
                members = path[j:]
                del path[j:]
                contractions += 1
                cycle_len_sum += len(members)
                for r in members:
                    del path_index[r]
                    pc = pick_costs[pick_for[r]]
                    if pc:
                        cdsu.add_offset(r, -pc)
                for r in members:
                    el = exit_[r]
                    for e2 in el:
                        in_exit[e2] = 0
                    exit_[r] = []
                    if r in af.active:
                        af.delete(r)
                if debug:
                    for r in members:
                        e = graph.edges[picked[pick_for[r]]]
                        assert cdsu.current_cost(e) == 0, "cycle edge cost not zeroed"
                mem_set = set(members)
                for r in members:
                    bucket = passive[r]
                    passive[r] = []
                    for e2 in bucket:
                        if not in_exit[e2] and del_round[e2] != round_no:
                            continue  # stale: its origin was contracted away
                        b = cdsu.find(org[e2])
                        el = exit_[b]
                        while el and not in_exit[el[-1]]:
                            el.pop()
                        if not el:
                            continue
                        f = el.pop()
                        while el and not in_exit[el[-1]]:
                            el.pop()
                        if not el or cdsu.find(tgt[el[-1]]) not in mem_set:
                            el.append(f)
                            continue
                        g = el[-1]
                        cf = w[f] + cdsu.find_offset(tgt[f])[1]
                        cg = w[g] + cdsu.find_offset(tgt[g])[1]
                        if cg < cf:
                            # the second entry wins: it is already in place
                            # as the new front
                            in_exit[f] = 0
                            del_round[f] = round_no
                            af.replace(b, g)
                        else:
                            in_exit[g] = 0
                            del_round[g] = round_no
                            el.append(f)
                merged = members[0]
                for r in members[1:]:
                    a = merged
                    merged = cdsu.join(a, r)
                    af.merge_front(a, r)
                pending_children[merged] = [pick_for[r] for r in members]
                path.append(merged)
                path_index[merged] = len(path) - 1
                pos[merged] = pos_counter
                pos_counter += 1
                if debug:
                    self._debug_check(pos)
            elif not covered[u]:
                path.append(u)
                path_index[u] = len(path) - 1
                pos[u] = pos_counter
                pos_counter += 1
                self._extend(u)
                if debug:
                    self._debug_check(pos)
            else:
                # covered origin: the path can absorb nothing more
                for r in path:
                    covered[r] = 1
                path = []
                path_index.clear()

        counters = {
            "picks": len(picked),
            "contractions": contractions,
            "summed_cycle_length": cycle_len_sum,
            "af_queries": af.queries,
            "af_deletes": af.deletes,
            "af_merges": af.merges,
            "dsu_visits": cdsu.visits,
        }
        if len(picked) > 2 * n:
            raise AssertionError("picked more than 2n edges")
        return SolveResult(total, picked, forest_parent, counters)

    def _debug_check(self, pos: list[int]) -> None:
        cdsu = self.cdsu
        tgt = self.tgt
        in_exit = self.in_exit
        for b in range(self.graph.n):
            targets = set()
            for e2 in self.exit_[b]:
                if not in_exit[e2]:
                    continue
                t = cdsu.find(tgt[e2])
                assert t not in targets, "exit list holds two edges to one super-vertex"
                targets.add(t)
        self.af.check_invariants({r: pos[r] for r in range(self.graph.n) if pos[r] >= 0})


def ggst_solve(graph: Graph, *, deadline: Optional[float] = None,
               debug: bool = False) -> SolveResult:
    return GgstSolver(graph, deadline=deadline, debug=debug).run()
