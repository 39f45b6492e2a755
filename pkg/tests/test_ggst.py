import random

import pytest

from conftest import random_instance
from dmst import (Infeasible, brute_force, build_leaf_map, gen_antilemon,
                  gen_er_rooted, ggst_solve, is_arborescence, reconstruct,
                  tarjan_solve)


def test_single_vertex(g_one):
    r = ggst_solve(g_one, debug=True)
    assert r.total_weight == 0 and r.picked == []
    assert r.counters["af_queries"] == 0


def test_tri(g_tri):
    r = ggst_solve(g_tri, debug=True)
    assert r.total_weight == 6
    assert r.counters["contractions"] == 1
    assert r.counters["summed_cycle_length"] == 2
    ids = reconstruct(r, build_leaf_map(r, g_tri), g_tri, debug=True)
    assert sorted(ids) == [0, 2]


def test_cyc_contracts_exactly_once(g_cyc):
    r = ggst_solve(g_cyc, debug=True)
    assert r.total_weight == 11
    assert r.counters["contractions"] == 1
    assert r.counters["summed_cycle_length"] == 2
    ids = reconstruct(r, build_leaf_map(r, g_cyc), g_cyc, debug=True)
    assert is_arborescence(g_cyc, ids)
    assert sum(g_cyc.edges[e].weight for e in ids) == 11


def test_infeasible(g_bad):
    with pytest.raises(Infeasible):
        ggst_solve(g_bad)


def test_oracle_sweep_with_debug_checks():
    rng = random.Random(777)
    for _ in range(600):
        g = random_instance(rng)
        try:
            want, _ = brute_force(g)
        except Infeasible:
            want = None
        try:
            r = ggst_solve(g, debug=True)
            got = r.total_weight
        except Infeasible:
            r, got = None, None
        assert got == want
        if r is None:
            continue
        n = g.n
        assert r.counters["contractions"] <= max(0, n - 1)
        assert r.counters["summed_cycle_length"] < 2 * n
        ops = (r.counters["af_queries"] + r.counters["af_deletes"]
               + r.counters["af_merges"])
        assert ops <= 4 * n
        ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
        assert is_arborescence(g, ids)
        assert sum(g.edges[e].weight for e in ids) == want


def test_matches_tarjan_on_er_instances():
    for seed in range(60):
        g = gen_er_rooted(40, 150, 25, seed)
        assert ggst_solve(g).total_weight == tarjan_solve(g, "sil").total_weight


def test_restart_after_finalize():
    # two separate branches below the root force at least one finalize
    # followed by a restart at a lower-index vertex
    from dmst import parse_edge_list
    g = parse_edge_list("5 4 0\n0 1 1\n1 2 1\n0 3 1\n3 4 1\n")
    r = ggst_solve(g, debug=True)
    assert r.total_weight == 4
    assert r.counters["contractions"] == 0
    ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
    assert sorted(ids) == [0, 1, 2, 3]


def test_antilemon_structure_counters():
    k = 60
    g = gen_antilemon(k)
    r = ggst_solve(g, debug=True)
    assert r.total_weight == k
    assert r.counters["contractions"] >= k - 2
    # all-contraction worst case: <= 2n queries + 2n deletes + n merges
    ops = (r.counters["af_queries"] + r.counters["af_deletes"]
           + r.counters["af_merges"])
    assert ops <= 5 * g.n
    ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
    assert is_arborescence(g, ids)


def test_negative_weights_and_parallel_edges():
    from dmst import Edge, Graph
    g = Graph(3, 0, (Edge(0, 1, -5, 0), Edge(0, 1, -9, 1), Edge(1, 2, -1, 2),
                     Edge(2, 1, -8, 3), Edge(1, 1, -100, 4)))
    r = ggst_solve(g, debug=True)
    assert r.total_weight == brute_force(g)[0] == -10
    ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
    assert sorted(ids) == [1, 2]
