import random

import pytest

from conftest import SOLVERS, random_instance
from dmst import (Infeasible, brute_force, build_leaf_map, ggst_solve,
                  is_arborescence, reconstruct, tarjan_solve)
from dmst.tarjan import SolveResult


def test_single_vertex(g_one):
    r = tarjan_solve(g_one, "sil")
    leaf = build_leaf_map(r, g_one)
    assert leaf == {}
    assert reconstruct(r, leaf, g_one, debug=True) == []


def test_tri_recovers_unique_optimum(g_tri):
    for solve in SOLVERS.values():
        r = solve(g_tri)
        leaf = build_leaf_map(r, g_tri)
        ids = reconstruct(r, leaf, g_tri, debug=True)
        assert sorted(ids) == [0, 2]
        assert sum(g_tri.edges[e].weight for e in ids) == 6


def test_tri_leaf_map_uses_earliest_pick(g_tri):
    r = tarjan_solve(g_tri, "sil")
    # picks [2, 3, 0]: vertex 2 first targeted by pick 0, vertex 1 by pick 1
    assert build_leaf_map(r, g_tri) == {2: 0, 1: 1}


def test_cyc_leaf_map_points_at_cycle_picks(g_cyc):
    for solve in SOLVERS.values():
        r = solve(g_cyc)
        leaf = build_leaf_map(r, g_cyc)
        # first two picks are the weight-1 cycle edges, one per vertex
        assert sorted(leaf) == [1, 2]
        assert sorted(leaf.values()) == [0, 1]


def test_cyc_emits_a_valid_optimum(g_cyc):
    for name, solve in SOLVERS.items():
        r = solve(g_cyc)
        ids = reconstruct(r, build_leaf_map(r, g_cyc), g_cyc, debug=True)
        assert is_arborescence(g_cyc, ids), name
        assert sum(g_cyc.edges[e].weight for e in ids) == 11


def test_missing_target_is_reported(g_tri):
    fake = SolveResult(total_weight=0, picked=[0], forest_parent=[-1])
    with pytest.raises(RuntimeError, match="no picked edge targets vertex 2"):
        build_leaf_map(fake, g_tri)


def test_is_arborescence_rejects_bad_sets(g_tri):
    assert is_arborescence(g_tri, [0, 2])
    assert not is_arborescence(g_tri, [0])          # too few
    assert not is_arborescence(g_tri, [0, 1, 2])    # too many
    assert not is_arborescence(g_tri, [2, 3])       # root unreachable
    assert not is_arborescence(g_tri, [0, 3])       # in-degree 2 on vertex 1


def test_random_instances_reconstruct_exactly():
    rng = random.Random(550)
    checked = 0
    while checked < 400:
        g = random_instance(rng)
        try:
            want, _ = brute_force(g)
        except Infeasible:
            continue
        for solve in SOLVERS.values():
            r = solve(g)
            ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
            assert len(ids) == g.n - 1
            assert len(set(ids)) == len(ids)
            assert is_arborescence(g, ids)
            assert sum(g.edges[e].weight for e in ids) == want
        checked += 1


def test_visits_stay_linear_in_picked():
    from dmst import gen_er_rooted
    g = gen_er_rooted(500, 2000, 50, 3)
    for solve in (lambda x: tarjan_solve(x, "sil"), ggst_solve):
        r = solve(g)
        # debug mode enforces the node-visit bound internally
        ids = reconstruct(r, build_leaf_map(r, g), g, debug=True)
        assert len(ids) == g.n - 1
