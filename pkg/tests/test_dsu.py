import random

import pytest

from dmst import ContractionDSU, Edge, PlainDSU


def test_plain_fresh_singletons():
    d = PlainDSU(3)
    assert d.find(2) == 2
    assert d.find(0) == 0


def test_plain_join_basics():
    d = PlainDSU(4)
    assert d.join(0, 0) == 0
    d.join(0, 1)
    assert d.find(0) == d.find(1)
    d.join(1, 2)
    assert d.find(0) == d.find(1) == d.find(2)
    assert d.find(3) != d.find(0)


def test_plain_union_by_size():
    d = PlainDSU(4)
    d.join(0, 1)
    r = d.join(0, 2)  # size-2 set absorbs singleton
    assert d.join(r, 3) == r


def test_plain_single_set_after_n_minus_1_joins():
    d = PlainDSU(10)
    for v in range(9):
        d.join(v, v + 1)
    assert len({d.find(v) for v in range(10)}) == 1


def test_offset_singleton():
    d = ContractionDSU(2)
    e = Edge(0, 1, 10, 0)
    assert d.current_cost(e) == 10
    d.add_offset(1, 0)
    assert d.current_cost(e) == 10
    d.add_offset(1, -3)
    assert d.current_cost(e) == 7


def test_offset_survives_join_with_fresh_set():
    # offsets applied before a join must not leak into the fresh set
    d = ContractionDSU(3)
    d.add_offset(0, -1)
    d.add_offset(0, -1)
    r = d.join(0, 1)
    into_old = Edge(2, 0, 10, 0)
    into_fresh = Edge(2, 1, 10, 1)
    assert d.current_cost(into_old) == 8
    assert d.current_cost(into_fresh) == 10
    d.add_offset(r, -5)
    assert d.current_cost(into_old) == 3
    assert d.current_cost(into_fresh) == 5


def test_add_offset_rejects_non_representative():
    d = ContractionDSU(2)
    r = d.join(0, 1)
    loser = 1 - r
    with pytest.raises(ValueError, match="representative"):
        d.add_offset(loser, -1)


def test_find_offset_idempotent_after_compression():
    d = ContractionDSU(8)
    for v in range(7):
        d.join(v, v + 1)
    d.add_offset(d.find(0), -4)
    first = d.find_offset(7)
    assert d.find_offset(7) == first
    assert d.find(d.find(7)) == d.find(7)


def test_offsets_against_shadow_oracle():
    # naive shadow: explicit per-vertex offset updated on every op
    rng = random.Random(314)
    n = 64
    d = ContractionDSU(n)
    shadow = [0] * n
    members = {v: [v] for v in range(n)}
    for _ in range(10_000):
        op = rng.randrange(3)
        if op == 0:
            a, b = rng.randrange(n), rng.randrange(n)
            ra, rb = d.find(a), d.find(b)
            r = d.join(a, b)
            if ra != rb:
                loser = ra if r == rb else rb
                members[r] = members[r] + members[loser]
                del members[loser]
            assert r == d.find(a) == d.find(b)
        elif op == 1:
            r = rng.choice(list(members))
            delta = rng.randint(-30, 30)
            d.add_offset(r, delta)
            for v in members[r]:
                shadow[v] += delta
        else:
            v = rng.randrange(n)
            w = rng.randint(-100, 100)
            assert d.current_cost(Edge(0, v, w, 0)) == w + shadow[v]
    for v in range(n):
        assert d.current_cost(Edge(0, v, 5, 0)) == 5 + shadow[v]


def test_find_visit_counter_stays_near_linear():
    rng = random.Random(2718)
    n = 100_000
    m = 1_000_000
    d = ContractionDSU(n)
    for v in range(1, n):
        d.join(rng.randrange(v), v)
    d.visits = 0
    for _ in range(m):
        d.find(rng.randrange(n))
    assert d.visits <= 4 * m
