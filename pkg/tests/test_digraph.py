import random

import pytest

from conftest import random_digraph
from lapmoments import (
    Digraph,
    adjacency_moment,
    from_edge_list,
    induced_subdigraph,
    is_acyclic,
    is_weakly_connected,
    join,
    standard_family,
    to_dot,
    to_edge_list,
    transitive_tournament,
    walk_profile,
)
from lapmoments.digraph import arc_from_position, arc_position


def test_construction_basics():
    g = Digraph(2, [(0, 1), (1, 0)])
    assert g.n == 2 and g.arc_count == 2
    assert Digraph(1).arc_count == 0
    assert list(g.arcs()) == [(0, 1), (1, 0)]


def test_construction_rejections():
    with pytest.raises(ValueError, match="loop"):
        Digraph(3, [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(ValueError, match="out of range"):
        Digraph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Digraph(0)


def test_walk_profile_bidirected_k3():
    g = standard_family("bidirected_complete", 3)
    p = walk_profile(g)
    assert p.out_deg == (2, 2, 2)
    assert p.c2_per_vertex == (2, 2, 2)
    assert p.c2_total == 6
    assert p.c3_total == 6


def test_walk_profile_directed_cycle():
    p = walk_profile(standard_family("directed_cycle", 3))
    assert p.out_deg == (1, 1, 1)
    assert p.c2_total == 0
    assert p.c3_total == 3


def test_walk_profile_empty():
    p = walk_profile(Digraph(4))
    assert p.out_deg == (0, 0, 0, 0)
    assert p.c2_total == 0 and p.c3_total == 0


def _check_profile(g):
    p = walk_profile(g)
    assert sum(p.out_deg) == sum(p.in_deg) == g.arc_count
    assert p.c2_total == sum(p.c2_per_vertex)
    assert p.c2_total % 2 == 0
    assert p.c3_total % 3 == 0
    assert all(
        c <= min(o, i) for c, o, i in zip(p.c2_per_vertex, p.out_deg, p.in_deg)
    )
    # trace cross-check against the adjacency moments
    assert p.c2_total == adjacency_moment(g, 2)
    assert p.c3_total == adjacency_moment(g, 3)
    if is_acyclic(g):
        assert p.c2_total == 0 and p.c3_total == 0


def test_walk_profile_invariants_random():
    rng = random.Random(7)
    for _ in range(1000):
        _check_profile(random_digraph(rng, rng.randint(2, 8)))


def test_walk_profile_invariants_exhaustive_n_le_4():
    for n in (2, 3, 4):
        for code in range(1 << (n * (n - 1))):
            _check_profile(Digraph.from_arc_code(n, code))


def test_acyclicity():
    assert is_acyclic(transitive_tournament(4))
    assert not is_acyclic(Digraph(2, [(0, 1), (1, 0)]))
    assert is_acyclic(Digraph(1))


def test_weak_connectivity():
    star = Digraph(5, [(i, 4) for i in range(4)])
    assert is_weakly_connected(star)
    two_digons = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert not is_weakly_connected(two_digons)
    assert is_weakly_connected(Digraph(1))


def test_induced_subdigraph():
    k4 = standard_family("bidirected_complete", 4)
    assert induced_subdigraph(k4, [0, 2, 3]) == standard_family("bidirected_complete", 3)
    c4 = standard_family("directed_cycle", 4)
    assert list(induced_subdigraph(c4, [0, 1]).arcs()) == [(0, 1)]
    assert induced_subdigraph(c4, range(4)) == c4
    with pytest.raises(ValueError, match="nonempty"):
        induced_subdigraph(c4, [])


def test_join():
    v = Digraph(1)
    assert join(v, v) == Digraph(2, [(0, 1), (1, 0)])
    k2 = standard_family("bidirected_complete", 2)
    assert join(k2, v) == standard_family("bidirected_complete", 3)


def test_join_is_associative_with_block_layout():
    rng = random.Random(3)
    for _ in range(20):
        a = random_digraph(rng, rng.randint(1, 4))
        b = random_digraph(rng, rng.randint(1, 4))
        c = random_digraph(rng, rng.randint(1, 4))
        assert join(join(a, b), c) == join(a, join(b, c))


def test_join_profile_shift():
    rng = random.Random(11)
    for _ in range(40):
        g1 = random_digraph(rng, rng.randint(1, 5))
        g2 = random_digraph(rng, rng.randint(1, 5))
        p1 = walk_profile(g1)
        p = walk_profile(join(g1, g2))
        for v in range(g1.n):
            assert p.out_deg[v] == p1.out_deg[v] + g2.n
            assert p.in_deg[v] == p1.in_deg[v] + g2.n
            assert p.c2_per_vertex[v] == p1.c2_per_vertex[v] + g2.n


def test_arc_code_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        g = random_digraph(rng, rng.randint(2, 7))
        assert Digraph.from_arc_code(g.n, g.arc_code()) == g
    for n in (2, 3, 5):
        positions = set()
        for u in range(n):
            for v in range(n):
                if u != v:
                    p = arc_position(n, u, v)
                    assert arc_from_position(n, p) == (u, v)
                    positions.add(p)
        assert positions == set(range(n * (n - 1)))


def test_edge_list_round_trip():
    rng = random.Random(13)
    for _ in range(30):
        g = random_digraph(rng, rng.randint(1, 7))
        assert from_edge_list(to_edge_list(g)) == g


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 1"):
        from_edge_list("")
    with pytest.raises(ValueError, match="line 3"):
        from_edge_list("3 2\n0 1\n1 2 9\n")
    with pytest.raises(ValueError, match="declares 2 arcs"):
        from_edge_list("3 2\n0 1\n")


def test_dot_export():
    g = Digraph(2, [(0, 1)])
    dot = to_dot(g)
    assert dot.startswith("digraph")
    assert "0 -> 1;" in dot
    assert dot.count("->") == 1
