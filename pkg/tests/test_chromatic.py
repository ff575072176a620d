import random

import pytest

from conftest import random_digraph
from lapmoments import (
    Digraph,
    arc_reversal_descent,
    critical_core,
    dichromatic_number,
    find_acyclic_partition,
    is_critical_vertex,
    le_via_degrees,
    standard_family,
    transitive_tournament,
)
from lapmoments.digraph import induced_subdigraph, is_acyclic, is_weakly_connected


def test_partition_examples():
    tt5 = transitive_tournament(5)
    part = find_acyclic_partition(tt5, 1)
    assert part is not None and part.parts == (tuple(range(5)),)

    c4 = standard_family("directed_cycle", 4)
    assert find_acyclic_partition(c4, 1) is None
    two = find_acyclic_partition(c4, 2)
    assert two is not None
    for p in two.parts:
        assert is_acyclic(induced_subdigraph(c4, p))

    assert find_acyclic_partition(standard_family("bidirected_complete", 4), 3) is None


def test_partition_is_deterministic():
    rng = random.Random(9)
    for _ in range(20):
        g = random_digraph(rng, 6)
        r = dichromatic_number(g)
        assert find_acyclic_partition(g, r) == find_acyclic_partition(g, r)


def test_partition_parts_disjoint_exhaustive():
    rng = random.Random(10)
    for _ in range(40):
        g = random_digraph(rng, rng.randint(2, 7))
        part = find_acyclic_partition(g, dichromatic_number(g))
        flat = sorted(v for p in part.parts for v in p)
        assert flat == list(range(g.n))


def test_dichromatic_values():
    for r in (1, 2, 3, 5):
        assert dichromatic_number(standard_family("bidirected_complete", max(r, 1))) == max(r, 1)
    assert dichromatic_number(standard_family("bidirected_cycle", 5)) == 3
    assert dichromatic_number(standard_family("bidirected_cycle", 4)) == 2
    for n in (2, 3, 6):
        assert dichromatic_number(standard_family("directed_cycle", n)) == 2
    assert dichromatic_number(transitive_tournament(6)) == 1


def test_chi_definition_boundaries():
    rng = random.Random(12)
    for _ in range(30):
        g = random_digraph(rng, rng.randint(2, 6))
        chi = dichromatic_number(g)
        assert find_acyclic_partition(g, chi) is not None
        if chi > 1:
            assert find_acyclic_partition(g, chi - 1) is None


def test_vertex_deletion_drops_chi_by_at_most_one():
    rng = random.Random(14)
    for _ in range(25):
        g = random_digraph(rng, rng.randint(2, 6))
        chi = dichromatic_number(g)
        for v in range(g.n):
            rest = [u for u in range(g.n) if u != v]
            sub_chi = dichromatic_number(induced_subdigraph(g, rest))
            assert sub_chi in (chi, chi - 1)


def test_critical_vertices():
    k4 = standard_family("bidirected_complete", 4)
    assert all(is_critical_vertex(k4, v) for v in range(4))

    pendant = Digraph(4, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (3, 0)])
    assert not is_critical_vertex(pendant, 3)

    c4 = standard_family("directed_cycle", 4)
    assert all(is_critical_vertex(c4, v) for v in range(4))

    with pytest.raises(ValueError):
        is_critical_vertex(Digraph(1), 0)


def test_critical_core():
    g = Digraph(5, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (3, 0), (4, 3)])
    core, labels = critical_core(g)
    assert labels == (0, 1, 2)
    assert core == standard_family("bidirected_complete", 3)

    c5 = standard_family("directed_cycle", 5)
    core, labels = critical_core(c5)
    assert labels == tuple(range(5))

    acyclic = transitive_tournament(4)
    core, labels = critical_core(acyclic)
    assert core.n == 1


def test_critical_core_satisfies_degree_bounds():
    rng = random.Random(18)
    for _ in range(20):
        g = random_digraph(rng, rng.randint(2, 6))
        core, labels = critical_core(g)
        r = dichromatic_number(g)
        assert dichromatic_number(core) == r
        if core.n >= 2:
            for v in range(core.n):
                assert is_critical_vertex(core, v)
                assert core.rows[v].bit_count() >= r - 1
                assert core.cols[v].bit_count() >= r - 1


def test_descent_examples():
    g = Digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert le_via_degrees(g) == 6
    out = arc_reversal_descent(g, [0, 1, 2])
    assert le_via_degrees(out) == 4

    # in-path attached to the bidirected triangle: already minimal, untouched
    k3 = standard_family("bidirected_complete", 3)
    minimizer = Digraph(6, list(k3.arcs()) + [(3, 4), (4, 5), (5, 0)])
    assert le_via_degrees(minimizer) == 21
    assert arc_reversal_descent(minimizer, [0, 1, 2]) == minimizer


def test_descent_rejects_bad_core():
    g = standard_family("bidirected_complete", 3)
    with pytest.raises(ValueError, match="core"):
        arc_reversal_descent(g, [0])  # single vertex has chi 1, g has chi 3


def test_descent_never_increases_energy():
    rng = random.Random(21)
    done = 0
    while done < 25:
        g = random_digraph(rng, rng.randint(3, 7))
        if not is_weakly_connected(g):
            continue
        _, labels = critical_core(g)
        out = arc_reversal_descent(g, labels)
        assert le_via_degrees(out) <= le_via_degrees(g)
        done += 1


def test_descent_strictly_decreases_for_degree_two_tails():
    # a reversal whose tail had out-degree >= 2 drops the energy by at least 2
    g = Digraph(3, [(0, 1), (0, 2)])
    out = arc_reversal_descent(g, [0])
    assert le_via_degrees(out) < le_via_degrees(g)
