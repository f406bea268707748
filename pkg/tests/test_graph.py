import math
import random

import pytest

from nodalpic import (
    CapExceeded,
    DualGraph,
    NodeSet,
    Subcurve,
    bridges,
    complexity,
    component_arithmetic_genus,
    component_codegree,
    connected_subcurves,
    counts,
    essential_connectivity,
    essential_graph,
    is_tree_like,
    partial_normalization,
    subcurve_arithmetic_genus,
    vine_graph,
)
from nodalpic.oracle import spanning_trees_bruteforce

from helpers import (
    complete4,
    four_cycle,
    path3,
    permuted,
    random_connected_graph,
    single_vertex,
    triangle,
)


def test_counts_vine():
    assert counts(vine_graph(1, 1, 3)) == (2, 3, 2, 4)


def test_counts_point():
    assert counts(single_vertex(0)) == (1, 0, 0, 0)


def test_counts_triangle():
    assert counts(triangle()) == (3, 3, 1, 1)


def test_component_arithmetic_genus():
    g = DualGraph.from_names([("A", 1), ("B", 2)], [("A", "A"), ("A", "B")])
    assert component_arithmetic_genus(g, "A") == 2  # one self-node
    assert component_arithmetic_genus(g, "B") == 2  # smooth
    h = DualGraph.from_names([("A", 0)], [("A", "A"), ("A", "A")])
    assert component_arithmetic_genus(h, "A") == 2
    # one-vertex one-loop graph has first Betti number 1: this is the
    # independent justification for the +1 per self-node
    assert counts(single_vertex(0, loops=1)).first_betti == 1
    with pytest.raises(ValueError):
        component_arithmetic_genus(g, "Z")


def test_component_codegree():
    v = vine_graph(2, 3, 4)
    assert component_codegree(v, "C1") == 4
    assert component_codegree(v, "C2") == 4
    assert component_codegree(single_vertex(1, loops=2), "C") == 0
    assert component_codegree(triangle(), "b") == 2


def test_complexity_vine():
    assert complexity(vine_graph(1, 1, 5)) == 5


def test_complexity_trees():
    assert complexity(path3()) == 1
    assert complexity(single_vertex(2, loops=3)) == 1
    star = DualGraph.from_names(
        [("r", 0), ("x", 0), ("y", 0), ("z", 0)],
        [("r", "x"), ("r", "y"), ("r", "z")],
    )
    assert complexity(star) == 1


def test_complexity_triangle_matches_oracle():
    assert complexity(triangle()) == 3 == spanning_trees_bruteforce(triangle())


def test_complexity_complete4():
    assert complexity(complete4()) == 16 == spanning_trees_bruteforce(complete4())


def test_is_tree_like():
    g = DualGraph.from_names([("C1", 1), ("C2", 1)], [("C1", "C2"), ("C1", "C1")])
    assert is_tree_like(g)
    assert not is_tree_like(vine_graph(1, 1, 2))
    assert is_tree_like(single_vertex(0, loops=3))


def test_essential_graph_vine1():
    ess = essential_graph(vine_graph(2, 1, 1))
    assert ess.gamma == 1 and ess.delta == 0
    assert ess.vertices[0].genus == 3


def test_essential_graph_vine2_unchanged():
    g = vine_graph(1, 1, 2)
    assert essential_graph(g) == g


def test_essential_graph_pendant():
    g = DualGraph.from_names(
        [("a", 0), ("b", 0), ("c", 0), ("d", 1)],
        [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")],
    )
    ess = essential_graph(g)
    assert counts(ess)[:2] == (3, 3)
    assert complexity(ess) == 3
    # the pendant genus survives on the merged vertex
    assert sum(v.genus for v in ess.vertices) == 1


def test_essential_graph_idempotent_random():
    rng = random.Random(11)
    for _ in range(40):
        g = random_connected_graph(rng)
        once = essential_graph(g)
        assert essential_graph(once) == once


def test_essential_connectivity():
    assert essential_connectivity(vine_graph(1, 1, 3)) == 3
    assert essential_connectivity(vine_graph(1, 1, 1)) == math.inf
    assert essential_connectivity(four_cycle()) == 2
    assert essential_connectivity(single_vertex(2, loops=2)) == math.inf


def test_essential_connectivity_at_least_two():
    rng = random.Random(7)
    for _ in range(40):
        g = random_connected_graph(rng)
        eps = essential_connectivity(g)
        assert eps == math.inf or eps >= 2


def test_essential_connectivity_matches_bipartition_scan():
    from itertools import combinations

    def brute_min_cut(g):
        best = None
        for size in range(1, g.gamma // 2 + 1):
            for side in combinations(range(g.gamma), size):
                s = set(side)
                crossing = sum(
                    1 for u, v in g.edges if u != v and ((u in s) != (v in s))
                )
                if best is None or crossing < best:
                    best = crossing
        return best

    rng = random.Random(42)
    for _ in range(60):
        g = random_connected_graph(rng)
        ess = essential_graph(g)
        eps = essential_connectivity(g)
        if ess.gamma == 1:
            assert eps == math.inf
        else:
            assert eps == brute_min_cut(ess)


def test_connected_subcurves_vine():
    assert connected_subcurves(vine_graph(1, 1, 2)) == [
        Subcurve((0,)),
        Subcurve((1,)),
    ]


def test_connected_subcurves_triangle():
    assert len(connected_subcurves(triangle())) == 6


def test_connected_subcurves_path():
    got = connected_subcurves(path3())
    expected = [
        Subcurve((0,)),
        Subcurve((1,)),
        Subcurve((2,)),
        Subcurve((0, 1)),
        Subcurve((1, 2)),
    ]
    assert got == expected  # {a, c} induces a disconnected subgraph


def test_connected_subcurves_cap():
    rng = random.Random(0)
    g = random_connected_graph(rng, max_vertices=5)
    with pytest.raises(CapExceeded):
        connected_subcurves(g, max_vertices=g.gamma - 1)


def test_subcurve_genus_vine():
    g = vine_graph(2, 1, 3)
    assert subcurve_arithmetic_genus(g, Subcurve((0,))) == 2


def test_subcurve_genus_full_set_is_genus():
    rng = random.Random(3)
    for _ in range(25):
        g = random_connected_graph(rng)
        full = Subcurve(range(g.gamma))
        assert subcurve_arithmetic_genus(g, full) == counts(g).genus


def test_subcurve_genus_pair_in_triangle():
    assert subcurve_arithmetic_genus(triangle(), Subcurve((0, 1))) == 0


def test_subcurve_genus_disconnected_rejected():
    with pytest.raises(ValueError):
        subcurve_arithmetic_genus(path3(), Subcurve((0, 2)))


def test_partial_normalization_vine_full():
    parts = partial_normalization(vine_graph(2, 1, 2), NodeSet((0, 1)))
    assert [counts(p).genus for p in parts] == [2, 1]
    assert [p.names for p in parts] == [("C1",), ("C2",)]


def test_partial_normalization_empty():
    g = vine_graph(1, 1, 2)
    assert partial_normalization(g, NodeSet()) == [g]


def test_partial_normalization_one_edge():
    g = vine_graph(1, 1, 2)
    parts = partial_normalization(g, NodeSet((0,)))
    assert len(parts) == 1
    c = counts(parts[0])
    assert c.first_betti == 0
    assert c.genus == counts(g).genus - 1


def test_partial_normalization_unknown_edge():
    with pytest.raises(ValueError):
        partial_normalization(vine_graph(1, 1, 2), NodeSet((5,)))


def test_partial_normalization_genus_bookkeeping():
    # sum of component genera = g - |S| + (#components - 1)
    rng = random.Random(17)
    for _ in range(50):
        g = random_connected_graph(rng)
        if g.delta == 0:
            continue
        size = rng.randint(1, g.delta)
        s = NodeSet(rng.sample(range(g.delta), size))
        parts = partial_normalization(g, s)
        total = sum(counts(p).genus for p in parts)
        assert total == counts(g).genus - len(s) + (len(parts) - 1)


def test_complexity_one_iff_tree_like():
    rng = random.Random(23)
    for _ in range(60):
        g = random_connected_graph(rng)
        c = complexity(g)
        assert c >= 1
        assert (c == 1) == is_tree_like(g)
        assert c == spanning_trees_bruteforce(g)


def test_relabeling_invariance():
    rng = random.Random(5)
    for _ in range(25):
        g = random_connected_graph(rng, max_vertices=5)
        order = list(range(g.gamma))
        rng.shuffle(order)
        h = permuted(g, order)
        assert counts(h) == counts(g)
        assert complexity(h) == complexity(g)
        assert essential_connectivity(h) == essential_connectivity(g)


def test_bridges_parallel_edges_are_not_bridges():
    assert bridges(vine_graph(1, 1, 2)) == ()
    assert bridges(vine_graph(1, 1, 1)) == (0,)


def test_graph_validation():
    with pytest.raises(ValueError):
        DualGraph.from_names([("a", 0), ("a", 1)], [("a", "a")])
    with pytest.raises(ValueError):
        DualGraph.from_names([("a", -1)], [])
    with pytest.raises(ValueError):
        DualGraph.from_names([("a", 0)], [("a", "b")])
    with pytest.raises(ValueError):
        DualGraph.from_names([("a", 0), ("b", 0)], [])
