import pytest

from nodalpic import Multidegree, vine_graph
from nodalpic.errors import CapExceeded
from nodalpic.oracle import (
    OracleConfig,
    SearchOutcome,
    equivalent_bruteforce,
    semistable_bruteforce,
    spanning_trees_bruteforce,
)

from helpers import complete4, path3, random_connected_graph, single_vertex, triangle


def test_spanning_trees_vine():
    assert spanning_trees_bruteforce(vine_graph(1, 1, 3)) == 3


def test_spanning_trees_tree():
    assert spanning_trees_bruteforce(path3()) == 1
    assert spanning_trees_bruteforce(single_vertex(1, loops=2)) == 1


def test_spanning_trees_complete4():
    assert spanning_trees_bruteforce(complete4()) == 16


def test_spanning_trees_bounds():
    import random

    rng = random.Random(1)
    g = random_connected_graph(rng, max_vertices=6)
    with pytest.raises(CapExceeded):
        spanning_trees_bruteforce(g, OracleConfig(max_vertices=g.gamma - 1, max_edges=1))


def test_equivalent_reflexive():
    g = triangle()
    d = Multidegree((1, 0, -1))
    assert equivalent_bruteforce(g, d, d) is SearchOutcome.FOUND


def test_equivalent_vine_pair():
    g = vine_graph(1, 1, 2)
    assert (
        equivalent_bruteforce(g, Multidegree((1, -1)), Multidegree((-1, 1)))
        is SearchOutcome.FOUND
    )


def test_equivalent_vine_parity_obstruction():
    # on two components with two nodes, the first entry is invariant mod 2
    g = vine_graph(1, 1, 2)
    assert (
        equivalent_bruteforce(g, Multidegree((1, -1)), Multidegree((0, 0)))
        is SearchOutcome.NOT_FOUND_WITHIN_BOUNDS
    )


def test_equivalent_oversized_graph_is_inconclusive():
    names = [f"v{i}" for i in range(8)]
    edges = [(names[i], names[i + 1]) for i in range(7)]
    from nodalpic import DualGraph

    g = DualGraph.from_names([(n, 0) for n in names], edges)
    d = Multidegree([0] * 8)
    assert equivalent_bruteforce(g, d, d) is SearchOutcome.INCONCLUSIVE


def test_semistable_bruteforce_vine():
    got = semistable_bruteforce(vine_graph(1, 1, 2))
    assert got == [Multidegree((0, 2)), Multidegree((1, 1)), Multidegree((2, 0))]


def test_semistable_bruteforce_strict_vine1_empty():
    assert semistable_bruteforce(vine_graph(2, 1, 1), strict=True) == []


def test_semistable_bruteforce_irreducible():
    assert semistable_bruteforce(single_vertex(3)) == [Multidegree((2,))]
    assert semistable_bruteforce(single_vertex(1, loops=2)) == [Multidegree((2,))]


def test_oracle_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(box_radius=0)
