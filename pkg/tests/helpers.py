"""Shared graph builders and random generators for the test suite."""

from __future__ import annotations

import random

from nodalpic import DualGraph, Multidegree


def triangle(genera=(0, 0, 0)) -> DualGraph:
    return DualGraph.from_names(
        [("a", genera[0]), ("b", genera[1]), ("c", genera[2])],
        [("a", "b"), ("b", "c"), ("a", "c")],
    )


def path3(genera=(0, 0, 0)) -> DualGraph:
    return DualGraph.from_names(
        [("a", genera[0]), ("b", genera[1]), ("c", genera[2])],
        [("a", "b"), ("b", "c")],
    )


def four_cycle() -> DualGraph:
    return DualGraph.from_names(
        [("a", 0), ("b", 0), ("c", 0), ("d", 0)],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    )


def complete4() -> DualGraph:
    names = ["a", "b", "c", "d"]
    edges = [(x, y) for i, x in enumerate(names) for y in names[i + 1 :]]
    return DualGraph.from_names([(n, 0) for n in names], edges)


def single_vertex(genus=0, loops=0, name="C") -> DualGraph:
    return DualGraph.from_names([(name, genus)], [(name, name)] * loops)


def random_connected_graph(
    rng: random.Random, max_vertices=6, max_edges=10, max_genus=3
) -> DualGraph:
    n = rng.randint(1, max_vertices)
    vertices = [(f"v{i}", rng.randint(0, max_genus)) for i in range(n)]
    edges = [(f"v{rng.randrange(i)}", f"v{i}") for i in range(1, n)]
    room = max_edges - len(edges)
    for _ in range(rng.randint(0, room) if room > 0 else 0):
        a, b = rng.randrange(n), rng.randrange(n)
        edges.append((f"v{a}", f"v{b}"))
    return DualGraph.from_names(vertices, edges)


def permuted(graph: DualGraph, new_to_old: list[int]) -> DualGraph:
    """Same curve with vertices listed in a different order."""
    vertices = [
        (graph.vertices[old].name, graph.vertices[old].genus) for old in new_to_old
    ]
    edges = [
        (graph.vertices[u].name, graph.vertices[v].name) for u, v in graph.edges
    ]
    return DualGraph.from_names(vertices, edges)


def permuted_md(d: Multidegree, new_to_old: list[int]) -> Multidegree:
    return Multidegree(d[old] for old in new_to_old)


def random_multidegree(rng: random.Random, length: int, total: int, spread=4) -> Multidegree:
    entries = [rng.randint(-spread, spread) for _ in range(length - 1)]
    entries.append(total - sum(entries))
    return Multidegree(entries)
