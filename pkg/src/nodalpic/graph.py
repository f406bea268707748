"""Dual graphs of nodal curves and their derived graphs.

A nodal curve is encoded by its dual graph: one vertex per irreducible
component, weighted by the geometric genus of the component's normalization,
and one edge per node.  A node joining a component to itself is a loop.
Parallel edges are kept as distinct, individually indexable objects so that
sets of nodes can be named exactly; the edge index is the position in the
edge tuple and is stable under all operations here.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import CapExceeded
from .intlinalg import bareiss_determinant

DEFAULT_MAX_SUBCURVE_VERTICES = 20


@dataclass(frozen=True)
class Vertex:
    """An irreducible component: a name and the geometric genus of its normalization."""

    name: str
    genus: int


@dataclass(frozen=True)
class Subcurve:
    """A nonempty set of components, stored as sorted vertex indices."""

    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(sorted(set(int(v) for v in vertices))))
        if not self.vertices:
            raise ValueError("a subcurve needs at least one component")


@dataclass(frozen=True)
class NodeSet:
    """A set of nodes, stored as sorted edge indices (parallel edges are distinct)."""

    edges: tuple[int, ...]

    def __init__(self, edges: Iterable[int] = ()):
        items = tuple(sorted(int(e) for e in edges))
        if len(set(items)) != len(items):
            raise ValueError("node set references an edge twice")
        object.__setattr__(self, "edges", items)

    def __len__(self) -> int:
        return len(self.edges)


class Counts(NamedTuple):
    vertices: int
    edges: int
    first_betti: int
    genus: int


@dataclass(frozen=True, init=False)
class DualGraph:
    """Connected vertex-weighted multigraph with loops.

    Vertex order is fixed at construction and determines the coordinate
    order of every multidegree; edge order fixes the node indexing.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[int, int]]):
        verts = tuple(vertices)
        object.__setattr__(self, "vertices", verts)
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))
        self._validate()

    def _validate(self) -> None:
        names = [v.name for v in self.vertices]
        if not names:
            raise ValueError("a dual graph needs at least one vertex")
        if len(set(names)) != len(names):
            raise ValueError("vertex names must be unique")
        for v in self.vertices:
            if v.genus < 0:
                raise ValueError(f"vertex {v.name!r} has negative genus")
        n = len(self.vertices)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
        if not _is_connected(n, self.edges):
            raise ValueError("the dual graph must be connected")

    @classmethod
    def from_names(
        cls,
        vertices: Sequence[tuple[str, int]],
        edges: Sequence[tuple[str, str]] = (),
    ) -> "DualGraph":
        """Build a graph from (name, genus) pairs and name-based edges."""
        verts = tuple(Vertex(name, int(genus)) for name, genus in vertices)
        index = {v.name: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise ValueError("vertex names must be unique")
        idx_edges = []
        for a, b in edges:
            if a not in index:
                raise ValueError(f"edge references unknown vertex {a!r}")
            if b not in index:
                raise ValueError(f"edge references unknown vertex {b!r}")
            idx_edges.append((index[a], index[b]))
        return cls(verts, idx_edges)

    # -- basic structure ---------------------------------------------------

    @property
    def gamma(self) -> int:
        return len(self.vertices)

    @property
    def delta(self) -> int:
        return len(self.edges)

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v.name: i for i, v in enumerate(self.vertices)}

    def index_of(self, vertex: str | int) -> int:
        if isinstance(vertex, int):
            if not 0 <= vertex < self.gamma:
                raise ValueError(f"vertex index {vertex} out of range")
            return vertex
        try:
            return self._index[vertex]
        except KeyError:
            raise ValueError(f"unknown vertex {vertex!r}") from None

    @cached_property
    def loops(self) -> tuple[int, ...]:
        """Number of loops at each vertex."""
        out = [0] * self.gamma
        for u, v in self.edges:
            if u == v:
                out[u] += 1
        return tuple(out)

    @cached_property
    def multiplicity(self) -> tuple[tuple[int, ...], ...]:
        """Non-loop edge multiplicities between vertex pairs."""
        m = [[0] * self.gamma for _ in range(self.gamma)]
        for u, v in self.edges:
            if u != v:
                m[u][v] += 1
                m[v][u] += 1
        return tuple(tuple(row) for row in m)

    @cached_property
    def nonloop_degree(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.multiplicity)

    @cached_property
    def genus(self) -> int:
        b1 = self.delta - self.gamma + 1
        return sum(v.genus for v in self.vertices) + b1


def _is_connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == n


def vine_graph(g1: int, g2: int, delta: int, names: tuple[str, str] = ("C1", "C2")) -> DualGraph:
    """Two components joined by ``delta`` nodes (the basic reducible example)."""
    if delta < 1:
        raise ValueError("a vine needs at least one connecting node")
    return DualGraph.from_names(
        [(names[0], g1), (names[1], g2)],
        [(names[0], names[1])] * delta,
    )


# -- counting ----------------------------------------------------------------


def counts(graph: DualGraph) -> Counts:
    """Vertex count, edge count, first Betti number and arithmetic genus."""
    gamma = graph.gamma
    delta = graph.delta
    b1 = delta - gamma + 1
    return Counts(gamma, delta, b1, graph.genus)


def component_arithmetic_genus(graph: DualGraph, vertex: str | int) -> int:
    """Arithmetic genus of a single component: geometric genus plus self-nodes."""
    i = graph.index_of(vertex)
    return graph.vertices[i].genus + graph.loops[i]


def component_codegree(graph: DualGraph, vertex: str | int) -> int:
    """Number of nodes joining the component to the rest of the curve."""
    i = graph.index_of(vertex)
    return graph.nonloop_degree[i]


def complexity(graph: DualGraph) -> int:
    """Number of spanning trees (loops ignored, parallel edges distinct).

    Computed as the determinant of a reduced Laplacian over exact integers,
    so the result never overflows.
    """
    n = graph.gamma
    if n == 1:
        return 1
    mult = graph.multiplicity
    deg = graph.nonloop_degree
    reduced = [
        [deg[i] if i == j else -mult[i][j] for j in range(1, n)]
        for i in range(1, n)
    ]
    return bareiss_determinant(reduced)


def is_tree_like(graph: DualGraph) -> bool:
    """True when deleting all loops leaves a tree."""
    nonloop = sum(1 for u, v in graph.edges if u != v)
    return nonloop == graph.gamma - 1


# -- bridges, essential graph, connectivity ----------------------------------


def bridges(graph: DualGraph) -> tuple[int, ...]:
    """Indices of non-loop edges whose removal disconnects the graph."""
    out = []
    for idx, (u, v) in enumerate(graph.edges):
        if u == v or graph.multiplicity[u][v] > 1:
            continue
        rest = [e for j, e in enumerate(graph.edges) if j != idx]
        if not _is_connected(graph.gamma, rest):
            out.append(idx)
    return tuple(out)


def essential_graph(graph: DualGraph) -> DualGraph:
    """Delete every loop, then contract every bridge.

    Genera of merged vertices are summed and their names joined, so genus
    bookkeeping survives the contraction.  The operation is idempotent.
    """
    bridge_set = set(bridges(graph))
    parent = list(range(graph.gamma))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in bridge_set:
        u, v = graph.edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    order: list[int] = []
    for i in range(graph.gamma):
        r = find(i)
        if r not in groups:
            groups[r] = []
            order.append(r)
        groups[r].append(i)

    new_id = {r: k for k, r in enumerate(order)}
    new_vertices = []
    for r in order:
        members = groups[r]
        name = "+".join(graph.vertices[i].name for i in members)
        genus = sum(graph.vertices[i].genus for i in members)
        new_vertices.append(Vertex(name, genus))

    new_edges = []
    for idx, (u, v) in enumerate(graph.edges):
        if u == v or idx in bridge_set:
            continue
        a, b = new_id[find(u)], new_id[find(v)]
        # a non-bridge edge never closes up inside a contracted group
        new_edges.append((a, b))
    return DualGraph(tuple(new_vertices), new_edges)


def essential_connectivity(graph: DualGraph) -> int | float:
    """Edge connectivity of the essential graph; infinity when it is a point."""
    ess = essential_graph(graph)
    if ess.gamma == 1:
        return math.inf
    return _global_min_cut([list(row) for row in ess.multiplicity])


def _global_min_cut(weights: list[list[int]]) -> int:
    """Stoer-Wagner global minimum cut with integer weights."""
    n = len(weights)
    w = [row[:] for row in weights]
    active = list(range(n))
    best: int | None = None
    while len(active) > 1:
        start = active[0]
        added = [start]
        rest = [x for x in active if x != start]
        conn = {x: w[start][x] for x in rest}
        while rest:
            nxt = max(rest, key=lambda x: (conn[x], -x))
            rest.remove(nxt)
            added.append(nxt)
            for x in rest:
                conn[x] += w[nxt][x]
        s, t = added[-2], added[-1]
        cut = conn[t]
        if best is None or cut < best:
            best = cut
        for x in active:
            if x != s and x != t:
                w[s][x] += w[t][x]
                w[x][s] = w[s][x]
        active.remove(t)
    assert best is not None
    return best


# -- subcurves ----------------------------------------------------------------


def _induced_connected(graph: DualGraph, members: tuple[int, ...]) -> bool:
    if len(members) == 1:
        return True
    inside = set(members)
    adj: dict[int, list[int]] = {i: [] for i in members}
    for u, v in graph.edges:
        if u != v and u in inside and v in inside:
            adj[u].append(v)
            adj[v].append(u)
    seen = {members[0]}
    queue = deque([members[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(members)


@lru_cache(maxsize=None)
def _subcurve_table(graph: DualGraph, max_vertices: int) -> tuple[tuple[Subcurve, int], ...]:
    """All connected proper subcurves with their arithmetic genera.

    Ordered by size then lexicographically; singletons first, which lets
    stability scans reject unbalanced multidegrees quickly.
    """
    if graph.gamma > max_vertices:
        raise CapExceeded(
            f"subcurve enumeration capped at {max_vertices} vertices "
            f"(graph has {graph.gamma})"
        )
    table = []
    for size in range(1, graph.gamma):
        for combo in combinations(range(graph.gamma), size):
            if _induced_connected(graph, combo):
                table.append((Subcurve(combo), _subcurve_genus(graph, combo)))
    return tuple(table)


def _subcurve_genus(graph: DualGraph, members: tuple[int, ...]) -> int:
    inside = set(members)
    edges_inside = sum(1 for u, v in graph.edges if u in inside and v in inside)
    genera = sum(graph.vertices[i].genus for i in members)
    return genera + edges_inside - len(members) + 1


def connected_subcurves(
    graph: DualGraph, max_vertices: int = DEFAULT_MAX_SUBCURVE_VERTICES
) -> list[Subcurve]:
    """Every nonempty proper subcurve whose induced subgraph is connected."""
    return [z for z, _ in _subcurve_table(graph, max_vertices)]


def subcurve_arithmetic_genus(graph: DualGraph, subcurve: Subcurve) -> int:
    """Arithmetic genus of a connected subcurve, self-nodes included."""
    members = subcurve.vertices
    for i in members:
        if not 0 <= i < graph.gamma:
            raise ValueError(f"subcurve references missing vertex index {i}")
    if not _induced_connected(graph, members):
        raise ValueError("subcurve is not connected")
    return _subcurve_genus(graph, members)


# -- partial normalization -----------------------------------------------------


def partial_normalization(graph: DualGraph, nodes: NodeSet | Iterable[int]) -> list[DualGraph]:
    """Separate the curve at exactly the given nodes.

    Returns the connected components of the result as dual graphs, ordered
    by their smallest original vertex index.  Vertex genera are unchanged;
    normalizing a loop keeps its vertex and lowers the Betti number.
    """
    node_set = nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)
    for e in node_set.edges:
        if not 0 <= e < graph.delta:
            raise ValueError(f"unknown edge index {e}")
    removed = set(node_set.edges)
    kept = [(i, e) for i, e in enumerate(graph.edges) if i not in removed]

    adj: list[list[int]] = [[] for _ in range(graph.gamma)]
    for _, (u, v) in kept:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * graph.gamma
    components: list[list[int]] = []
    for start in range(graph.gamma):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        components.append(sorted(comp))

    out = []
    for comp in components:
        local = {old: new for new, old in enumerate(comp)}
        verts = tuple(graph.vertices[i] for i in comp)
        edges = [
            (local[u], local[v])
            for _, (u, v) in kept
            if u in local and v in local
        ]
        out.append(DualGraph(verts, edges))
    return out
