"""Stratification of the degree-(g-1) compactified Jacobian and Neron-fiber
combinatorics.

Points of the canonical degree-(g-1) compactification correspond to stable
multidegrees on partial normalizations of the curve, so the whole space is
stratified by pairs (node set S, stable multidegree on the curve separated
at S).  This module enumerates those strata, picks out the maximal ones,
classifies the compactification against the Neron model and implements the
two-component boundary specialization rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .classgroup import (
    ClassLabel,
    class_representatives,
    class_of,
    degree_class_group,
)
from .errors import CapExceeded
from .graph import (
    DualGraph,
    NodeSet,
    complexity,
    is_tree_like,
    partial_normalization,
)
from .multidegree import Multidegree
from .stability import enumerate_stable_disconnected

DEFAULT_MAX_STRATA_EDGES = 12


@dataclass(frozen=True)
class Stratum:
    """One stratum: normalized nodes, a stable multidegree, and its dimension.

    The multidegree is indexed by the parent curve's vertex order.
    """

    nodes: NodeSet
    multidegree: Multidegree
    dim: int


class PicardType(Enum):
    NERON = "N-type"
    DEGENERATION = "D-type"


@dataclass(frozen=True)
class TypeClassification:
    kind: PicardType
    tree_like: bool
    component_count: int
    complexity: int
    component_rule_validated: bool


@dataclass(frozen=True)
class NeronFiber:
    """Closed Neron fiber in one degree: one component per multidegree class."""

    degree: int
    components: tuple[tuple[ClassLabel, Multidegree], ...]
    count: int


class DGeneralVerdict(Enum):
    ALL_CURVES = "all-curves"
    TREE_LIKE_ONLY = "tree-like-only"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BoundaryPoint:
    """Limit point in the deepest stratum reached from a strictly semistable
    multidegree on a two-component curve."""

    stratum: Stratum
    twisted_vertex: str
    twisted_branches: tuple[int, ...]
    description: str


def strata(graph: DualGraph, max_edges: int = DEFAULT_MAX_STRATA_EDGES) -> list[Stratum]:
    """Every stratum (S, d), ordered by |S|, then S, then d."""
    if graph.delta > max_edges:
        raise CapExceeded(
            f"stratum enumeration capped at {max_edges} edges (graph has {graph.delta})"
        )
    g = graph.genus
    out: list[Stratum] = []
    for size in range(graph.delta + 1):
        for combo in combinations(range(graph.delta), size):
            nodes = NodeSet(combo)
            parts = partial_normalization(graph, nodes)
            dim = g - size + (len(parts) - 1)
            for d in enumerate_stable_disconnected(parts, vertex_order=graph.names):
                out.append(Stratum(nodes, d, dim))
    return out


def irreducible_components(
    graph: DualGraph, max_edges: int = DEFAULT_MAX_STRATA_EDGES
) -> list[Stratum]:
    """Maximal strata: the S = {} strata when the curve itself carries stable
    multidegrees, otherwise the strata of maximal dimension."""
    all_strata = strata(graph, max_edges)
    top = [s for s in all_strata if not s.nodes.edges]
    if top:
        return top
    best = max(s.dim for s in all_strata)
    return [s for s in all_strata if s.dim == best]


def component_rule_validated(graph: DualGraph) -> bool:
    """Whether the maximal-stratum rule has a closed-form confirmation.

    Irreducible curves, two smooth components, and tree-like curves all have
    known component counts; anything else is reported as heuristic.
    """
    if graph.gamma == 1 or is_tree_like(graph):
        return True
    return graph.gamma == 2 and sum(graph.loops) == 0


def classify_type_g_minus_1(
    graph: DualGraph, max_edges: int = DEFAULT_MAX_STRATA_EDGES
) -> TypeClassification:
    """Neron-type exactly for tree-like curves; evidence: component count vs
    spanning-tree count."""
    tree = is_tree_like(graph)
    comps = irreducible_components(graph, max_edges)
    return TypeClassification(
        kind=PicardType.NERON if tree else PicardType.DEGENERATION,
        tree_like=tree,
        component_count=len(comps),
        complexity=complexity(graph),
        component_rule_validated=component_rule_validated(graph),
    )


def neron_fiber(graph: DualGraph, degree: int = 0) -> NeronFiber:
    """Component labels and canonical representatives in one total degree."""
    dcg = degree_class_group(graph)
    reps = class_representatives(dcg, degree)
    components = tuple((class_of(dcg, rep), rep) for rep in reps)
    return NeronFiber(degree=degree, components=components, count=dcg.order)


def d_general_verdict(g: int, d: int, graph: DualGraph | None = None) -> DGeneralVerdict:
    """Whether every stable curve of genus g admits a Neron-type degree-d
    compactification.

    The coprimality test gcd(d-g+1, 2g-2) = 1 answers for all curves at
    once; failing that, tree-like curves still qualify, and the general
    boundary of the d-general locus is outside this library's scope.
    """
    if g < 2:
        raise ValueError("the classification assumes genus at least 2")
    if math.gcd(d - g + 1, 2 * g - 2) == 1:
        return DGeneralVerdict.ALL_CURVES
    if graph is not None and is_tree_like(graph):
        return DGeneralVerdict.TREE_LIKE_ONLY
    return DGeneralVerdict.UNKNOWN


def specialize_two_component(graph: DualGraph, d: Multidegree) -> BoundaryPoint:
    """Limit of a strictly semistable multidegree on a two-component curve.

    The limit lies in the deepest stratum (all nodes normalized, multidegree
    (g1-1, g2-1)); the component carrying the excess degree has its
    restriction twisted down by all its node branches.
    """
    if graph.gamma != 2:
        raise ValueError("the specialization rule is only written out for two components")
    if sum(graph.loops) != 0:
        raise ValueError("the two components must be smooth (no self-nodes)")
    if len(d) != 2:
        raise ValueError("expected a two-entry multidegree")
    delta = graph.delta
    if delta < 2:
        raise ValueError(
            "with a single node the curve has no interior strata and no "
            "strictly semistable limit to take"
        )
    g1 = graph.vertices[0].genus
    g2 = graph.vertices[1].genus
    low_first = Multidegree((g1 - 1, g2 - 1 + delta))
    low_second = Multidegree((g1 - 1 + delta, g2 - 1))
    if d == low_first:
        twisted = 1
    elif d == low_second:
        twisted = 0
    else:
        raise ValueError(f"{d} is not strictly semistable on this curve")
    all_nodes = NodeSet(range(delta))
    stratum = Stratum(
        nodes=all_nodes,
        multidegree=Multidegree((g1 - 1, g2 - 1)),
        dim=graph.genus - delta + 1,
    )
    name = graph.vertices[twisted].name
    other = graph.vertices[1 - twisted].name
    return BoundaryPoint(
        stratum=stratum,
        twisted_vertex=name,
        twisted_branches=tuple(range(delta)),
        description=(
            f"restriction to {other} kept; restriction to {name} twisted down "
            f"by its {delta} node branches"
        ),
    )


def stratum_description(graph: DualGraph, stratum: Stratum) -> str:
    """Human-readable account of a stratum as line bundles on a blow-up."""
    d = stratum.multidegree
    if not stratum.nodes.edges:
        return f"line bundles of multidegree {d} on the curve itself"
    edge_names = ", ".join(edge_name(graph, e) for e in stratum.nodes.edges)
    return (
        f"line bundles on the blow-up at nodes [{edge_names}] with degree 1 on "
        f"each exceptional curve and multidegree {d} on the normalization"
    )


def edge_name(graph: DualGraph, e: int) -> str:
    u, v = graph.edges[e]
    return f"e{e}:{graph.vertices[u].name}-{graph.vertices[v].name}"
