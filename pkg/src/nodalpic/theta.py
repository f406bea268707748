"""Theta-divisor strata of the degree-(g-1) compactification, symbolically.

The effective locus inside each stratum is described by W-loci of the
partial normalizations; cohomology of actual line bundles is not computable
from the dual graph, so strata are reported as symbolic descriptors together
with the dimensions the degree bounds determine.  Where no dimension clause
applies, the dimension stays unknown rather than extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    DualGraph,
    component_arithmetic_genus,
    component_codegree,
    partial_normalization,
)
from .multidegree import Multidegree
from .picard import Stratum, strata, DEFAULT_MAX_STRATA_EDGES
from .stability import check_stability


@dataclass(frozen=True)
class WComponent:
    """One irreducible piece of a W-locus, with its dimension when known."""

    description: str
    dim: int | None
    empty: bool = False
    translate: str | None = None


@dataclass(frozen=True)
class WAnalysis:
    """Dimension report for the locus of effective line bundles in one
    multidegree."""

    multidegree: Multidegree
    w_dim: int | None
    whole_picard: bool
    abel_dim_bound: int | None
    abel_dim_exact: bool
    clause: str | None
    components: tuple[WComponent, ...] = field(default=())


@dataclass(frozen=True)
class ThetaStratum:
    base: Stratum
    description: str
    dim: int | None


def w_dimension(graph: DualGraph, d: Multidegree) -> WAnalysis:
    """Dimension of the effective locus and of the Abel image, when determined.

    Three regimes are decidable from the combinatorics alone: some component
    carries degree at least its arithmetic genus plus codegree (the locus is
    the whole Picard variety); total degree g-1 but not semistable (same
    dimension, smaller Abel image); total degree g-1 and semistable (both
    loci have dimension g-1).
    """
    if len(d) != graph.gamma:
        raise ValueError(f"multidegree has {len(d)} entries, graph has {graph.gamma}")
    if d.total < 1:
        raise ValueError("the effective-locus analysis needs total degree at least 1")
    g = graph.genus
    excess = any(
        d[i] >= component_arithmetic_genus(graph, i) + component_codegree(graph, i)
        for i in range(graph.gamma)
    )
    if excess:
        return WAnalysis(
            multidegree=d,
            w_dim=g,
            whole_picard=True,
            abel_dim_bound=d.total - 1,
            abel_dim_exact=False,
            clause="component-degree-excess",
        )
    if d.total == g - 1:
        if check_stability(graph, d).is_semistable:
            return WAnalysis(
                multidegree=d,
                w_dim=g - 1,
                whole_picard=False,
                abel_dim_bound=g - 1,
                abel_dim_exact=True,
                clause="semistable",
            )
        return WAnalysis(
            multidegree=d,
            w_dim=g,
            whole_picard=True,
            abel_dim_bound=g - 2,
            abel_dim_exact=False,
            clause="not-semistable",
        )
    return WAnalysis(
        multidegree=d,
        w_dim=None,
        whole_picard=False,
        abel_dim_bound=None,
        abel_dim_exact=False,
        clause=None,
    )


def theta_strata(
    graph: DualGraph, max_edges: int = DEFAULT_MAX_STRATA_EDGES
) -> list[ThetaStratum]:
    """One effective-locus stratum per Picard stratum.

    Each stratum carries a stable multidegree on every connected piece of the
    partial normalization, so the per-piece W-loci have dimension one less
    than the piece's Picard variety and the stratum dimension drops by
    exactly one; pieces of genus zero contribute nothing (their theta locus
    is empty).
    """
    out = []
    for stratum in strata(graph, max_edges):
        parts = partial_normalization(graph, stratum.nodes)
        description, known = _describe(graph, stratum, parts)
        dim = stratum.dim - 1 if known else None
        out.append(ThetaStratum(base=stratum, description=description, dim=dim))
    return out


def _format_piece(piece: DualGraph) -> str:
    if piece.gamma == 1:
        return piece.vertices[0].name
    return "∪".join(piece.names)


def _w_term(piece: DualGraph, local: Multidegree) -> str:
    # a single smooth component has the classical theta divisor
    if piece.gamma == 1 and piece.delta == 0:
        return f"Θ({piece.vertices[0].name})"
    return f"W_{local}({_format_piece(piece)})"


def _describe(graph: DualGraph, stratum: Stratum, parts: list[DualGraph]):
    position = {name: i for i, name in enumerate(graph.names)}
    locals_ = []
    for piece in parts:
        idx = [position[name] for name in piece.names]
        locals_.append(Multidegree(stratum.multidegree[i] for i in idx))
    genera = [piece.genus for piece in parts]

    if len(parts) == 1:
        piece, local = parts[0], locals_[0]
        if not stratum.nodes.edges:
            label = "X"
        elif piece.gamma == 1 and piece.delta == 0:
            return f"Θ({piece.vertices[0].name})", genera[0] >= 1
        else:
            nodes = ",".join(f"e{e}" for e in stratum.nodes.edges)
            label = f"Xν({nodes})"
        return f"W_{local}({label})", genera[0] >= 1

    terms = []
    for j, piece in enumerate(parts):
        if genera[j] < 1:
            continue
        factors = [_w_term(piece, locals_[j])]
        for k, other in enumerate(parts):
            if k != j:
                factors.append(f"Pic^{locals_[k]}({_format_piece(other)})")
        terms.append(" × ".join(factors))
    if not terms:
        return "(empty)", False
    return " ∪ ".join(terms), True


def w_components_vine_strictly_semistable(g1: int, g2: int, delta: int) -> WAnalysis:
    """Irreducible pieces of the effective locus at the strictly semistable
    multidegree (g1-1, g2-1+delta) on a two-component curve.

    There are two pieces, both of dimension g-1 when nonempty: the pullback
    of Theta(C1) x Pic(C2), and the pullback of Pic(C1) x a translate of
    Theta(C2) shifted by the node branches on C2.  A genus-zero side has an
    empty theta divisor and its piece is flagged empty.
    """
    if delta < 1:
        raise ValueError("need at least one node")
    if g1 < 0 or g2 < 0:
        raise ValueError("genera must be non-negative")
    g = g1 + g2 + delta - 1
    d = Multidegree((g1 - 1, g2 - 1 + delta))
    branches = "+".join(f"q{i}" for i in range(1, delta + 1))
    first = WComponent(
        description=f"pullback of Θ(C1) × Pic^{g2 - 1 + delta}(C2)",
        dim=g - 1 if g1 >= 1 else None,
        empty=g1 < 1,
    )
    second = WComponent(
        description=(
            f"pullback of Pic^{g1 - 1}(C1) × "
            f"(Θ(C2) translated by {branches})"
        ),
        dim=g - 1 if g2 >= 1 else None,
        empty=g2 < 1,
        translate=f"-({branches})",
    )
    components = (first, second)
    any_nonempty = any(not c.empty for c in components)
    return WAnalysis(
        multidegree=d,
        w_dim=g - 1 if any_nonempty else None,
        whole_picard=False,
        abel_dim_bound=g - 1 if any_nonempty else None,
        abel_dim_exact=any_nonempty,
        clause="semistable" if any_nonempty else None,
        components=components,
    )
