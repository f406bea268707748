"""Twister lattice, degree class group and chip-firing semistabilization.

Twisting a line bundle by a component divisor sum(n_i C_i) changes its
multidegree by -L @ n, where L is the loopless Laplacian of the dual graph.
The lattice of all such changes has full rank inside the degree-zero
sublattice, and the finite quotient (one copy per total degree) is the
degree class group.  Its order equals the number of spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import TotalDegreeError
from .graph import DEFAULT_MAX_SUBCURVE_VERTICES, DualGraph, _subcurve_table
from .intlinalg import mat_vec, smith_normal_form
from .multidegree import Multidegree
from . import stability

DEFAULT_MAX_FIRING_ROUNDS = 1000


def laplacian(graph: DualGraph) -> tuple[tuple[int, ...], ...]:
    """Loopless Laplacian: degrees on the diagonal, minus multiplicities off it."""
    n = graph.gamma
    mult = graph.multiplicity
    deg = graph.nonloop_degree
    return tuple(
        tuple(deg[i] if i == j else -mult[i][j] for j in range(n)) for i in range(n)
    )


def twister_multidegree(graph: DualGraph, firing: Sequence[int]) -> Multidegree:
    """Multidegree change from twisting by sum(firing[i] * C_i): -L @ firing."""
    if len(firing) != graph.gamma:
        raise ValueError("firing vector length must equal the vertex count")
    lap = laplacian(graph)
    return Multidegree(-x for x in mat_vec(lap, list(firing)))


@dataclass(frozen=True)
class TwisterLattice:
    """Integer basis of the lattice of twister multidegrees."""

    basis: tuple[Multidegree, ...]
    rank: int


def twister_lattice(graph: DualGraph) -> TwisterLattice:
    n = graph.gamma
    basis = []
    for j in range(1, n):
        unit = [0] * n
        unit[j] = 1
        basis.append(twister_multidegree(graph, unit))
    return TwisterLattice(tuple(basis), n - 1)


@dataclass(frozen=True)
class ClassLabel:
    """Canonical coset label: residues modulo the nontrivial invariant factors."""

    residues: tuple[int, ...]
    total_degree: int


@dataclass(frozen=True)
class DegreeClassGroup:
    """Presentation of the multidegree class group of a connected curve.

    ``invariant_factors`` lists the factors larger than one; their product is
    ``order``, the number of spanning trees.  The private transform data maps
    any multidegree to a canonical label and back:  coordinates of a
    degree-zero multidegree in the basis (e_i - e_0) are just its entries
    past the first, and the Smith transform of the reduced Laplacian turns
    those into residues.
    """

    gamma: int
    invariant_factors: tuple[int, ...]
    order: int
    _diagonal: tuple[int, ...]
    _left: tuple[tuple[int, ...], ...]
    _left_inv: tuple[tuple[int, ...], ...]
    _right: tuple[tuple[int, ...], ...]


def degree_class_group(graph: DualGraph) -> DegreeClassGroup:
    n = graph.gamma
    lap = laplacian(graph)
    reduced = [[lap[i][j] for j in range(1, n)] for i in range(1, n)]
    snf = smith_normal_form(reduced)
    order = 1
    for f in snf.diagonal:
        order *= f
    return DegreeClassGroup(
        gamma=n,
        invariant_factors=tuple(f for f in snf.diagonal if f > 1),
        order=order,
        _diagonal=snf.diagonal,
        _left=snf.left,
        _left_inv=snf.left_inv,
        _right=snf.right,
    )


def class_of(dcg: DegreeClassGroup, d: Multidegree) -> ClassLabel:
    """Deterministic label of the class of ``d``; equal labels plus equal
    totals characterize equivalence."""
    if len(d) != dcg.gamma:
        raise ValueError(f"multidegree has {len(d)} entries, expected {dcg.gamma}")
    coords = list(d.entries[1:])
    image = mat_vec(dcg._left, coords)
    residues = tuple(
        x % f for x, f in zip(image, dcg._diagonal) if f > 1
    )
    return ClassLabel(residues, d.total)


def equivalent(dcg: DegreeClassGroup, d1: Multidegree, d2: Multidegree) -> bool:
    """True when the two multidegrees differ by a twister (same total required)."""
    if d1.total != d2.total:
        return False
    return class_of(dcg, d1) == class_of(dcg, d2)


def representative(dcg: DegreeClassGroup, label: ClassLabel) -> Multidegree:
    """Canonical multidegree carrying the given label.

    The residues (zero on trivial factors) are pulled back through the Smith
    transform, and the remaining total degree is placed on the first vertex.
    """
    nontrivial = [i for i, f in enumerate(dcg._diagonal) if f > 1]
    if len(label.residues) != len(nontrivial):
        raise ValueError("label does not match the invariant factors")
    full = [0] * len(dcg._diagonal)
    for pos, r in zip(nontrivial, label.residues):
        full[pos] = r % dcg._diagonal[pos]
    coords = mat_vec(dcg._left_inv, full)
    return Multidegree([label.total_degree - sum(coords)] + coords)


def class_representatives(dcg: DegreeClassGroup, total_degree: int) -> list[Multidegree]:
    """Exactly ``order`` pairwise-inequivalent multidegrees of the given total."""
    out = []
    for residues in product(*(range(f) for f in dcg.invariant_factors)):
        out.append(representative(dcg, ClassLabel(residues, total_degree)))
    return out


def semistabilize(
    graph: DualGraph,
    d: Multidegree,
    max_rounds: int = DEFAULT_MAX_FIRING_ROUNDS,
) -> tuple[Multidegree, tuple[int, ...]]:
    """Move a total-degree g-1 multidegree into the semistable set by twisting.

    Returns (d', firing) with d' = d + twister_multidegree(firing) semistable
    and firing normalized to have minimum entry zero.  Strategy: while some
    connected subcurve Z has d_Z < p_a(Z) - 1, fire the complement of Z,
    which raises d_Z by the number of connecting nodes.  A semistable
    representative always exists, so the loop terminates; should the round
    cap ever trip, the fallback scans the enumerated semistable set for an
    equivalent representative and solves for the twist exactly.
    """
    expected = graph.genus - 1
    if d.total != expected:
        raise TotalDegreeError(
            f"semistabilization needs total degree {expected}, got {d.total}"
        )
    n = graph.gamma
    table = _subcurve_table(graph, DEFAULT_MAX_SUBCURVE_VERTICES)
    firing = [0] * n
    current = d
    for _ in range(max_rounds):
        violation = None
        for subcurve, pa in table:
            if current.degree_on(subcurve.vertices) < pa - 1:
                violation = subcurve
                break
        if violation is None:
            break
        inside = set(violation.vertices)
        step = [0 if i in inside else 1 for i in range(n)]
        current = current + twister_multidegree(graph, step)
        for i in range(n):
            firing[i] += step[i]
    else:
        current, firing = _semistabilize_by_search(graph, d)

    shift = min(firing)
    return current, tuple(x - shift for x in firing)


def _semistabilize_by_search(graph: DualGraph, d: Multidegree):
    dcg = degree_class_group(graph)
    for candidate in stability.enumerate_semistable(graph):
        if equivalent(dcg, d, candidate):
            return candidate, list(_solve_twist(graph, dcg, candidate - d))
    raise AssertionError("no semistable representative found; this is a bug")


def _solve_twist(graph: DualGraph, dcg: DegreeClassGroup, delta: Multidegree) -> list[int]:
    """Integer firing vector with twister_multidegree(firing) == delta."""
    n = graph.gamma
    if n == 1:
        return [0]
    # -L n = delta  <=>  reduced(L) n' = -delta'  with n = (0, n')
    target = [-x for x in delta.entries[1:]]
    image = mat_vec(dcg._left, target)
    scaled = []
    for x, f in zip(image, dcg._diagonal):
        if x % f:
            raise AssertionError("twist target is not in the twister lattice")
        scaled.append(x // f)
    inner = mat_vec(dcg._right, scaled)
    return [0] + inner
