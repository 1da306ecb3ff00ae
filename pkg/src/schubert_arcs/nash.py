"""Containment tests between closed contact strata, codimension and
discrepancy data, box-addition chains, and Nash valuations.

A stratum closure contains another only if every Pluecker coordinate has
smaller or equal vanishing order (the Pluecker order) and the codimension,
which is the number of boxes, strictly increases.  Sufficient criteria come
from two sources: entrywise comparison of weight exponents, and single-box
additions at plateau corners with positive fall, chained greedily.  Outside
G(2, 4) the gap between necessary and sufficient is genuine, so the combined
verdict falls back to "unknown" rather than guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .partitions import GrassmannShape, Partition, format_multi_index, singular_components
from .plane_partitions import (
    INF,
    ExtNat,
    Infinity,
    PlanePartition,
    plateaux,
    weight_exponents,
)
from .networks import plucker_ord


@dataclass(frozen=True)
class ContainmentVerdict:
    """Outcome of a containment test, with a human-checkable witness.

    relation is "contains" (closure of the first stratum contains the
    second), "not-contains", or "unknown".  Definite verdicts always carry
    the reason in witness.
    """

    relation: str
    witness: str


def _same_shape(beta: PlanePartition, beta2: PlanePartition) -> GrassmannShape:
    if beta.shape != beta2.shape:
        raise ValueError("plane partitions live in different shapes")
    return beta.shape


def _multi_indexes(shape: GrassmannShape):
    return combinations(range(1, shape.n + 1), shape.k)


def _first_plucker_violation(beta: PlanePartition, beta2: PlanePartition):
    """First multi-index whose order drops from beta to beta2, or None."""
    for entries in _multi_indexes(beta.shape):
        o, o2 = plucker_ord(beta, entries), plucker_ord(beta2, entries)
        if not o <= o2:
            return entries, o, o2
    return None


def plucker_leq(beta: PlanePartition, beta2: PlanePartition) -> bool:
    """Pluecker order: every coordinate vanishes to order at most that of
    the second argument's stratum."""
    _same_shape(beta, beta2)
    return _first_plucker_violation(beta, beta2) is None


def necessary_containment(beta: PlanePartition, beta2: PlanePartition) -> bool:
    """Whether the containment of stratum closures is not yet excluded.

    False means impossible: either some Pluecker order drops, or both
    volumes are finite and fail the strict increase that a strict
    containment of irreducible closed strata forces.
    """
    _same_shape(beta, beta2)
    if beta == beta2:
        return True
    if not plucker_leq(beta, beta2):
        return False
    vol, vol2 = beta.volume, beta2.volume
    if isinstance(vol, Infinity) and isinstance(vol2, Infinity):
        return True
    return vol < vol2


def sufficient_by_weight_exponents(beta: PlanePartition, beta2: PlanePartition) -> bool:
    """Entrywise comparison of weight exponents; true guarantees the
    closure of the first stratum contains the second.

    A weighting realizing the second stratum specializes to one realizing
    the first by lowering orders, which is where the containment comes
    from.  False is inconclusive.
    """
    _same_shape(beta, beta2)
    exps, exps2 = weight_exponents(beta), weight_exponents(beta2)
    return all(
        e <= e2 for row, row2 in zip(exps, exps2) for e, e2 in zip(row, row2)
    )


def _plateau_chain(beta: PlanePartition, beta2: PlanePartition):
    """Greedy chain of single-box plateau additions from beta to beta2.

    Returns the list of intermediate plane partitions (beta exclusive,
    beta2 inclusive), or None when the greedy search gets stuck.  Boxes go
    in lowest floor first, lexicographically smallest position next, the
    same discipline as codim_chain; each step is re-checked against the
    plateau definition, so a returned chain is a proof.
    """
    k, c = beta.shape.k, beta.shape.cols
    for i in range(1, k + 1):
        for j in range(1, c + 1):
            e, e2 = beta.at(i, j), beta2.at(i, j)
            if not e <= e2:
                return None
            if e != e2 and isinstance(e2, Infinity):
                return None
    steps = []
    current = beta
    while current != beta2:
        candidates = []
        for (a, b), _, fall in plateaux(current):
            e = current.at(a, b)
            if isinstance(e, Infinity) or not fall > 0:
                continue
            if e < beta2.at(a, b):
                candidates.append((e + 1, (a, b)))
        if not candidates:
            return None
        _, (a, b) = min(candidates)
        current = current.add_box(a, b)
        steps.append(current)
    return steps


def sufficient_by_plateau(beta: PlanePartition, beta2: PlanePartition) -> bool:
    """Whether the second plane partition is reached from the first by
    adding boxes at plateau corners with positive fall, one at a time.

    Each single step yields a strict containment of stratum closures, and
    the chain composes them.  The search is greedy (lowest floor, then
    lexicographic), so False only means this particular criterion did not
    apply.  Equal arguments give False: no box is added.
    """
    _same_shape(beta, beta2)
    if beta == beta2:
        return False
    return _plateau_chain(beta, beta2) is not None


def _g24_orders(beta: PlanePartition) -> dict[tuple[int, int], ExtNat]:
    """Closed-form Pluecker orders on G(2, 4)."""
    b11, b12 = beta.at(1, 1), beta.at(1, 2)
    b21, b22 = beta.at(2, 1), beta.at(2, 2)
    return {
        (1, 2): b11 + b22,
        (1, 3): min(b11, b12 + b21 - b22),
        (1, 4): b21,
        (2, 3): b12,
        (2, 4): b22,
        (3, 4): 0,
    }


def g24_containment(beta: PlanePartition, beta2: PlanePartition) -> ContainmentVerdict:
    """Exact containment decision on G(2, 4): the Pluecker order, evaluated
    through its six closed forms, decides containment there."""
    shape = _same_shape(beta, beta2)
    if (shape.k, shape.n) != (2, 4):
        raise ValueError(f"the exact decision only covers G(2, 4), not {shape!r}")
    orders, orders2 = _g24_orders(beta), _g24_orders(beta2)
    for entries in sorted(orders):
        o, o2 = orders[entries], orders2[entries]
        if not o <= o2:
            return ContainmentVerdict(
                "not-contains",
                f"order of {format_multi_index(entries)} drops: {o} > {o2}",
            )
    return ContainmentVerdict(
        "contains", "all six Pluecker orders compare, which decides G(2, 4)"
    )


def compare(beta: PlanePartition, beta2: PlanePartition) -> ContainmentVerdict:
    """Best available verdict on whether the closure of the first stratum
    contains the second.

    On G(2, 4) the answer is exact.  Elsewhere the necessary conditions
    (Pluecker order, strict volume increase) can refute, the sufficient
    criteria (weight exponents, plateau chains) can confirm, and the
    remaining gap is reported as "unknown".
    """
    shape = _same_shape(beta, beta2)
    if beta == beta2:
        return ContainmentVerdict("contains", "equal plane partitions")
    if (shape.k, shape.n) == (2, 4):
        return g24_containment(beta, beta2)
    violation = _first_plucker_violation(beta, beta2)
    if violation is not None:
        entries, o, o2 = violation
        return ContainmentVerdict(
            "not-contains",
            f"order of {format_multi_index(entries)} drops: {o} > {o2}",
        )
    vol, vol2 = beta.volume, beta2.volume
    if not (isinstance(vol, Infinity) and isinstance(vol2, Infinity)) and not vol < vol2:
        return ContainmentVerdict(
            "not-contains",
            f"volume must strictly increase: {vol} vs {vol2}",
        )
    if sufficient_by_weight_exponents(beta, beta2):
        return ContainmentVerdict("contains", "weight exponents compare entrywise")
    chain = _plateau_chain(beta, beta2)
    if chain is not None:
        return ContainmentVerdict(
            "contains", f"chain of {len(chain)} plateau box additions"
        )
    return ContainmentVerdict(
        "unknown", "necessary conditions hold but no sufficient criterion applies"
    )


def codim(beta: PlanePartition) -> ExtNat:
    """Codimension of the contact stratum: the number of boxes."""
    return beta.volume


def discrepancy_data(beta: PlanePartition) -> tuple[int, int, int]:
    """(codimension, multiplicity, discrepancy) of the stratum's valuation.

    The multiplicity is computed as the gcd of the non-zero vanishing
    orders of the big-cell coordinates, zero for the empty plane partition;
    the discrepancy is codimension minus multiplicity.
    """
    if not beta.is_finite:
        raise ValueError("discrepancy data requires a finite plane partition")
    vol = beta.volume
    q = 0
    for entries in _multi_indexes(beta.shape):
        q = math.gcd(q, plucker_ord(beta, entries))
    return vol, q, vol - q


def codim_chain(beta: PlanePartition) -> list[PlanePartition]:
    """Chain of one-box steps from the empty plane partition through beta
    to the constant plane partition of the same height.

    Boxes of beta are added lowest floor first, lexicographically smallest
    position next; afterwards the remaining pillars are completed to full
    height in lexicographic order.  Every step adds a box at a plateau
    corner with positive fall, which makes consecutive stratum closures
    strictly nested and proves that the codimension is the box count.
    """
    if not beta.is_finite:
        raise ValueError("an infinite plane partition has infinite codimension")
    k, c = beta.shape.k, beta.shape.cols
    h = beta.height
    current = PlanePartition.zero(beta.shape)
    chain = [current]
    for s in range(1, h + 1):
        for i in range(1, k + 1):
            for j in range(1, c + 1):
                if beta.at(i, j) >= s:
                    current = current.add_box(i, j)
                    chain.append(current)
    for i in range(1, k + 1):
        for j in range(1, c + 1):
            while current.at(i, j) < h:
                current = current.add_box(i, j)
                chain.append(current)
    return chain


def nash_valuations(lam: Partition) -> list[PlanePartition]:
    """The plane partitions of the Nash valuations of a Schubert variety,
    one per component of the singular locus.

    The valuation attached to the component with center mu has profile with
    infinite pillars on lam and a single extra floor on mu away from lam.
    Smooth varieties give the empty list.
    """
    if not lam:
        raise ValueError("the Grassmannian itself is smooth and has no Nash valuations")
    out = []
    for mu in singular_components(lam):
        rows = [
            [
                INF if lam.has_cell(i, j) else 1 if mu.has_cell(i, j) else 0
                for j in range(1, lam.shape.cols + 1)
            ]
            for i in range(1, lam.shape.k + 1)
        ]
        out.append(PlanePartition(rows, lam.shape))
    return out
