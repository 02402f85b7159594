"""Matroid union, matroid intersection and principal truncation."""

from __future__ import annotations

import logging
from functools import reduce

from .core import Matroid, SubsetLike, canonical, dual, from_bases, popcount, singletons, submasks
from .errors import EmptyFlat, GroundSetMismatch, RankZeroFlat

logger = logging.getLogger(__name__)


def _require_same_ground(m: Matroid, n: Matroid, what: str) -> None:
    if m.ground != n.ground:
        raise GroundSetMismatch(
            f"{what} needs a common ground set: "
            f"[{', '.join(m.ground.labels)}] vs [{', '.join(n.ground.labels)}]"
        )


def union_rank(m: Matroid, n: Matroid, subset: SubsetLike) -> int:
    """Rank of ``subset`` in M ∨ N by the min over T ⊆ S of rk_M(T) + rk_N(T) + |S - T|."""
    _require_same_ground(m, n, "union")
    s = m.subset(subset)
    rm, rn = m.rank_table, n.rank_table
    return min(rm[t] + rn[t] + popcount(s & ~t) for t in submasks(s))


def union(m: Matroid, n: Matroid) -> Matroid:
    """M ∨ N, whose independent sets are the unions I ∪ J.

    S is independent in M ∨ N iff rk_M(T) + rk_N(T) >= |T| for every T ⊆ S,
    which is the rank formula at rk(S) = |S|.
    """
    _require_same_ground(m, n, "union")
    rm, rn = m.rank_table, n.rank_table
    size = len(rm)
    indep = bytearray(size)
    indep[0] = 1
    top = 0
    # ascending order: every proper subset is decided before the set itself
    for mask in range(1, size):
        if rm[mask] + rn[mask] < popcount(mask):
            continue
        if all(indep[mask ^ low] for low in singletons(mask)):
            indep[mask] = 1
            top = max(top, popcount(mask))
    bases = [mask for mask in range(size) if indep[mask] and popcount(mask) == top]
    return Matroid._trusted(m.ground, bases)


def intersection(m: Matroid, n: Matroid) -> Matroid:
    """M ∧ N computed as (M* ∨ N*)*."""
    _require_same_ground(m, n, "intersection")
    return dual(union(dual(m), dual(n)))


def intersect_all(m: Matroid, *others: Matroid) -> Matroid:
    """Left fold of :func:`intersection`."""
    return reduce(intersection, others, m)


def intersection_via_spanning_sets(m: Matroid, n: Matroid) -> Matroid:
    """M ∧ N as the matroid whose spanning sets are the sets S ∩ T.

    The bases are the minimum members of the family.  Quadratic in the number
    of spanning sets; kept for verification.
    """
    _require_same_ground(m, n, "intersection")
    family = {s & t for s in m.spanning_sets for t in n.spanning_sets}
    least = min(popcount(x) for x in family)
    return from_bases(m.ground, canonical(x for x in family if popcount(x) == least))


def principal_truncation(m: Matroid, flat: SubsetLike) -> Matroid:
    """T_F(M): bases B - f over bases B meeting F and f in B ∩ F."""
    f = m.subset(flat)
    if f == 0:
        raise EmptyFlat("principal truncation needs a nonempty set")
    if m.rank_of(f) == 0:
        raise RankZeroFlat(f"{m.ground.format(f)} consists of loops")
    bases = {b ^ e for b in m.bases for e in singletons(b & f)}
    logger.debug("principal truncation at %s: %d bases", m.ground.format(f), len(bases))
    return from_bases(m.ground, bases)
