"""Exhaustive enumeration of small matroids and set systems.

Matroids on ``n`` labeled elements are found by testing every family of
equal-size subsets against the exchange axiom, which is feasible up to
``n = 5`` (``n = 6`` takes a long while and needs ``force``).
"""

from __future__ import annotations

import logging
import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterator

from .core import GroundSet, Matroid, canonical, exchange_witness
from .errors import SearchTooLarge
from .rado import SetSystem

logger = logging.getLogger(__name__)

CATALOG_LIMIT = 5


def default_ground(n: int) -> GroundSet:
    return GroundSet(tuple(str(i) for i in range(1, n + 1)))


def _permute(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def iso_signature(m: Matroid) -> tuple[int, ...]:
    """Smallest permuted basis family; equal exactly for isomorphic matroids."""
    n = len(m.ground)
    return min(canonical(_permute(b, perm) for b in m.bases) for perm in permutations(range(n)))


@lru_cache(maxsize=None)
def _labeled_matroids(n: int) -> tuple[Matroid, ...]:
    ground = default_ground(n)
    found = []
    for k in range(n + 1):
        pool = [sum(1 << i for i in combo) for combo in combinations(range(n), k)]
        for pick in range(1, 1 << len(pool)):
            family = [pool[j] for j in range(len(pool)) if pick >> j & 1]
            if exchange_witness(family) is None:
                found.append(Matroid._trusted(ground, family))
    logger.debug("catalog: %d labeled matroids on %d elements", len(found), n)
    return tuple(found)


def all_matroids(n: int, *, loopless: bool = False, up_to_iso: bool = False, force: bool = False) -> list[Matroid]:
    """Every matroid on ``{1..n}`` in canonical order (rank, then family index)."""
    if n > CATALOG_LIMIT and not force:
        raise SearchTooLarge(f"enumerating matroids on {n} elements is slow; pass force=True")
    out = [m for m in _labeled_matroids(n) if m.is_loopless or not loopless]
    if up_to_iso:
        seen: set[tuple[int, ...]] = set()
        unique = []
        for m in out:
            sig = (m.rank, iso_signature(m))
            if sig not in seen:
                seen.add(sig)
                unique.append(m)
        out = unique
    return out


def random_matroids(n: int, count: int, seed: int = 0, *, loopless: bool = False) -> list[Matroid]:
    pool = all_matroids(n, loopless=loopless)
    rng = random.Random(seed)
    return rng.sample(pool, min(count, len(pool)))


def set_systems(ground: GroundSet, size: int) -> Iterator[SetSystem]:
    """Every multiset of ``size`` nonempty subsets, as nondecreasing sequences."""
    nonempty = canonical(range(1, ground.full + 1))
    for members in combinations_with_replacement(nonempty, size):
        yield SetSystem(ground, members)


def set_systems_up_to(ground: GroundSet, max_sets: int) -> Iterator[SetSystem]:
    for size in range(max_sets + 1):
        yield from set_systems(ground, size)
