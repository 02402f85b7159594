"""Bergman fans, stable intersection with tropical hyperplanes, and
transversal / strict-gammoid recognition by presentation search.

Fans are kept combinatorial: a cone is a flag of proper nonempty flats and
its rays are the flats' indicator vectors modulo the all-ones vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Literal, Sequence

from .core import GroundSet, Matroid, canonical, dual, free, popcount, submasks, subset_key
from .errors import GroundSetMismatch, InternalInconsistency, LoopyMatroid, NotABergmanFan, SearchTooLarge
from .rado import SetSystem, corado, partial_transversal_table

logger = logging.getLogger(__name__)

# Presentation searches refuse larger ground sets unless forced.
SEARCH_LIMIT = 8

Flag = tuple[int, ...]


def require_loopless(m: Matroid, what: str) -> None:
    if not m.is_loopless:
        raise LoopyMatroid(f"{what} needs a loopless matroid; loops: {m.ground.format(m.loops)}")


# ---------------------------------------------------------------------------
# Rays
# ---------------------------------------------------------------------------


def indicator(ground: GroundSet, mask: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(len(ground)))


def normalize_ray(vector: Sequence[int]) -> tuple[int, ...]:
    """Representative in ℝ^E/⟨e_E⟩ with minimum coordinate 0 and coprime entries."""
    if not vector:
        raise NotABergmanFan("a ray needs at least one coordinate")
    low = min(vector)
    shifted = [int(x) - low for x in vector]
    divisor = reduce(gcd, shifted, 0)
    if divisor == 0:
        raise NotABergmanFan("the all-ones direction is zero in ℝ^E/⟨e_E⟩")
    return tuple(x // divisor for x in shifted)


def ray_flat(ground: GroundSet, vector: Sequence[int]) -> int:
    """The flat whose indicator is the normalized ``vector``."""
    if len(vector) != len(ground):
        raise NotABergmanFan(f"ray has {len(vector)} coordinates, ground set has {len(ground)}")
    normal = normalize_ray(vector)
    if any(x not in (0, 1) for x in normal):
        raise NotABergmanFan(f"ray {list(vector)} is not an indicator vector modulo e_E")
    return sum(1 << i for i, x in enumerate(normal) if x)


# ---------------------------------------------------------------------------
# Fans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BergmanFan:
    """Cones as flags of proper nonempty flats, closed under subchains."""

    ground: GroundSet
    cones: frozenset[Flag]

    @property
    def rays(self) -> dict[int, tuple[int, ...]]:
        flats = sorted({f for cone in self.cones for f in cone}, key=subset_key)
        return {f: indicator(self.ground, f) for f in flats}

    @property
    def maximal_cones(self) -> tuple[Flag, ...]:
        inner = {face for cone in self.cones for face in _proper_faces(cone)}
        return tuple(sorted((c for c in self.cones if c not in inner), key=_flag_key))

    @property
    def dimension(self) -> int:
        return max(len(cone) for cone in self.cones)


@dataclass(frozen=True)
class Vanished:
    """Result of a stable intersection that left the Bergman fans: the
    intersected matroid acquired loops."""

    loops: tuple[str, ...]


def _flag_key(flag: Flag) -> tuple:
    return tuple(subset_key(f) for f in flag)


def _proper_faces(flag: Flag) -> Iterable[Flag]:
    for i in range(len(flag)):
        yield flag[:i] + flag[i + 1:]


def face_closure(chains: Iterable[Flag]) -> frozenset[Flag]:
    """All subchains of the given chains, the empty flag included."""
    closed: set[Flag] = {()}
    for chain in chains:
        n = len(chain)
        for pick in range(1 << n):
            closed.add(tuple(chain[i] for i in range(n) if pick >> i & 1))
    return frozenset(closed)


def flags(m: Matroid) -> list[Flag]:
    """Every chain ∅ ≠ F₁ ⊊ ⋯ ⊊ F_t ≠ E of flats, the empty chain first."""
    proper = [f for f in m.flats if f not in (0, m.ground.full)]
    found: list[Flag] = []

    def extend(chain: Flag) -> None:
        found.append(chain)
        top = chain[-1] if chain else 0
        for f in proper:
            if f != top and f & top == top:
                extend(chain + (f,))

    extend(())
    return found


def bergman_fan(m: Matroid) -> BergmanFan:
    require_loopless(m, "a Bergman fan")
    cones = frozenset(flags(m))
    logger.debug("Bergman fan of a rank-%d matroid: %d cones", m.rank, len(cones))
    return BergmanFan(m.ground, cones)


def fan_from_chains(ground: GroundSet, chains: Iterable[Iterable[int]]) -> BergmanFan:
    """Rebuild a fan from (possibly unordered) cones given as sets of flats."""
    ordered = []
    for chain in chains:
        flats = sorted(set(chain), key=popcount)
        for lower, upper in zip(flats, flats[1:]):
            if lower & upper != lower or lower == upper:
                raise NotABergmanFan(
                    f"cone rays {ground.format(lower)} and {ground.format(upper)} are not nested"
                )
        if any(f in (0, ground.full) for f in flats):
            raise NotABergmanFan("cone rays must be proper nonempty subsets")
        ordered.append(tuple(flats))
    return BergmanFan(ground, face_closure(ordered))


def fans_equal(first: BergmanFan, second: BergmanFan) -> bool:
    if first.ground != second.ground:
        raise GroundSetMismatch("fans live in different ambient spaces")
    return first.cones == second.cones


def stable_intersection_with_hyperplanes(m: Matroid, system: SetSystem) -> BergmanFan | Vanished:
    """Σ_M stably intersected with the tropical hyperplanes Σ_{H_{A_i}}."""
    require_loopless(m, "stable intersection")
    product = corado(m, system)
    if not product.is_loopless:
        return Vanished(product.labels(product.loops))
    return bergman_fan(product)


# ---------------------------------------------------------------------------
# Presentation searches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PresentationResult:
    """Outcome of a presentation search; truthy when a presentation exists."""

    found: bool
    witness: SetSystem | None = None

    def __bool__(self) -> bool:
        return self.found


def _guard(m: Matroid, force: bool) -> None:
    if len(m.ground) > SEARCH_LIMIT and not force:
        raise SearchTooLarge(
            f"presentation search on {len(m.ground)} elements exceeds the limit of {SEARCH_LIMIT}; pass force=True"
        )


def is_transversal(m: Matroid, *, force: bool = False) -> PresentationResult:
    """Search for sets X₁..X_r (r = rank) whose partial transversals are ℐ(M).

    Each X_i lies among the non-loops and meets every basis (every basis is a
    full transversal).  Multisets are enumerated as nondecreasing candidate
    sequences; a prefix is dropped as soon as one of its partial transversals
    is dependent in M.
    """
    _guard(m, force)
    if m.rank == 0:
        return PresentationResult(True, SetSystem(m.ground, ()))
    n = len(m.ground)
    target = m.independence_table
    support = m.ground.full & ~m.loops
    candidates = canonical(x for x in submasks(support) if x and all(x & b for b in m.bases))
    logger.debug("transversal search: rank %d, %d candidate sets", m.rank, len(candidates))

    def search(start: int, chosen: list[int]) -> list[int] | None:
        for idx in range(start, len(candidates)):
            trial = chosen + [candidates[idx]]
            table = partial_transversal_table(n, trial)
            if len(trial) == m.rank:
                if table == target:
                    return trial
                continue
            if all(target[i] for i, flag in enumerate(table) if flag):
                hit = search(idx, trial)
                if hit is not None:
                    return hit
        return None

    hit = search(0, [])
    if hit is None:
        return PresentationResult(False)
    return PresentationResult(True, SetSystem(m.ground, tuple(hit)))


def _hyperplane_presentation(m: Matroid) -> PresentationResult:
    """Search for 𝒜 with |𝒜| = |E| - rk M and corado(U_{|E|,E}, 𝒜) = M."""
    k = len(m.ground) - m.rank
    top = free(m.ground)
    if k == 0:
        return PresentationResult(m == top, SetSystem(m.ground, ()) if m == top else None)
    # A_i must be dependent in M and avoid its coloops
    room = m.ground.full & ~m.coloops
    candidates = canonical(x for x in submasks(room) if x and not m.is_independent(x))
    logger.debug("hyperplane search: %d sets, %d candidate sets", k, len(candidates))

    def search(start: int, chosen: list[int]) -> list[int] | None:
        for idx in range(start, len(candidates)):
            trial = chosen + [candidates[idx]]
            product = corado(top, SetSystem(m.ground, tuple(trial)))
            if len(trial) == k:
                if product == m:
                    return trial
                continue
            # M is a quotient of every partial product
            if all(product.is_independent(b) for b in m.bases):
                hit = search(idx, trial)
                if hit is not None:
                    return hit
        return None

    hit = search(0, [])
    if hit is None:
        return PresentationResult(False)
    return PresentationResult(True, SetSystem(m.ground, tuple(hit)))


GammoidRoute = Literal["hyperplanes", "transversal", "both"]


def is_strict_gammoid(m: Matroid, *, route: GammoidRoute = "both", force: bool = False) -> PresentationResult:
    """Strict gammoids are the matroids whose Bergman fan is a stable
    intersection of tropical hyperplanes centered at the origin.

    ``route="hyperplanes"`` searches 𝒜 with corado(free, 𝒜) = M;
    ``route="transversal"`` searches a transversal presentation of M*;
    ``"both"`` runs the two and insists that they agree.
    """
    require_loopless(m, "strict gammoid recognition")
    _guard(m, force)
    if route == "transversal":
        return is_transversal(dual(m), force=force)
    by_hyperplanes = _hyperplane_presentation(m)
    if route == "hyperplanes":
        return by_hyperplanes
    by_transversal = is_transversal(dual(m), force=force)
    if by_hyperplanes.found != by_transversal.found:
        raise InternalInconsistency(
            f"hyperplane search says {by_hyperplanes.found}, dual transversal search says {by_transversal.found}"
        )
    return by_hyperplanes
