"""Products of simplicial generators as Bergman classes, the simplicial
monomial basis, relative nested quotients and the Dragon-Hall-Rado condition.

A simplicial generator h_A acts on a loopless matroid M as M ↦ M ∧ H_A, so a
product h_{A₁}⋯h_{Aₘ} is represented by the coRado matroid of (A₁, …, Aₘ).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .bergman import require_loopless
from .core import GroundSet, Matroid, hyperplane_matroid, subset_key, uniform
from .errors import DegreeTooLarge, InternalInconsistency, InvalidMonomial, RankMismatch
from .ops import intersect_all
from .rado import SetSystem, TransversalResult, corado, has_independent_transversal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialMonomial:
    """h_{F₁}^{a₁} ⋯ h_{F_k}^{a_k} over a chain of nonempty flats."""

    flats: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def system(self, ground: GroundSet) -> SetSystem:
        """The multiset with a_i copies of F_i."""
        members = tuple(f for f, a in zip(self.flats, self.exponents) for _ in range(a))
        return SetSystem(ground, members)

    def describe(self, ground: GroundSet) -> str:
        if not self.flats:
            return "1"
        parts = []
        for f, a in zip(self.flats, self.exponents):
            power = f"^{a}" if a > 1 else ""
            parts.append(f"h_{ground.format(f)}{power}")
        return " ".join(parts)


@dataclass(frozen=True)
class BergmanClass:
    """Either zero or the Bergman class of a loopless matroid."""

    matroid: Matroid | None = None

    @property
    def is_zero(self) -> bool:
        return self.matroid is None


ZERO = BergmanClass()


@dataclass(frozen=True)
class DHRResult:
    """Truthy when the Dragon-Hall-Rado condition holds; otherwise ``witness``
    is a minimal failing J as 1-based member positions."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _survives(product: Matroid, expected_rank: int) -> bool:
    """The class of ``product`` is nonzero iff it is loopless of the expected rank."""
    return product.is_loopless and product.rank == expected_rank


def product_class(m: Matroid, system: SetSystem) -> BergmanClass:
    """h_{A₁}⋯h_{Aₘ} as the Bergman class of (R_{G(𝒜),N})*."""
    require_loopless(m, "a product of simplicial generators")
    product = corado(m, system)
    if _survives(product, m.rank - len(system)):
        return BergmanClass(product)
    logger.debug("product %s vanishes on a rank-%d matroid", system.describe(), m.rank)
    return ZERO


def intersection_class(m: Matroid, system: SetSystem) -> BergmanClass:
    """The same product through iterated intersection with H_{A_i}."""
    require_loopless(m, "a product of simplicial generators")
    product = intersect_all(m, *(hyperplane_matroid(m.ground, a) for a in system.members))
    return BergmanClass(product) if _survives(product, m.rank - len(system)) else ZERO


# ---------------------------------------------------------------------------
# Monomial basis and relative nested quotients
# ---------------------------------------------------------------------------


def _monomial_key(mono: SimplicialMonomial) -> tuple:
    return tuple((subset_key(f), a) for f, a in zip(mono.flats, mono.exponents))


def validate_monomial(m: Matroid, mono: SimplicialMonomial) -> None:
    if len(mono.flats) != len(mono.exponents):
        raise InvalidMonomial("flats and exponents differ in length")
    previous = 0
    for f, a in zip(mono.flats, mono.exponents):
        m.ground.check(f)
        if f == 0 or not m.is_flat(f):
            raise InvalidMonomial(f"{m.ground.format(f)} is not a nonempty flat")
        if f == previous or f & previous != previous:
            raise InvalidMonomial("flats must form a strictly increasing chain")
        gap = m.rank_of(f) - m.rank_of(previous)
        if not 1 <= a < gap:
            raise InvalidMonomial(
                f"exponent {a} on h_{m.ground.format(f)} must lie in [1, {gap - 1}]"
            )
        previous = f


def monomial_basis(m: Matroid, c: int) -> list[SimplicialMonomial]:
    """Monomials h_{F₁}^{a₁}⋯h_{F_k}^{a_k} of degree c with
    1 <= a_i < rk(F_i) - rk(F_{i-1}), in canonical order."""
    require_loopless(m, "the monomial basis")
    if c < 0:
        raise DegreeTooLarge(f"degree must be non-negative, got {c}")
    ranks = m.rank_table
    nonempty = [f for f in m.flats if f]
    found: list[SimplicialMonomial] = []

    def extend(previous: int, chain: tuple[int, ...], exps: tuple[int, ...], remaining: int) -> None:
        if remaining == 0:
            found.append(SimplicialMonomial(chain, exps))
            return
        for f in nonempty:
            if f == previous or f & previous != previous:
                continue
            gap = ranks[f] - ranks[previous]
            for a in range(1, min(gap - 1, remaining) + 1):
                extend(f, chain + (f,), exps + (a,), remaining - a)

    extend(0, (), (), c)
    return sorted(found, key=_monomial_key)


def relative_nested_quotient(m: Matroid, mono: SimplicialMonomial) -> Matroid:
    """coRado matroid of the multiset with a_i copies of F_i."""
    require_loopless(m, "a relative nested quotient")
    validate_monomial(m, mono)
    if mono.degree > m.rank - 1:
        raise DegreeTooLarge(f"degree {mono.degree} exceeds rank - 1 = {m.rank - 1}")
    quotient = corado(m, mono.system(m.ground))
    if not _survives(quotient, m.rank - mono.degree):
        raise InternalInconsistency(
            f"quotient for {mono.describe(m.ground)} is not loopless of rank {m.rank - mono.degree}: {quotient!r}"
        )
    return quotient


# ---------------------------------------------------------------------------
# Dragon-Hall-Rado
# ---------------------------------------------------------------------------


def dhr_check(m: Matroid, system: SetSystem) -> DHRResult:
    """rk(∪_{j∈J} A_j) >= |J| + 1 for every nonempty J.

    J is visited by size, then lexicographically, so the first failure is a
    minimal witness.  Once a union reaches rank m + 1 every superset of J
    passes and is skipped.
    """
    k = len(system)
    saturated: list[int] = []
    for size in range(1, k + 1):
        for picked in combinations(range(k), size):
            jmask = sum(1 << i for i in picked)
            if any(s & jmask == s for s in saturated):
                continue
            union_mask = 0
            for i in picked:
                union_mask |= system.members[i]
            r = m.rank_of(union_mask)
            if r < size + 1:
                return DHRResult(False, tuple(i + 1 for i in picked))
            if r >= k + 1:
                saturated.append(jmask)
    return DHRResult(True)


def degree(m: Matroid, system: SetSystem) -> int:
    """1 if M ∧ H_{A₁} ∧ ⋯ ∧ H_{A_d} = U_{1,E}, else 0; needs rk M = d + 1."""
    require_loopless(m, "degree")
    if len(system) != m.rank - 1:
        raise RankMismatch(f"{len(system)} sets given, a rank-{m.rank} matroid needs {m.rank - 1}")
    return int(corado(m, system) == uniform(1, m.ground))


def independent_transversal_avoiding(m: Matroid, system: SetSystem, element: str) -> TransversalResult:
    """A transversal I of the system with ``element`` outside I and I + element
    independent in M, i.e. an independent transversal of M/e."""
    e = m.subset([element])
    if m.loops & e:
        return TransversalResult(False)
    restricted = tuple(a & ~e for a in system.members)
    if any(a == 0 for a in restricted):
        return TransversalResult(False)
    contracted = Matroid._trusted(m.ground, (b ^ e for b in m.bases if b & e))
    return has_independent_transversal(SetSystem(m.ground, restricted), contracted)
