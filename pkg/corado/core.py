"""Matroids over explicit basis families on small labeled ground sets.

A subset of a ground set is an ``int`` bitmask: bit ``i`` stands for
``ground.labels[i]``.  Every family a matroid exposes is duplicate-free and
sorted in canonical order (cardinality first, then lexicographic on bit
positions), so two matroids are equal exactly when their dataclasses compare
equal.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Union

import networkx as nx
from networkx.utils import UnionFind

from .errors import (
    ConfigError,
    DuplicateEdgeLabel,
    DuplicateLabel,
    EmptyFamily,
    EmptySupport,
    ExchangeAxiomViolation,
    GroundSetsOverlap,
    GroundTooLarge,
    NotABijection,
    NotASubset,
    RankOutOfRange,
    ReservedLabel,
    UnequalCardinalities,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_GROUND = 16
MAX_GROUND_ENV = "CORADO_MAX_GROUND"

# Suffix marking the copy ê of a ground element e.
HAT = "^"

SubsetLike = Union[int, Iterable[Union[str, int]]]


def max_ground_size() -> int:
    """Ground-set cap, overridable through ``CORADO_MAX_GROUND``."""
    raw = os.environ.get(MAX_GROUND_ENV, "").strip()
    if not raw:
        return DEFAULT_MAX_GROUND
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{MAX_GROUND_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{MAX_GROUND_ENV} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# Bitmask helpers
# ---------------------------------------------------------------------------


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> tuple[int, ...]:
    """Bit positions set in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def singletons(mask: int) -> Iterator[int]:
    """Yield the one-bit masks contained in ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), bits(mask)


def canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=subset_key))


def hat(label: str) -> str:
    """Label of the copy ê of ``label``."""
    if HAT in label:
        raise ReservedLabel(f"label {label!r} already carries the reserved marker {HAT!r}")
    return label + HAT


# ---------------------------------------------------------------------------
# Ground sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroundSet:
    """Ordered distinct labels; the order fixes the bitmask positions."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            dupes = sorted({lb for lb in labels if labels.count(lb) > 1})
            raise DuplicateLabel(f"duplicate ground labels: {', '.join(dupes)}")
        cap = max_ground_size()
        if len(labels) > cap:
            raise GroundTooLarge(len(labels), cap)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask(self, labels: Iterable[str | int]) -> int:
        out = 0
        for label in labels:
            key = str(label)
            if key not in self.index:
                raise NotASubset(f"{key!r} is not in the ground set {{{', '.join(self.labels)}}}")
            out |= 1 << self.index[key]
        return out

    def check(self, mask: int) -> int:
        if mask < 0 or mask >> len(self.labels):
            raise NotASubset(f"bitmask {mask:#x} is not a subset of a {len(self.labels)}-element ground set")
        return mask

    def coerce(self, subset: SubsetLike) -> int:
        """Accept a bitmask or an iterable of labels."""
        if isinstance(subset, int) and not isinstance(subset, bool):
            return self.check(subset)
        if isinstance(subset, str):
            return self.mask([subset])
        return self.mask(subset)

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(self.check(mask)))

    def format(self, mask: int) -> str:
        """Compact rendering: ``17`` for single-character labels, else ``{a,b}``."""
        names = self.labels_of(mask)
        if all(len(name) == 1 for name in self.labels):
            return "".join(names) if names else "∅"
        return "{" + ",".join(names) + "}"


# ---------------------------------------------------------------------------
# Matroids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its canonical basis family.

    Build instances through :func:`from_bases` (validated) or the named
    constructors; the dataclass constructor itself does not check axioms.
    """

    ground: GroundSet
    bases: tuple[int, ...]
    rank: int

    @classmethod
    def _trusted(cls, ground: GroundSet, bases: Iterable[int]) -> Matroid:
        family = canonical(bases)
        return cls(ground, family, popcount(family[0]))

    def __repr__(self) -> str:
        shown = ", ".join(self.ground.format(b) for b in self.bases[:8])
        more = ", ..." if len(self.bases) > 8 else ""
        return f"Matroid(rank={self.rank}, ground=[{', '.join(self.ground.labels)}], bases=[{shown}{more}])"

    # -- subset helpers ----------------------------------------------------

    def subset(self, labels: SubsetLike) -> int:
        return self.ground.coerce(labels)

    def labels(self, mask: int) -> tuple[str, ...]:
        return self.ground.labels_of(mask)

    # -- tables ------------------------------------------------------------

    @cached_property
    def independence_table(self) -> bytearray:
        size = 1 << len(self.ground)
        table = bytearray(size)
        for b in self.bases:
            table[b] = 1
        # descending order: every superset is marked before its subsets
        for mask in range(size - 1, 0, -1):
            if table[mask]:
                for low in singletons(mask):
                    table[mask ^ low] = 1
        return table

    @cached_property
    def rank_table(self) -> list[int]:
        indep = self.independence_table
        size = len(indep)
        ranks = [0] * size
        for mask in range(1, size):
            if indep[mask]:
                ranks[mask] = popcount(mask)
                continue
            ceiling = popcount(mask) - 1
            best = 0
            for low in singletons(mask):
                r = ranks[mask ^ low]
                if r > best:
                    best = r
                    if best == ceiling:
                        break
            ranks[mask] = best
        return ranks

    # -- rank machinery ----------------------------------------------------

    def rank_of(self, subset: SubsetLike) -> int:
        return self.rank_table[self.subset(subset)]

    def is_independent(self, subset: SubsetLike) -> bool:
        return bool(self.independence_table[self.subset(subset)])

    def is_basis(self, subset: SubsetLike) -> bool:
        mask = self.subset(subset)
        return popcount(mask) == self.rank and self.is_independent(mask)

    def is_spanning(self, subset: SubsetLike) -> bool:
        return self.rank_of(subset) == self.rank

    @cached_property
    def independent_sets(self) -> tuple[int, ...]:
        return canonical(m for m, flag in enumerate(self.independence_table) if flag)

    @cached_property
    def circuits(self) -> tuple[int, ...]:
        indep = self.independence_table
        found = []
        for mask in range(1, len(indep)):
            if not indep[mask] and all(indep[mask ^ low] for low in singletons(mask)):
                found.append(mask)
        return canonical(found)

    @cached_property
    def spanning_sets(self) -> tuple[int, ...]:
        return canonical(m for m, r in enumerate(self.rank_table) if r == self.rank)

    def closure(self, subset: SubsetLike) -> int:
        mask = self.subset(subset)
        ranks = self.rank_table
        base = ranks[mask]
        out = mask
        for low in singletons(self.ground.full & ~mask):
            if ranks[mask | low] == base:
                out |= low
        return out

    def is_flat(self, subset: SubsetLike) -> bool:
        mask = self.subset(subset)
        return self.closure(mask) == mask

    @cached_property
    def flats(self) -> tuple[int, ...]:
        ranks = self.rank_table
        full = self.ground.full
        found = []
        for mask in range(len(ranks)):
            r = ranks[mask]
            if all(ranks[mask | low] > r for low in singletons(full & ~mask)):
                found.append(mask)
        return canonical(found)

    # -- loops and coloops -------------------------------------------------

    @cached_property
    def loops(self) -> int:
        covered = 0
        for b in self.bases:
            covered |= b
        return self.ground.full & ~covered

    @cached_property
    def coloops(self) -> int:
        common = self.ground.full
        for b in self.bases:
            common &= b
        return common

    @property
    def is_loopless(self) -> bool:
        return self.loops == 0


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def as_ground(ground: GroundSet | Iterable[str | int]) -> GroundSet:
    if isinstance(ground, GroundSet):
        return ground
    return GroundSet(tuple(str(label) for label in ground))


def exchange_witness(family: Iterable[int]) -> tuple[int, int, int] | None:
    """Return ``(b1, b2, e)`` violating basis exchange, or ``None``."""
    fam = list(family)
    basis_set = set(fam)
    for b1 in fam:
        for b2 in fam:
            if b1 == b2:
                continue
            gains = list(singletons(b2 & ~b1))
            for e in singletons(b1 & ~b2):
                without = b1 ^ e
                if not any((without | f) in basis_set for f in gains):
                    return b1, b2, e
    return None


def from_bases(ground: GroundSet | Iterable[str | int], bases: Iterable[SubsetLike]) -> Matroid:
    """Validate a basis family and return the canonical matroid."""
    ground = as_ground(ground)
    family = canonical(ground.coerce(b) for b in bases)
    if not family:
        raise EmptyFamily("a matroid needs at least one basis")
    sizes = sorted({popcount(b) for b in family})
    if len(sizes) > 1:
        raise UnequalCardinalities(f"bases have sizes {sizes}; all bases must have equal cardinality")
    witness = exchange_witness(family)
    if witness is not None:
        b1, b2, e = witness
        (label,) = ground.labels_of(e)
        raise ExchangeAxiomViolation(
            f"no f in {ground.format(b2)} - {ground.format(b1)} makes "
            f"{ground.format(b1)} - {label} + f a basis",
            frozenset(ground.labels_of(b1)),
            frozenset(ground.labels_of(b2)),
            label,
        )
    logger.debug("validated %d bases of rank %d on %d elements", len(family), sizes[0], len(ground))
    return Matroid(ground, family, sizes[0])


def uniform(k: int, ground: GroundSet | Iterable[str | int]) -> Matroid:
    ground = as_ground(ground)
    n = len(ground)
    if not 0 <= k <= n:
        raise RankOutOfRange(f"rank {k} outside 0..{n}")
    bases = (sum(1 << i for i in combo) for combo in combinations(range(n), k))
    return Matroid._trusted(ground, bases)


def free(ground: GroundSet | Iterable[str | int]) -> Matroid:
    ground = as_ground(ground)
    return uniform(len(ground), ground)


def _is_forest(edges: Iterable[tuple[object, object]]) -> bool:
    forest = UnionFind()
    for u, v in edges:
        if forest[u] == forest[v]:
            return False
        forest.union(u, v)
    return True


def graphic(
    vertices: Iterable[object],
    edges: Iterable[tuple[object, object, str | int]],
) -> Matroid:
    """Cycle matroid of a multigraph; the edge labels form the ground set.

    Parallel edges and graph loops are allowed; a graph loop becomes a
    matroid loop.
    """
    edge_list = [(u, v, str(label)) for u, v, label in edges]
    labels = [label for _, _, label in edge_list]
    if len(set(labels)) != len(labels):
        dupes = sorted({lb for lb in labels if labels.count(lb) > 1})
        raise DuplicateEdgeLabel(f"edge labels must be distinct: {', '.join(dupes)}")
    graph = nx.MultiGraph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from((u, v) for u, v, _ in edge_list)
    r = graph.number_of_nodes() - nx.number_connected_components(graph)
    ground = GroundSet(tuple(labels))
    ends = [(u, v) for u, v, _ in edge_list]
    bases = [
        sum(1 << i for i in combo)
        for combo in combinations(range(len(ends)), r)
        if _is_forest(ends[i] for i in combo)
    ]
    logger.debug("graphic matroid: %d vertices, %d edges, %d spanning forests", graph.number_of_nodes(), len(ends), len(bases))
    return Matroid._trusted(ground, bases)


def hyperplane_matroid(ground: GroundSet | Iterable[str | int], support: SubsetLike) -> Matroid:
    """The corank-1 matroid H_S with bases ``E - s`` for ``s`` in ``support``."""
    ground = as_ground(ground)
    mask = ground.coerce(support)
    if mask == 0:
        raise EmptySupport("hyperplane matroid needs a nonempty support")
    return Matroid._trusted(ground, (ground.full ^ s for s in singletons(mask)))


def dual(m: Matroid) -> Matroid:
    full = m.ground.full
    bases = canonical(full ^ b for b in m.bases)
    return Matroid(m.ground, bases, len(m.ground) - m.rank)


def direct_sum(m: Matroid, n: Matroid) -> Matroid:
    overlap = set(m.ground.labels) & set(n.ground.labels)
    if overlap:
        raise GroundSetsOverlap(f"ground sets share labels: {', '.join(sorted(overlap))}")
    ground = GroundSet(m.ground.labels + n.ground.labels)
    shift = len(m.ground)
    bases = [b | (c << shift) for b in m.bases for c in n.bases]
    return Matroid._trusted(ground, bases)


def relabel(m: Matroid, mapping: Mapping[str, str] | Callable[[str], str]) -> Matroid:
    """Rename ground labels; bit positions (and so canonical order) are kept."""
    if callable(mapping) and not isinstance(mapping, Mapping):
        images = [str(mapping(label)) for label in m.ground.labels]
    else:
        missing = [label for label in m.ground.labels if label not in mapping]
        if missing:
            raise NotABijection(f"mapping is undefined on {', '.join(missing)}")
        images = [str(mapping[label]) for label in m.ground.labels]
    if len(set(images)) != len(images):
        raise NotABijection("mapping sends two ground labels to the same image")
    return Matroid(GroundSet(tuple(images)), m.bases, m.rank)


def rank(m: Matroid, subset: SubsetLike) -> int:
    return m.rank_of(subset)
