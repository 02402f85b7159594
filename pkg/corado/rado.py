"""Set systems, bipartite graphs, Rado matroids and the coRado construction.

For a matroid M on E and a set system 𝒜 = (A₁, …, Aₘ) the coRado matroid is
the dual of the Rado matroid induced by the graph G(𝒜) on (E, Ê ∪ 𝒜) and
N = M̂* ⊕ U_{m,𝒜}.  It equals M ∧ H_{A₁} ∧ ⋯ ∧ H_{Aₘ}.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .core import (
    GroundSet,
    Matroid,
    SubsetLike,
    as_ground,
    direct_sum,
    dual,
    free,
    from_bases,
    hat,
    hyperplane_matroid,
    popcount,
    relabel,
    singletons,
    uniform,
)
from .errors import (
    DuplicateLabel,
    EmptyMember,
    GroundSetMismatch,
    GroundSetsOverlap,
    InternalInconsistency,
    NotASubset,
)
from .ops import union

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Set systems and bipartite graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SetSystem:
    """Ordered multiset of nonempty subsets of a ground set.

    Members are identified by position and carry the labels A1, A2, ... (with
    extra leading ``A`` characters if a ground label would collide).
    """

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        for i, member in enumerate(self.members):
            self.ground.check(member)
            if member == 0:
                raise EmptyMember(f"member {i + 1} of the set system is empty")

    @classmethod
    def of(cls, ground: GroundSet | Iterable[str | int], members: Iterable[SubsetLike]) -> SetSystem:
        ground = as_ground(ground)
        return cls(ground, tuple(ground.coerce(m) for m in members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> tuple[str, ...]:
        prefix = "A"
        taken = set(self.ground.labels)
        while any(f"{prefix}{i}" in taken for i in range(1, len(self.members) + 1)):
            prefix += "A"
        return tuple(f"{prefix}{i}" for i in range(1, len(self.members) + 1))

    def drop(self, position: int) -> SetSystem:
        return SetSystem(self.ground, self.members[:position] + self.members[position + 1:])

    def reordered(self, order: Sequence[int]) -> SetSystem:
        return SetSystem(self.ground, tuple(self.members[i] for i in order))

    def describe(self) -> str:
        return "(" + ", ".join(self.ground.format(m) for m in self.members) + ")"


@dataclass(frozen=True)
class BipartiteGraph:
    """Two labeled parts and an edge set of (left, right) pairs."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        left = tuple(str(v) for v in self.left)
        right = tuple(str(v) for v in self.right)
        edges = frozenset((str(u), str(v)) for u, v in self.edges)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "edges", edges)
        for part, name in ((left, "left"), (right, "right")):
            if len(set(part)) != len(part):
                raise DuplicateLabel(f"duplicate labels in the {name} part")
        shared = set(left) & set(right)
        if shared:
            raise GroundSetsOverlap(f"parts share labels: {', '.join(sorted(shared))}")
        lset, rset = set(left), set(right)
        for u, v in edges:
            if u not in lset or v not in rset:
                raise NotASubset(f"edge {u}-{v} leaves the bipartition")

    def neighbours(self, vertex: str) -> tuple[str, ...]:
        return tuple(v for v in self.right if (vertex, v) in self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.left, bipartite=0)
        graph.add_nodes_from(self.right, bipartite=1)
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class TransversalResult:
    """Outcome of an independent-transversal search; truthy when one exists."""

    exists: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.exists


# ---------------------------------------------------------------------------
# Rado criterion and matching search
# ---------------------------------------------------------------------------


def rado_table(neighbourhoods: Sequence[int], ranks: Sequence[int]) -> bytearray:
    """Independence of every subset of left positions under the Rado criterion.

    ``neighbourhoods[i]`` is the right-side mask of left vertex ``i`` and
    ``ranks`` is the rank table of the right-side matroid.  A subset I is
    independent iff rk(N(J)) >= |J| for all J ⊆ I; a failing J rules out
    every superset.
    """
    size = 1 << len(neighbourhoods)
    reach = [0] * size
    indep = bytearray(size)
    indep[0] = 1
    for mask in range(1, size):
        low = mask & -mask
        reach[mask] = reach[mask ^ low] | neighbourhoods[low.bit_length() - 1]
        if ranks[reach[mask]] < popcount(mask):
            continue
        if all(indep[mask ^ b] for b in singletons(mask)):
            indep[mask] = 1
    return indep


def independent_matching(neighbourhoods: Sequence[int], m: Matroid) -> list[int] | None:
    """Pick distinct representatives, one per neighbourhood, independent in ``m``.

    Depth-first augmenting search in neighbourhood order; returns the chosen
    one-bit masks or ``None``.
    """
    indep = m.independence_table
    chosen: list[int] = []

    def extend(i: int, used: int) -> bool:
        if i == len(neighbourhoods):
            return True
        for e in singletons(neighbourhoods[i] & ~used):
            if indep[used | e]:
                chosen.append(e)
                if extend(i + 1, used | e):
                    return True
                chosen.pop()
        return False

    return list(chosen) if extend(0, 0) else None


def has_independent_transversal(system: SetSystem, m: Matroid) -> TransversalResult:
    """Rado's theorem: decide by the rank criterion, then find a witness."""
    if system.ground != m.ground:
        raise GroundSetMismatch("set system and matroid live on different ground sets")
    table = rado_table(system.members, m.rank_table)
    decided = bool(table[(1 << len(system)) - 1])
    found = independent_matching(system.members, m)
    if decided != (found is not None):
        raise InternalInconsistency(
            f"Rado criterion says {decided} but matching search says {found is not None} for {system.describe()}"
        )
    if found is None:
        return TransversalResult(False)
    return TransversalResult(True, tuple(m.ground.labels_of(e)[0] for e in found))


def _right_masks(graph: BipartiteGraph, m: Matroid) -> list[int]:
    if set(graph.right) != set(m.ground.labels) or len(graph.right) != len(m.ground):
        raise GroundSetMismatch("matroid ground set must equal the right part of the graph")
    return [m.ground.mask(graph.neighbours(u)) for u in graph.left]


def _matroid_of_table(ground: GroundSet, table: bytearray) -> Matroid:
    top = max(popcount(mask) for mask in range(len(table)) if table[mask])
    return from_bases(ground, [mask for mask in range(len(table)) if table[mask] and popcount(mask) == top])


def rado_matroid(graph: BipartiteGraph, m: Matroid) -> Matroid:
    """R_{H,M}: left subsets matched in H onto an M-independent set."""
    neighbourhoods = _right_masks(graph, m)
    result = _matroid_of_table(GroundSet(graph.left), rado_table(neighbourhoods, m.rank_table))
    logger.debug("Rado matroid on %d left vertices: rank %d, %d bases", len(graph.left), result.rank, len(result.bases))
    return result


def rado_matching(graph: BipartiteGraph, m: Matroid, subset: Iterable[str]) -> dict[str, str] | None:
    """An explicit matching of ``subset`` (left labels) onto an M-independent set."""
    neighbourhoods = _right_masks(graph, m)
    left_index = {u: i for i, u in enumerate(graph.left)}
    chosen = [str(u) for u in subset]
    missing = [u for u in chosen if u not in left_index]
    if missing:
        raise NotASubset(f"{', '.join(missing)} not in the left part")
    found = independent_matching([neighbourhoods[left_index[u]] for u in chosen], m)
    if found is None:
        return None
    return {u: m.ground.labels_of(e)[0] for u, e in zip(chosen, found)}


def hall_matching(graph: BipartiteGraph, subset: Iterable[str]) -> dict[str, str] | None:
    """A matching saturating ``subset`` in the plain graph (Hall), via Hopcroft-Karp."""
    chosen = [str(u) for u in subset]
    sub = graph.to_networkx().subgraph(chosen + list(graph.right))
    matching = nx.bipartite.hopcroft_karp_matching(sub, top_nodes=chosen)
    if not all(u in matching for u in chosen):
        return None
    return {u: matching[u] for u in chosen}


# ---------------------------------------------------------------------------
# G(𝒜) and the coRado construction
# ---------------------------------------------------------------------------


def build_G(ground: GroundSet, system: SetSystem) -> BipartiteGraph:
    """G(𝒜) with bipartition (E, Ê ∪ 𝒜): edges e–ê and e–A for e in A."""
    if system.ground != ground:
        raise GroundSetMismatch("set system lives on a different ground set")
    hats = tuple(hat(e) for e in ground.labels)
    edges = {(e, hat(e)) for e in ground.labels}
    for label, member in zip(system.labels, system.members):
        edges.update((e, label) for e in ground.labels_of(member))
    return BipartiteGraph(ground.labels, hats + system.labels, frozenset(edges))


def rado_presentation(m: Matroid, system: SetSystem) -> tuple[BipartiteGraph, Matroid]:
    """The pair (G(𝒜), N = M̂* ⊕ U_{m,𝒜}) whose Rado matroid is dual to the intersection."""
    if system.ground != m.ground:
        raise GroundSetMismatch("set system and matroid live on different ground sets")
    graph = build_G(m.ground, system)
    hatted = relabel(dual(m), hat)
    n = direct_sum(hatted, uniform(len(system), system.labels))
    return graph, n


class _SummandRanks(Sequence):
    """Rank table of M̂* ⊕ U_{m,𝒜} over Ê ∪ 𝒜, read off the two summands.

    Bits below ``width`` are hat copies, the rest are set-system vertices.
    """

    def __init__(self, hatted: Sequence[int], width: int, sets: int) -> None:
        self.hatted = hatted
        self.width = width
        self.sets = sets

    def __len__(self) -> int:
        return 1 << (self.width + self.sets)

    def __getitem__(self, mask: int) -> int:
        low = mask & ((1 << self.width) - 1)
        return self.hatted[low] + min(popcount(mask >> self.width), self.sets)


def corado(m: Matroid, system: SetSystem) -> Matroid:
    """(R_{G(𝒜), N})*, equal to M ∧ H_{A₁} ∧ ⋯ ∧ H_{Aₘ}.

    Works on G(𝒜) directly: neither Ê ∪ 𝒜 nor N is built, so only E is
    held to the ground-set cap.
    """
    if system.ground != m.ground:
        raise GroundSetMismatch("set system and matroid live on different ground sets")
    width = len(m.ground)
    # e is adjacent to ê and to every A_j containing e
    neighbourhoods = [
        (1 << i) | sum(1 << (width + j) for j, a in enumerate(system.members) if a >> i & 1) for i in range(width)
    ]
    ranks = _SummandRanks(dual(m).rank_table, width, len(system))
    result = dual(_matroid_of_table(m.ground, rado_table(neighbourhoods, ranks)))
    logger.debug("coRado of rank-%d matroid with %d sets: rank %d", m.rank, len(system), result.rank)
    return result


def corado_union_step(m: Matroid, system: SetSystem) -> Matroid:
    """The inductive step R' ∨ H_{Aₘ}* with R' the union for 𝒜 - Aₘ."""
    if len(system) == 0:
        raise EmptyMember("the union step needs at least one member")
    previous = corado(m, system.drop(len(system) - 1))
    last = hyperplane_matroid(m.ground, system.members[-1])
    return union(dual(previous), dual(last))


# ---------------------------------------------------------------------------
# Transversal matroids
# ---------------------------------------------------------------------------


def transversal_matroid(system: SetSystem) -> Matroid:
    """Transversal matroid on the member labels: subfamilies with distinct representatives."""
    ground = system.ground
    edges = {(label, e) for label, member in zip(system.labels, system.members) for e in ground.labels_of(member)}
    graph = BipartiteGraph(system.labels, ground.labels, frozenset(edges))
    return rado_matroid(graph, free(ground))


def presentation_graph(system: SetSystem) -> BipartiteGraph:
    """The graph (E, 𝒳) with e–X_i whenever e ∈ X_i."""
    ground = system.ground
    edges = {(e, label) for label, member in zip(system.labels, system.members) for e in ground.labels_of(member)}
    return BipartiteGraph(ground.labels, system.labels, frozenset(edges))


def transversal_matroid_on_ground(system: SetSystem) -> Matroid:
    """Transversal matroid on E: the partial transversals of the system."""
    return rado_matroid(presentation_graph(system), free(system.labels))


def partial_transversal_table(n: int, members: Sequence[int]) -> bytearray:
    """Independence table over subsets of an ``n``-element ground set for the
    transversal matroid presented by ``members``; no matroid objects built."""
    neighbourhoods = []
    for i in range(n):
        bit = 1 << i
        neighbourhoods.append(sum(1 << j for j, member in enumerate(members) if member & bit))
    ranks = [popcount(x) for x in range(1 << len(members))]
    return rado_table(neighbourhoods, ranks)
