"""Exhaustive verification sweeps.

Each sweep enumerates instances in canonical order, hands one matroid (or one
graph size) per task to a worker, and reports the instance count and the first
counterexample in that order.  Results do not depend on the worker count.
"""

from __future__ import annotations

import logging
import multiprocessing
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .bergman import is_strict_gammoid
from .catalog import all_matroids, default_ground, random_matroids, set_systems, set_systems_up_to
from .chow import dhr_check, degree, independent_transversal_avoiding, monomial_basis, relative_nested_quotient
from .core import GroundSet, Matroid, direct_sum, dual, free, hyperplane_matroid, relabel, uniform
from .errors import MatroidError, SearchTooLarge
from .ops import intersect_all
from .rado import BipartiteGraph, corado, hall_matching, independent_matching, rado_table

logger = logging.getLogger(__name__)

SWEEP_LIMIT = 6


@dataclass(frozen=True)
class SweepReport:
    name: str
    instances: int
    counterexample: str | None
    seconds: float

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: all {self.instances} instances agree"
        return f"{self.name}: counterexample after {self.instances} instances: {self.counterexample}"


Outcome = tuple[int, "str | None"]


def _guard(n: int, force: bool) -> None:
    if n > SWEEP_LIMIT and not force:
        raise SearchTooLarge(f"sweeps stop at {SWEEP_LIMIT} elements unless forced")


def _run(name: str, worker: Callable[..., Outcome], tasks: Sequence[tuple], jobs: int) -> SweepReport:
    start = time.perf_counter()
    if jobs > 1 and tasks:
        with multiprocessing.Pool(processes=jobs) as pool:
            outcomes: Iterable[Outcome] = pool.starmap(worker, tasks)
    else:
        outcomes = [worker(*task) for task in tasks]
    instances = 0
    first = None
    for count, failure in outcomes:
        if first is not None:
            break
        instances += count
        first = failure
    report = SweepReport(name, instances, first, time.perf_counter() - start)
    logger.info("%s", report.summary())
    return report


def _loopless(max_elements: int, up_to_iso: bool, force: bool) -> list[Matroid]:
    _guard(max_elements, force)
    out: list[Matroid] = []
    for n in range(1, max_elements + 1):
        out.extend(all_matroids(n, loopless=True, up_to_iso=up_to_iso, force=force))
    return out


# ---------------------------------------------------------------------------
# Main theorem
# ---------------------------------------------------------------------------


def _theorem_task(m: Matroid, max_sets: int) -> Outcome:
    count = 0
    for system in set_systems_up_to(m.ground, max_sets):
        count += 1
        by_rado = corado(m, system)
        by_meet = intersect_all(m, *(hyperplane_matroid(m.ground, a) for a in system.members))
        if by_rado != by_meet:
            return count, f"{m!r} with {system.describe()}: coRado {by_rado!r} vs intersection {by_meet!r}"
    return count, None


def verify_theorem(
    max_elements: int, max_sets: int, *, jobs: int = 1, up_to_iso: bool = False, force: bool = False
) -> SweepReport:
    """coRado matroid = iterated intersection, over loopless matroids and set systems."""
    tasks = [(m, max_sets) for m in _loopless(max_elements, up_to_iso, force)]
    return _run("theorem", _theorem_task, tasks, jobs)


# ---------------------------------------------------------------------------
# Dragon-Hall-Rado
# ---------------------------------------------------------------------------


def _dhr_task(m: Matroid) -> Outcome:
    count = 0
    for system in set_systems(m.ground, m.rank - 1):
        count += 1
        holds = bool(dhr_check(m, system))
        top = degree(m, system)
        avoid = all(independent_transversal_avoiding(m, system, e) for e in m.ground.labels)
        if (top == 1) != holds or avoid != holds:
            return count, f"{m!r} with {system.describe()}: degree {top}, dhr {holds}, avoidance {avoid}"
    return count, None


def verify_dhr(
    max_elements: int, *, max_rank: int = 4, jobs: int = 1, up_to_iso: bool = False, force: bool = False
) -> SweepReport:
    """degree = 1 ⇔ DHR ⇔ an avoiding independent transversal exists for every e."""
    tasks = [(m,) for m in _loopless(max_elements, up_to_iso, force) if 1 <= m.rank <= max_rank]
    return _run("dhr", _dhr_task, tasks, jobs)


# ---------------------------------------------------------------------------
# Nested quotients and gammoids
# ---------------------------------------------------------------------------


def _quotient_task(m: Matroid) -> Outcome:
    count = 0
    for c in range(m.rank):
        for mono in monomial_basis(m, c):
            count += 1
            try:
                relative_nested_quotient(m, mono)
            except MatroidError as exc:
                return count, f"{m!r} at {mono.describe(m.ground)}: {exc}"
    return count, None


def verify_quotients(
    max_elements: int, *, jobs: int = 1, up_to_iso: bool = False, force: bool = False
) -> SweepReport:
    """Every basis monomial of degree c yields a loopless quotient of rank rk M - c."""
    tasks = [(m,) for m in _loopless(max_elements, up_to_iso, force)]
    return _run("quotients", _quotient_task, tasks, jobs)


def _gammoid_routes_task(m: Matroid) -> Outcome:
    try:
        is_strict_gammoid(m, route="both")
    except MatroidError as exc:
        return 1, f"{m!r}: {exc}"
    return 1, None


def _gammoid_products_task(n: int) -> Outcome:
    top = free(default_ground(n))
    checked: set[Matroid] = set()
    count = 0
    for size in range(1, n):
        for system in set_systems(top.ground, size):
            count += 1
            product = corado(top, system)
            if not product.is_loopless or product in checked:
                continue
            checked.add(product)
            if not is_strict_gammoid(product, route="hyperplanes"):
                return count, f"{product!r} from {system.describe()} not recognised as a strict gammoid"
    return count, None


def verify_gammoids(
    max_elements: int, *, jobs: int = 1, up_to_iso: bool = False, force: bool = False
) -> SweepReport:
    """The two strict-gammoid routes agree on every loopless matroid, and every
    loopless corado(free, 𝒜) is recognised."""
    start = time.perf_counter()
    routes = _run("gammoid routes", _gammoid_routes_task, [(m,) for m in _loopless(max_elements, up_to_iso, force)], jobs)
    products = _run("gammoid products", _gammoid_products_task, [(n,) for n in range(1, max_elements + 1)], jobs)
    failure = routes.counterexample or products.counterexample
    instances = routes.instances + (products.instances if routes.ok else 0)
    return SweepReport("gammoid", instances, failure, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# Rado's theorem
# ---------------------------------------------------------------------------


EXHAUSTIVE_EDGES = 9


def right_matroids(right: GroundSet, count: int, seed: int) -> list[Matroid]:
    """Uniforms, their duals, sums of two uniforms and random catalog matroids on ``right``."""
    n = len(right)
    found = [uniform(k, right) for k in range(n + 1)]
    found += [dual(m) for m in found]
    for split in range(1, n):
        low = GroundSet(right.labels[:split])
        high = GroundSet(right.labels[split:])
        for a in range(split + 1):
            for b in range(n - split + 1):
                found.append(direct_sum(uniform(a, low), uniform(b, high)))
    if n <= 5:
        rename = dict(zip(default_ground(n).labels, right.labels))
        found += [relabel(m, rename) for m in random_matroids(n, count, seed)]
    unique = []
    for m in found:
        if m not in unique:
            unique.append(m)
    return unique


def _graphs(left: tuple[str, ...], right: tuple[str, ...], samples: int, rng: random.Random) -> list[BipartiteGraph]:
    slots = [(u, v) for u in left for v in right]
    if len(slots) <= EXHAUSTIVE_EDGES:
        picks = range(1 << len(slots))
    else:
        picks = [rng.getrandbits(len(slots)) for _ in range(samples)]
    return [
        BipartiteGraph(left, right, frozenset(s for i, s in enumerate(slots) if pick >> i & 1))
        for pick in picks
    ]


def _rado_task(n_left: int, n_right: int, samples: int, matroids: int, seed: int) -> Outcome:
    rng = random.Random(seed * 1009 + n_left * 31 + n_right)
    left = tuple(f"x{i}" for i in range(1, n_left + 1))
    right_ground = GroundSet(tuple(f"y{i}" for i in range(1, n_right + 1)))
    count = 0
    for m in right_matroids(right_ground, matroids, seed):
        free_right = m == free(right_ground)
        for graph in _graphs(left, right_ground.labels, samples, rng):
            nbhd = [right_ground.mask(graph.neighbours(u)) for u in left]
            table = rado_table(nbhd, m.rank_table)
            for subset in range(1 << n_left):
                count += 1
                chosen = [nbhd[i] for i in range(n_left) if subset >> i & 1]
                by_matching = independent_matching(chosen, m) is not None
                if bool(table[subset]) != by_matching:
                    return count, f"{graph} over {m!r}, left subset {subset:#b}: criterion {bool(table[subset])}"
                if free_right:
                    names = [left[i] for i in range(n_left) if subset >> i & 1]
                    if (hall_matching(graph, names) is not None) != by_matching:
                        return count, f"{graph}, left subset {subset:#b}: Hall matching disagrees"
    return count, None


def verify_rado(
    max_left: int,
    *,
    max_right: int = 6,
    samples: int = 50,
    matroids: int = 20,
    seed: int = 0,
    jobs: int = 1,
) -> SweepReport:
    """Rado rank criterion = explicit independent-matching search on every left subset."""
    tasks = [
        (n_left, n_right, samples, matroids, seed)
        for n_left in range(1, max_left + 1)
        for n_right in range(1, max_right + 1)
    ]
    return _run("rado", _rado_task, tasks, jobs)
