"""Tests for Bergman fans, stable intersection and presentation searches."""

from itertools import combinations
from pathlib import Path

import pytest

from corado.bergman import (
    BergmanFan,
    Vanished,
    bergman_fan,
    face_closure,
    fan_from_chains,
    fans_equal,
    is_strict_gammoid,
    is_transversal,
    normalize_ray,
    ray_flat,
    stable_intersection_with_hyperplanes,
)
from corado.catalog import all_matroids
from corado.core import GroundSet, dual, free, from_bases, hyperplane_matroid, uniform
from corado.errors import LoopyMatroid, NotABergmanFan, SearchTooLarge
from corado.formats import parse_matroid
from corado.rado import SetSystem, corado, transversal_matroid_on_ground

SAMPLE_DIR = Path(__file__).parent / "sample_data"


def example_matroid():
    return parse_matroid((SAMPLE_DIR / "example_M.json").read_text())


# ---------------------------------------------------------------------------
# Rays and fans
# ---------------------------------------------------------------------------


def test_normalize_ray():
    assert normalize_ray((3, 1, 1)) == (1, 0, 0)
    assert normalize_ray((-2, 0, -2)) == (0, 1, 0)
    with pytest.raises(NotABergmanFan):
        normalize_ray((4, 4, 4))


def test_ray_flat_rejects_non_indicators():
    ground = GroundSet(("1", "2", "3"))
    assert ray_flat(ground, (5, 6, 6)) == 0b110
    with pytest.raises(NotABergmanFan):
        ray_flat(ground, (0, 1, 2))


def test_fan_of_u23():
    fan = bergman_fan(uniform(2, ["1", "2", "3"]))
    assert list(fan.rays.values()) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(fan.maximal_cones) == 3
    assert fan.dimension == 1


def test_fan_of_rank_one_is_a_point():
    fan = bergman_fan(uniform(1, ["1", "2"]))
    assert fan.cones == frozenset({()})
    assert fan.maximal_cones == ((),)
    assert fan.dimension == 0


def test_fan_of_u33_is_permutohedral():
    fan = bergman_fan(free(["1", "2", "3"]))
    assert len(fan.rays) == 6
    assert len(fan.maximal_cones) == 6
    assert fan.dimension == 2


def test_fan_of_hyperplane_matroid():
    m = hyperplane_matroid(["1", "2", "3", "4"], ["1", "2"])
    fan = bergman_fan(m)
    assert fan.dimension == m.rank - 1
    assert set(fan.rays) == {f for f in m.flats if f not in (0, m.ground.full)}


def test_fan_needs_loopless_matroid():
    with pytest.raises(LoopyMatroid):
        bergman_fan(from_bases(["1", "2"], [["1"]]))


def test_face_closure_contains_subchains():
    closed = face_closure([(0b001, 0b011)])
    assert closed == frozenset({(), (0b001,), (0b011,), (0b001, 0b011)})


def test_fan_from_unordered_chains():
    ground = GroundSet(("1", "2", "3"))
    fan = fan_from_chains(ground, [{0b011, 0b001}])
    assert fan.maximal_cones == ((0b001, 0b011),)


def test_fan_from_chains_rejects_unnested_rays():
    ground = GroundSet(("1", "2", "3"))
    with pytest.raises(NotABergmanFan):
        fan_from_chains(ground, [[0b001, 0b010]])


def test_fans_equal_reflexive():
    fan = bergman_fan(example_matroid())
    assert fans_equal(fan, bergman_fan(example_matroid()))


def test_fan_determines_loopless_matroid():
    fans = [bergman_fan(m) for m in all_matroids(4, loopless=True)]
    for a, b in combinations(fans, 2):
        assert not fans_equal(a, b)


# ---------------------------------------------------------------------------
# Stable intersection
# ---------------------------------------------------------------------------


def test_stable_intersection_of_example():
    m = example_matroid()
    system = SetSystem.of(m.ground, [["2", "3", "4"], ["4", "6"]])
    fan = stable_intersection_with_hyperplanes(m, system)
    assert isinstance(fan, BergmanFan)
    expected = from_bases(m.ground, [["1", "7"], ["2", "7"], ["3", "7"], ["4", "7"], ["5", "7"], ["6", "7"]])
    assert fans_equal(fan, bergman_fan(expected))


def test_stable_intersection_without_hyperplanes():
    m = example_matroid()
    fan = stable_intersection_with_hyperplanes(m, SetSystem(m.ground, ()))
    assert fans_equal(fan, bergman_fan(m))


def test_stable_intersection_vanishes():
    m = uniform(2, ["1", "2"])
    result = stable_intersection_with_hyperplanes(m, SetSystem.of(m.ground, [["1"], ["1"]]))
    assert result == Vanished(("1",))


# ---------------------------------------------------------------------------
# Transversal and strict gammoid recognition
# ---------------------------------------------------------------------------


def test_uniform_is_transversal():
    m = uniform(2, ["1", "2", "3"])
    found = is_transversal(m)
    assert found
    assert transversal_matroid_on_ground(found.witness) == m


def test_rank_zero_is_transversal():
    found = is_transversal(uniform(0, ["1", "2"]))
    assert found
    assert len(found.witness) == 0


def test_uniform_is_strict_gammoid():
    m = uniform(2, ["1", "2", "3", "4"])
    found = is_strict_gammoid(m)
    assert found
    assert corado(free(m.ground), found.witness) == m


def test_hyperplane_route_finds_uniform_presentations():
    found = is_strict_gammoid(uniform(1, ["1", "2", "3"]), route="hyperplanes")
    assert found
    assert len(found.witness) == 2
    found = is_strict_gammoid(uniform(2, ["1", "2", "3", "4"]), route="hyperplanes")
    assert found.witness.members == (0b0111, 0b1011)


def test_corado_of_free_is_strict_gammoid():
    top = free(["1", "2", "3", "4"])
    product = corado(top, SetSystem.of(top.ground, [["1", "2", "3"], ["3", "4"]]))
    assert product.is_loopless
    assert is_strict_gammoid(product, route="hyperplanes")
    assert is_strict_gammoid(product, route="transversal")


def test_search_limit():
    with pytest.raises(SearchTooLarge):
        is_transversal(free([str(i) for i in range(1, 10)]))


def test_gammoid_needs_loopless():
    with pytest.raises(LoopyMatroid):
        is_strict_gammoid(from_bases(["1", "2"], [["1"]]))


@pytest.mark.slow
def test_example_dual_is_not_transversal():
    assert not is_transversal(dual(example_matroid()))


@pytest.mark.slow
def test_example_is_not_strict_gammoid():
    assert not is_strict_gammoid(example_matroid())
