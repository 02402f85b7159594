"""Tests for ground sets, matroid construction and the rank machinery."""

from pathlib import Path

import pytest

from corado.catalog import all_matroids
from corado.core import (
    GroundSet,
    MAX_GROUND_ENV,
    direct_sum,
    dual,
    free,
    from_bases,
    graphic,
    hat,
    hyperplane_matroid,
    rank,
    relabel,
    singletons,
    uniform,
)
from corado.errors import (
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
from corado.formats import parse_matroid

SAMPLE_DIR = Path(__file__).parent / "sample_data"


def example_matroid():
    return parse_matroid((SAMPLE_DIR / "example_M.json").read_text())


# ---------------------------------------------------------------------------
# Ground sets
# ---------------------------------------------------------------------------


def test_ground_labels_become_strings():
    ground = GroundSet((1, 2, 3))
    assert ground.labels == ("1", "2", "3")
    assert ground.mask([1, "3"]) == 0b101


def test_duplicate_ground_label_rejected():
    with pytest.raises(DuplicateLabel):
        GroundSet(("a", "b", "a"))


def test_ground_cap_from_environment(monkeypatch):
    monkeypatch.setenv(MAX_GROUND_ENV, "3")
    GroundSet(("a", "b", "c"))
    with pytest.raises(GroundTooLarge):
        GroundSet(("a", "b", "c", "d"))


def test_bad_ground_cap_is_a_config_error(monkeypatch):
    monkeypatch.setenv(MAX_GROUND_ENV, "many")
    with pytest.raises(ConfigError):
        GroundSet(("a",))


def test_mask_outside_ground():
    ground = GroundSet(("a", "b"))
    with pytest.raises(NotASubset):
        ground.mask(["c"])
    with pytest.raises(NotASubset):
        ground.check(0b100)


def test_compact_format():
    ground = GroundSet(tuple("1234567"))
    assert ground.format(ground.mask(["1", "7"])) == "17"
    assert ground.format(0) == "∅"
    assert GroundSet(("x1", "x2")).format(0b11) == "{x1,x2}"


def test_hat_rejects_reserved_marker():
    assert hat("3") == "3^"
    with pytest.raises(ReservedLabel):
        hat("3^")


# ---------------------------------------------------------------------------
# from_bases
# ---------------------------------------------------------------------------


def test_from_bases_rank_one():
    assert from_bases(["1", "2"], [["1"], ["2"]]) == uniform(1, ["1", "2"])


def test_from_bases_rank_two():
    m = from_bases(["1", "2", "3"], [["1", "2"], ["1", "3"]])
    assert m.rank == 2
    assert len(m.bases) == 2


def test_from_bases_canonical_order_is_input_independent():
    a = from_bases(["1", "2", "3"], [["1", "3"], ["1", "2"]])
    b = from_bases(["1", "2", "3"], [["2", "1"], ["3", "1"], ["1", "2"]])
    assert a == b


def test_unequal_cardinalities():
    with pytest.raises(UnequalCardinalities):
        from_bases(["1", "2", "3"], [["1", "2"], ["3"]])


def test_empty_family():
    with pytest.raises(EmptyFamily):
        from_bases(["1"], [])


def test_exchange_violation_reports_witness():
    with pytest.raises(ExchangeAxiomViolation) as info:
        from_bases(["1", "2", "3", "4"], [["1", "2"], ["3", "4"]])
    exc = info.value
    assert {exc.b1, exc.b2} == {frozenset({"1", "2"}), frozenset({"3", "4"})}
    assert exc.element in exc.b1


# ---------------------------------------------------------------------------
# Named constructors
# ---------------------------------------------------------------------------


def test_uniform_rank_zero():
    m = uniform(0, ["a", "b"])
    assert m.bases == (0,)
    assert m.rank == 0
    assert m.loops == 0b11


def test_uniform_rank_out_of_range():
    with pytest.raises(RankOutOfRange):
        uniform(3, ["a", "b"])


def test_graphic_triangle_is_u23():
    m = graphic(["u", "v", "w"], [("u", "v", "1"), ("v", "w", "2"), ("u", "w", "3")])
    assert m == uniform(2, ["1", "2", "3"])


def test_graphic_loop_edge():
    m = graphic(["v"], [("v", "v", "l")])
    assert m.rank == 0
    assert m.labels(m.loops) == ("l",)


def test_graphic_duplicate_edge_label():
    with pytest.raises(DuplicateEdgeLabel):
        graphic(["u", "v"], [("u", "v", "1"), ("u", "v", "1")])


def test_example_graph_matroid():
    m = example_matroid()
    assert m.rank == 4
    assert m.is_loopless
    assert m.labels(m.coloops) == ("7",)
    assert rank(m, ["2", "3", "4"]) == 2
    assert m.subset(["1", "3", "5"]) in m.circuits
    assert m.subset(["2", "3", "4"]) in m.circuits


def test_hyperplane_matroid():
    m = hyperplane_matroid(["1", "2", "3"], ["1", "2"])
    assert m.rank == 2
    assert set(m.bases) == {m.subset(["2", "3"]), m.subset(["1", "3"])}
    assert m.labels(m.coloops) == ("3",)


def test_hyperplane_matroid_needs_support():
    with pytest.raises(EmptySupport):
        hyperplane_matroid(["1", "2"], [])


def test_dual_of_hyperplane_is_rank_one_on_support():
    m = dual(hyperplane_matroid(["1", "2", "3"], ["1", "2"]))
    assert m.independent_sets == (0, 0b001, 0b010)


def test_dual_is_an_involution():
    m = example_matroid()
    assert dual(dual(m)) == m
    assert dual(m).rank == 3
    assert dual(uniform(1, ["a", "b", "c"])) == uniform(2, ["a", "b", "c"])


def test_direct_sum():
    m = direct_sum(uniform(1, ["1", "2"]), uniform(1, ["3", "4"]))
    assert m.rank == 2
    assert len(m.bases) == 4
    assert direct_sum(m, uniform(0, [])) == m


def test_direct_sum_overlap():
    with pytest.raises(GroundSetsOverlap):
        direct_sum(uniform(1, ["1", "2"]), uniform(1, ["2", "3"]))


def test_relabel_with_hats():
    m = relabel(uniform(1, ["1", "2"]), hat)
    assert m == uniform(1, ["1^", "2^"])
    assert relabel(m, {"1^": "1^", "2^": "2^"}) == m


def test_relabel_must_be_a_bijection():
    with pytest.raises(NotABijection):
        relabel(uniform(1, ["1", "2"]), {"1": "x", "2": "x"})
    with pytest.raises(NotABijection):
        relabel(uniform(1, ["1", "2"]), {"1": "x"})


# ---------------------------------------------------------------------------
# Rank machinery
# ---------------------------------------------------------------------------


def test_flats_of_u23():
    m = uniform(2, ["1", "2", "3"])
    assert m.flats == (0, 0b001, 0b010, 0b100, 0b111)


def test_closure_in_example():
    m = example_matroid()
    assert m.closure(["1", "3"]) == m.subset(["1", "3", "5"])
    assert m.is_flat(["2", "3", "4"])


def test_free_matroid_has_every_subset_independent():
    m = free(["a", "b", "c"])
    assert len(m.independent_sets) == 8
    assert m.circuits == ()
    assert m.coloops == m.ground.full


# ---------------------------------------------------------------------------
# Structural invariants over every matroid on at most four elements
# ---------------------------------------------------------------------------


def small_matroids():
    return [m for n in range(1, 5) for m in all_matroids(n)]


def test_rank_is_monotone_and_submodular():
    for m in small_matroids():
        full = m.ground.full
        for s in range(full + 1):
            for t in range(full + 1):
                assert m.rank_of(s) <= m.rank_of(s | t)
                assert m.rank_of(s | t) + m.rank_of(s & t) <= m.rank_of(s) + m.rank_of(t)


def test_flats_are_closed_under_intersection():
    for m in small_matroids():
        flats = set(m.flats)
        assert m.ground.full in flats
        for a in flats:
            for b in flats:
                assert a & b in flats


def test_circuits_are_minimal_dependent_sets():
    for m in small_matroids():
        for c in m.circuits:
            assert not m.is_independent(c)
            assert all(m.is_independent(c ^ e) for e in singletons(c))


def test_spanning_sets_complement_dual_independent_sets():
    for m in small_matroids():
        full = m.ground.full
        assert set(m.spanning_sets) == {full ^ i for i in dual(m).independent_sets}
