"""Tests for the verification sweeps at small sizes."""

import pytest

from corado.errors import SearchTooLarge
from corado.sweeps import (
    SweepReport,
    right_matroids,
    verify_dhr,
    verify_gammoids,
    verify_quotients,
    verify_rado,
    verify_theorem,
)
from corado.core import GroundSet


def test_theorem_sweep():
    report = verify_theorem(3, 2)
    assert report.ok
    assert report.instances > 0
    assert report.summary() == f"theorem: all {report.instances} instances agree"


def test_theorem_sweep_up_to_isomorphism_is_smaller():
    assert verify_theorem(3, 1, up_to_iso=True).instances < verify_theorem(3, 1).instances


def test_sweep_results_do_not_depend_on_jobs():
    assert verify_theorem(3, 1, jobs=2).instances == verify_theorem(3, 1).instances


def test_theorem_sweep_four_elements():
    assert verify_theorem(4, 2).ok


def test_dhr_sweep():
    report = verify_dhr(4, max_rank=4)
    assert report.ok
    assert report.instances > 0


def test_quotient_sweep():
    assert verify_quotients(4).ok


def test_gammoid_sweep():
    assert verify_gammoids(4).ok


def test_rado_sweep():
    report = verify_rado(2, max_right=3, samples=5, matroids=3)
    assert report.ok
    assert report.instances > 0


def test_sweep_guard():
    with pytest.raises(SearchTooLarge):
        verify_theorem(7, 1)


def test_failed_report_summary():
    report = SweepReport("rado", 12, "x", 0.0)
    assert not report.ok
    assert report.summary() == "rado: counterexample after 12 instances: x"


def test_right_matroids_are_distinct():
    found = right_matroids(GroundSet(("y1", "y2")), 3, seed=0)
    assert len(found) == len(set(found))
    assert all(m.ground.labels == ("y1", "y2") for m in found)


@pytest.mark.slow
def test_theorem_sweep_five_elements():
    assert verify_theorem(5, 2, up_to_iso=True).ok


@pytest.mark.slow
def test_dhr_sweep_five_elements():
    assert verify_dhr(5, max_rank=4, up_to_iso=True).ok


@pytest.mark.slow
def test_quotient_sweep_five_elements():
    assert verify_quotients(5).ok


@pytest.mark.slow
def test_gammoid_sweep_five_elements():
    assert verify_gammoids(5, up_to_iso=True).ok
