"""Tests for the small-matroid catalog."""

import pytest

from corado.catalog import all_matroids, default_ground, iso_signature, random_matroids, set_systems, set_systems_up_to
from corado.core import relabel, uniform
from corado.errors import SearchTooLarge


def test_labeled_matroid_counts():
    assert [len(all_matroids(n)) for n in range(1, 5)] == [2, 5, 16, 68]


def test_isomorphism_class_counts():
    assert [len(all_matroids(n, up_to_iso=True)) for n in range(1, 5)] == [2, 4, 8, 17]


def test_loopless_filter():
    assert all(m.is_loopless for m in all_matroids(3, loopless=True))
    assert uniform(1, default_ground(3)) in all_matroids(3, loopless=True)


def test_catalog_limit():
    with pytest.raises(SearchTooLarge):
        all_matroids(6)


def test_iso_signature_ignores_labels():
    m = uniform(2, default_ground(3))
    swapped = relabel(m, {"1": "2", "2": "1", "3": "3"})
    assert iso_signature(m) == iso_signature(swapped)


def test_random_matroids_are_seeded():
    assert random_matroids(3, 4, seed=7) == random_matroids(3, 4, seed=7)
    assert len(random_matroids(2, 50)) == 5


def test_set_system_counts():
    ground = default_ground(2)
    assert len(list(set_systems(ground, 2))) == 6
    assert len(list(set_systems_up_to(ground, 2))) == 1 + 3 + 6
