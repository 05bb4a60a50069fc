"""
Tests for cone-walk enumeration and triangulation counts.
"""

import pytest

from src.enumeration.cone import (
    Cone,
    admissible_walks,
    boundary_classes,
    count_triangulations,
    enum_walks_in_cone,
    enumerate_maps,
)
from src.errors import CapExceededError
from src.maps.isomorphism import canonical_form


class TestEnumWalksInCone:
    def test_small_cases(self):
        assert [w.tags() for w in enum_walks_in_cone(0, (0, 0), (0, 0))] == [""]
        assert [w.tags() for w in enum_walks_in_cone(2, (0, 0), (1, 0))] == ["ca"]
        assert enum_walks_in_cone(2, (0, 0), (0, 0)) == []

    def test_start_outside_cone(self):
        assert enum_walks_in_cone(1, (-1, 0), (0, 0)) == []

    def test_shifted_cone(self):
        walks = enum_walks_in_cone(2, (0, 0), (0, -1), Cone(0, -1))
        assert [w.tags() for w in walks] == ["ab"]

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enum_walks_in_cone(13, (0, 0), (0, 0))
        with pytest.raises(ValueError):
            enum_walks_in_cone(-1, (0, 0), (0, 0))

    def test_admissible_walks_stay_admissible(self):
        for walk in admissible_walks(6):
            assert walk.first_coordinate.min() >= 0
            assert walk.second_coordinate.min() == walk.second_coordinate[-1]


class TestCountTriangulations:
    @pytest.mark.parametrize(
        "n_edges, l, r, expected",
        [(1, 1, 1, 1), (3, 2, 1, 1), (3, 1, 2, 1), (3, 1, 1, 0), (2, 1, 1, 0)],
    )
    def test_small_counts(self, n_edges, l, r, expected):
        assert count_triangulations(n_edges, l, r) == expected

    @pytest.mark.parametrize("n_edges", range(1, 10))
    def test_left_right_symmetry(self, n_edges):
        for l, r in boundary_classes(n_edges):
            assert count_triangulations(n_edges, l, r) == count_triangulations(n_edges, r, l)

    @pytest.mark.parametrize("n_edges", range(1, 8))
    def test_counts_match_distinct_maps(self, n_edges):
        for l, r in boundary_classes(n_edges):
            forms = {canonical_form(m) for m in enumerate_maps(n_edges, l, r)}
            assert len(forms) == count_triangulations(n_edges, l, r)

    def test_invalid_class(self):
        with pytest.raises(ValueError):
            count_triangulations(3, 0, 1)
        with pytest.raises(CapExceededError):
            count_triangulations(14, 1, 1)

    def test_boundary_classes(self):
        assert boundary_classes(1) == [(1, 1)]
        assert boundary_classes(3) == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
