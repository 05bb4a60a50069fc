"""
Tests for leftmost geodesics and geodesic slices.

The map built from "aca" has edges 0: 0 -> 1, 1: 1 -> 2, 2: 1 -> 3 and
3: 3 -> 2, with lower-right boundary x_0 = 0, x_1 = 1, x_2 = 2.
"""

import pytest

from src.distances.geodesics import (
    geodesic_slices,
    leftmost_geodesic,
    region_faces,
    slice_faces,
)
from src.enumeration.cone import boundary_classes, enumerate_maps
from src.enumeration.oracle import brute_force_geodesics
from src.errors import NotCoalescedError, UnreachableError
from src.maps.boundary import boundary_indexing
from src.maps.faces import faces
from src.models.distances import Mode


@pytest.fixture
def kite(map_factory):
    map_ = map_factory("aca")
    assert map_.missing_edge_count == 0
    return map_


class TestLeftmostGeodesic:
    def test_kite(self, kite):
        assert leftmost_geodesic(kite, Mode.LDP, 0, 2) == (0, 2, 3)
        assert leftmost_geodesic(kite, Mode.SDP, 0, 2) == (0, 1)
        assert leftmost_geodesic(kite, Mode.SDP, 1, 1) == ()

    def test_unreachable(self, kite):
        with pytest.raises(UnreachableError):
            leftmost_geodesic(kite, Mode.LDP, 2, 0)

    @pytest.mark.parametrize("n_edges", range(1, 7))
    def test_matches_brute_force(self, n_edges):
        for l, r in boundary_classes(n_edges):
            for map_ in enumerate_maps(n_edges, l, r):
                source, sink = map_.sources()[0], map_.sinks()[0]
                for mode in Mode:
                    oracle = brute_force_geodesics(map_, mode, source, sink)
                    assert oracle.dominating == 1
                    assert leftmost_geodesic(map_, mode, source, sink) == oracle.leftmost


class TestGeodesicSlices:
    def test_ldp_slices(self, kite):
        slices = geodesic_slices(kite, boundary_indexing(kite), Mode.LDP, (1, 2), 2)
        assert [s.increment for s in slices] == [-1, -2]
        first, second = slices
        assert (first.theta_minus, first.theta, first.merge_vertex) == (1, 0, 1)
        assert first.left_path == (0,)
        assert second.left_path == (2, 3)
        assert second.right_path == ()

    def test_sdp_slices(self, kite):
        slices = geodesic_slices(kite, boundary_indexing(kite), Mode.SDP, (1, 2), 2)
        assert [s.increment for s in slices] == [-1, -1]

    def test_window_too_small(self, kite):
        with pytest.raises(NotCoalescedError):
            geodesic_slices(kite, boundary_indexing(kite), Mode.LDP, (1, 3), 2)

    def test_unreachable_target(self, kite):
        with pytest.raises(NotCoalescedError):
            geodesic_slices(kite, boundary_indexing(kite), Mode.LDP, (1, 2), 3)

    def test_faces_between_geodesics(self, kite):
        indexing = boundary_indexing(kite)
        face_set = faces(kite)
        slices = geodesic_slices(kite, indexing, Mode.LDP, (1, 2), 2)
        triangle = frozenset(face_set.bounded())
        assert slice_faces(kite, slices[0], 0, 1, face_set) == frozenset()
        assert slice_faces(kite, slices[1], 1, 2, face_set) == triangle
        region = region_faces(kite, indexing, (0, 2, 3), (), (1, 2), face_set)
        assert region == triangle
