"""
Tests for the inverse KMSW procedure.
"""

import pytest

from src.enumeration.cone import admissible_walks, boundary_classes, enumerate_maps
from src.errors import NotBipolarError
from src.kmsw.builder import build
from src.kmsw.inverse import contour_order, invert
from src.maps.isomorphism import isomorphic
from src.models.walk import Walk


class TestContourOrder:
    def test_triangle(self, map_factory):
        assert contour_order(map_factory("ca"), 0) == [0, 1, 2]

    def test_covers_every_edge(self, map_factory):
        map_ = map_factory("acaacbaab")
        assert map_.missing_edge_count == 0
        order = contour_order(map_, map_.sources()[0])
        assert sorted(order) == list(range(map_.edge_count))


class TestInvert:
    """invert is the two-sided inverse of build on maps without missing edges."""

    def test_triangle(self, map_factory):
        assert invert(map_factory("ca")) == Walk.from_tags("ca")

    def test_root_edge(self, map_factory):
        assert invert(map_factory("")).length == 0

    @pytest.mark.parametrize("n", range(8))
    def test_admissible_walks_round_trip(self, n):
        for walk in admissible_walks(n):
            assert invert(build(walk)) == walk, walk.tags()

    @pytest.mark.parametrize("n_edges", range(1, 7))
    def test_maps_round_trip(self, n_edges):
        for l, r in boundary_classes(n_edges):
            for map_ in enumerate_maps(n_edges, l, r):
                assert isomorphic(build(invert(map_)), map_)

    @pytest.mark.parametrize("text", ["b", "c", "ba", "cc"])
    def test_missing_edges_rejected(self, map_factory, text):
        with pytest.raises(NotBipolarError, match="missing"):
            invert(map_factory(text))

    def test_unrooted_map_rejected(self, map_factory):
        map_ = map_factory("ca")
        unrooted = type(map_)(
            tails=map_.tails,
            heads=map_.heads,
            missing=map_.missing,
            rotations=map_.rotations,
            root_edge=None,
        )
        with pytest.raises(NotBipolarError, match="rooted"):
            invert(unrooted)
