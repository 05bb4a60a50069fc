"""
Tests for directed paths, isomorphism and submaps.
"""

from hypothesis import given
from hypothesis import strategies as st

from src.kmsw.builder import build
from src.maps.isomorphism import canonical_form, canonicalize, isomorphic
from src.maps.paths import (
    is_weakly_right,
    leftmost_directed_path,
    path_vertices,
    rightmost_directed_path,
)
from src.maps.submaps import cut_vertices, reachable_submap, strip_missing
from src.models.walk import Walk

tags = st.text(alphabet="abc", max_size=30)


class TestDirectedPaths:
    """In the triangle built from "ca" the root 0 -> 1 is the right side."""

    def test_extreme_paths(self, map_factory):
        map_ = map_factory("ca")
        assert rightmost_directed_path(map_, 0, 10) == (0,)
        assert leftmost_directed_path(map_, 0, 10) == (1, 2)
        assert leftmost_directed_path(map_, 0, 1) == (1,)
        assert path_vertices(map_, (1, 2)) == [0, 2, 1]
        assert path_vertices(map_, (), start=2) == [2]

    def test_weakly_right(self, map_factory):
        map_ = map_factory("ca")
        left, right = (1, 2), (0,)
        assert is_weakly_right(map_, left, right)
        assert not is_weakly_right(map_, right, left)
        assert is_weakly_right(map_, left, left)
        assert is_weakly_right(map_, (), left)


class TestIsomorphism:
    @given(tags)
    def test_canonical_relabeling_is_isomorphic(self, text):
        map_ = build(Walk.from_tags(text))
        relabeled = canonicalize(map_)
        assert isomorphic(map_, relabeled)
        assert canonical_form(relabeled) == canonical_form(map_)

    def test_orientation_matters(self, map_factory):
        assert not isomorphic(map_factory("ab"), map_factory("ca"))

    def test_sizes_must_match(self, map_factory):
        assert not isomorphic(map_factory("a"), map_factory("c"))


class TestSubmaps:
    def test_reachable_from_source_is_everything(self, map_factory):
        map_ = map_factory("ca")
        assert isomorphic(reachable_submap(map_, 0), map_)

    def test_reachable_from_inner_vertex(self, map_factory):
        part = reachable_submap(map_factory("ca"), 2)
        assert (part.vertex_count, part.edge_count) == (2, 1)
        assert part.root_edge == 0

    def test_strip_missing(self, map_factory):
        stripped = strip_missing(map_factory("c"))
        assert stripped.vertex_count == 3
        assert stripped.edge_count == 2
        assert stripped.missing_edge_count == 0

    def test_cut_vertices(self, map_factory):
        assert cut_vertices(map_factory("a")) == [0, 1, 2]
        assert cut_vertices(map_factory("ca")) == [0, 1]
