"""
Tests for the Walk model and level-to-walk conversion.
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import InvalidWalkError
from src.models.walk import INCREMENTS, Step, Walk, walk_from_levels

tags = st.text(alphabet="abc", max_size=40)


class TestWalk:
    """Positions and slicing of walks."""

    def test_positions(self):
        walk = Walk.from_tags("abc")
        assert walk.positions.tolist() == [[0, 0], [1, -1], [0, -1], [0, 0]]
        assert walk.end == (0, 0)
        assert walk.length == 3

    def test_tags_are_case_insensitive(self):
        assert Walk.from_tags("AbC") == Walk.from_tags("abc")

    def test_invalid_tags(self):
        with pytest.raises(InvalidWalkError):
            Walk.from_tags("abd")

    def test_invalid_codes(self):
        with pytest.raises(InvalidWalkError):
            Walk(steps=[0, 3])

    def test_step_increments(self):
        assert Step.A.increment == (1, -1)
        assert Step.from_increment(-1, 0) is Step.B
        with pytest.raises(InvalidWalkError):
            Step.from_increment(1, 1)

    @given(tags)
    def test_end_is_sum_of_increments(self, text):
        walk = Walk.from_tags(text)
        total = INCREMENTS[walk.steps].sum(axis=0) if walk.length else np.zeros(2)
        assert walk.end == (int(total[0]), int(total[1]))

    @given(tags, st.integers(min_value=0, max_value=40))
    def test_prefix_suffix_concat(self, text, n):
        walk = Walk.from_tags(text)
        n = min(n, walk.length)
        assert walk.prefix(n).concat(walk.suffix(n)) == walk
        assert walk.suffix(n).start == walk.position(n)


class TestWalkFromLevels:
    """Walks following a prescribed first coordinate."""

    def test_levels(self):
        assert walk_from_levels([0, 1, 0, 0]).tags() == "abc"

    def test_bad_levels(self):
        with pytest.raises(InvalidWalkError):
            walk_from_levels([0, 2])

    @given(tags)
    def test_first_coordinate_round_trip(self, text):
        walk = Walk.from_tags(text)
        rebuilt = walk_from_levels(walk.first_coordinate)
        assert np.array_equal(rebuilt.first_coordinate, walk.first_coordinate)
