"""
Tests for boundary hit times and the quadrant decomposition.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.models.walk import Walk
from src.walks.stopping import (
    first_hit_times,
    quadrant_decomposition_times,
    quadrant_intervals,
    split_quadrant_walks,
)

tags = st.text(alphabet="abc", max_size=60)


class TestFirstHitTimes:
    """tau_k: first hits of the negative levels of R (k >= 1) and L (k <= -1)."""

    def test_small_walks(self):
        times = first_hit_times(Walk.from_tags("ba"), [-1, 0, 1, 2])
        assert times[0] == 0
        assert times[-1] == 1
        assert times[1] == 2
        assert times[2] is None
        assert not times.hit(2)

    @given(tags, st.integers(min_value=1, max_value=5))
    def test_hit_is_first_visit(self, text, k):
        walk = Walk.from_tags(text)
        times = first_hit_times(walk, [k, -k])
        second, first = walk.second_coordinate, walk.first_coordinate
        for level, coordinate, key in ((-k, second, k), (-k, first, -k)):
            visits = [n for n in range(1, walk.length + 1) if coordinate[n] == level]
            assert times[key] == (visits[0] if visits else None)


class TestQuadrantDecomposition:
    """Alternating times N_k^R, N_k^L."""

    def test_corrected_example(self):
        times = quadrant_decomposition_times(Walk.from_tags("abba"))
        assert times.right_times == (0, 4)
        assert times.left_times == (3,)
        assert times.open_end
        assert times.ordered() == [("R", 0), ("L", 3), ("R", 4)]

    def test_no_left_time(self):
        """L = 0, 1, 0, 1 never reaches -1."""
        times = quadrant_decomposition_times(Walk.from_tags("aba"))
        assert times.right_times == (0,)
        assert times.left_times == ()

    def test_needs_origin_start(self):
        with pytest.raises(ValueError):
            quadrant_decomposition_times(Walk(start=(1, 0), steps=[0]))

    def test_split_example(self):
        hat, prime = split_quadrant_walks(Walk.from_tags("abba"))
        assert hat.tags() == "aba"
        assert prime.tags() == "c"

    @given(tags)
    def test_intervals_partition_time(self, text):
        """Hat and prime intervals tile the times 1..n."""
        walk = Walk.from_tags(text)
        hat, prime = quadrant_intervals(quadrant_decomposition_times(walk), walk.length)
        covered = sorted(n for a, b in hat + prime for n in range(a, b + 1))
        assert covered == list(range(1, walk.length + 1))

    @given(tags)
    def test_split_lengths_and_prime_start(self, text):
        walk = Walk.from_tags(text)
        hat, prime = split_quadrant_walks(walk)
        assert hat.length + prime.length == walk.length
        if prime.length:
            assert prime.tags()[0] == "c"
