"""
Unit tests for experiments/tails.py - tail exponent fits on synthetic data.
"""

import numpy as np
import pytest

from src.errors import InsufficientDataError
from src.experiments.tails import (
    MIN_TAIL_COUNT,
    hill_fit,
    rank_regression_fit,
    survival,
    tail_ratio,
)


@pytest.fixture(scope="module")
def pareto_two():
    """Exact Pareto draws with P[X > x] = x^-2 for x >= 1."""
    return 1.0 + np.random.default_rng(11).pareto(2.0, size=50_000)


class TestExponentFits:
    def test_hill_recovers_exponent(self, pareto_two):
        fit = hill_fit(pareto_two)
        assert fit.estimator == "hill"
        assert fit.exponent == pytest.approx(2.0, abs=0.2)
        assert fit.sample_count == 50_000
        assert fit.tail_count == 5_000
        low, high = fit.fitting_range
        assert 1.0 < low < high

    def test_rank_regression_recovers_exponent(self, pareto_two):
        fit = rank_regression_fit(pareto_two)
        assert fit.estimator == "rank-regression"
        assert fit.exponent == pytest.approx(2.0, abs=0.2)

    def test_jitter_is_seeded(self):
        values = np.random.default_rng(3).zipf(2.5, size=5_000)
        first = hill_fit(values, rng=np.random.default_rng(1))
        second = hill_fit(values, rng=np.random.default_rng(1))
        assert first == second

    def test_too_few_samples(self):
        with pytest.raises(InsufficientDataError):
            hill_fit(np.arange(1, 10 * MIN_TAIL_COUNT))

    def test_non_positive_values_are_dropped(self):
        with pytest.raises(InsufficientDataError):
            hill_fit(-np.arange(1, 5_000))

    @pytest.mark.parametrize("tail_range", [(0.2, 0.1), (0.0, 0.1), (0.05, 1.0)])
    def test_bad_tail_range(self, pareto_two, tail_range):
        with pytest.raises(ValueError):
            rank_regression_fit(pareto_two, tail_range)


class TestSurvival:
    def test_inclusive_threshold(self):
        values = [1, 2, 3, 4]
        assert survival(values, np.array([0, 2, 5])).tolist() == [1.0, 0.75, 0.0]

    def test_equal_samples_have_unit_ratio(self):
        values = np.arange(1, 1_001)
        mean, spread = tail_ratio(values, values, (10, 100))
        assert mean == pytest.approx(1.0)
        assert spread == pytest.approx(0.0)

    def test_doubled_tail(self):
        one_sided = np.arange(1, 1_001)
        two_sided = np.concatenate([one_sided, one_sided])
        # twice the count at every threshold, over twice the sample size
        mean, _ = tail_ratio(two_sided, one_sided, (10, 100))
        assert mean == pytest.approx(1.0)

    def test_empty_range(self):
        with pytest.raises(InsufficientDataError):
            tail_ratio([1, 2], [1, 2], (5, 5))

    def test_no_one_sided_mass(self):
        with pytest.raises(InsufficientDataError):
            tail_ratio([50, 60], [1, 2], (10, 100))
