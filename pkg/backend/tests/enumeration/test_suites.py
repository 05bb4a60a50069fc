"""
Tests for the verification suites behind `verify`.
"""

import pytest

from src.enumeration.suites import SUITES, run_suite, stability_check
from src.models.distances import Mode


class TestRunSuite:
    def test_registered_names(self):
        assert set(SUITES) == {
            "roundtrip",
            "pitman",
            "ruin",
            "phi",
            "geodesics",
            "boltzmann-law",
            "cutequiv",
            "quadrant-split",
            "boundary",
            "busemann-stability",
            "slice-identity",
        }

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suite"):
            run_suite("everything")

    @pytest.mark.parametrize(
        "name, parameters",
        [
            ("roundtrip", {"max_steps": 6, "max_edges": 6}),
            ("pitman", {"max_n": 5, "max_unflip": 5}),
            ("ruin", {"max_k": 8}),
            ("phi", {"max_boundary": 4, "max_interior": 3}),
            ("geodesics", {"max_edges": 5, "random_maps": 20, "random_steps": 12}),
            ("boltzmann-law", {"max_edges": 5, "draws": 2_000}),
            ("cutequiv", {"windows": 10, "steps": 500}),
            ("quadrant-split", {"walks": 20, "length": 200}),
            ("boundary", {"walks": 50, "max_length": 200}),
        ],
    )
    def test_small_runs_pass(self, name, parameters):
        result = run_suite(name, **parameters)
        assert result.passed, result.failures
        assert result.suite == name
        assert result.checked > 0
        assert result.parameters.items() >= parameters.items()

    def test_seed_is_recorded(self):
        result = run_suite("cutequiv", windows=3, steps=200, seed=42)
        assert result.parameters["seed"] == 42


class TestBusemannSuites:
    def test_nothing_stabilizes_in_tiny_windows(self):
        result = run_suite(
            "busemann-stability", windows=2, initial_window=8, max_window=8, probes=50
        )
        assert not result.passed
        assert result.checked == 0
        assert result.failures == ["no window stabilized"]

    def test_slice_identity_needs_a_profile(self):
        result = run_suite("slice-identity", windows=2, initial_window=8, max_window=8, probes=50)
        assert result.checked == 0
        assert not result.passed

    def test_censored_replica(self):
        check = stability_check(Mode.LDP, 1, 3, initial_window=8, max_window=8, probes=50)
        assert check.profile is None
        assert check.failures == ()
        assert check.doubling_unchanged is None

    @pytest.mark.slow
    @pytest.mark.parametrize("mode", list(Mode))
    def test_probe_invariance_and_constraints(self, mode):
        checks = [
            stability_check(mode, 2, seed, initial_window=500, max_window=4_000, probes=3)
            for seed in range(8)
        ]
        assert any(check.profile is not None for check in checks)
        for check in checks:
            assert check.failures == ()

    @pytest.mark.slow
    def test_slice_identity_holds(self):
        result = run_suite(
            "slice-identity", windows=8, initial_window=500, max_window=4_000, probes=3
        )
        assert result.passed, result.failures
        assert result.checked > 0


@pytest.mark.slow
class TestDefaultSuites:
    """Every suite at its default, acceptance-scale parameters."""

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_default_run_passes(self, name):
        result = run_suite(name)
        assert result.passed, result.failures
