"""
Unit tests for experiments/registry.py - experiment registry management.
"""

from datetime import datetime

import pytest

from src.experiments.registry import Experiment, ExperimentRegistry, ExperimentStatus


@pytest.fixture
def sample_experiment():
    """An experiment that echoes its parameters."""

    def echo(mode="ldp", seed=0, samples=10):
        return {"mode": mode, "seed": seed, "samples": samples}

    return Experiment(
        name="echo",
        description="Echo the parameters",
        function=echo,
    )


@pytest.fixture
def disabled_experiment():
    return Experiment(
        name="retired",
        description="No longer run",
        function=lambda **_: None,
        status=ExperimentStatus.DISABLED,
    )


@pytest.fixture
def calibration_experiment():
    return Experiment(
        name="selftest",
        description="Synthetic self-test",
        function=lambda seed=0: seed,
        category="calibration",
        status=ExperimentStatus.CALIBRATION,
        modes=["ldp"],
    )


@pytest.fixture
def registry():
    return ExperimentRegistry()


class TestExperiment:
    def test_defaults(self, sample_experiment):
        assert sample_experiment.category == "map"
        assert sample_experiment.status == ExperimentStatus.ACTIVE
        assert sample_experiment.modes == ["ldp", "sdp"]
        assert sample_experiment.call_count == 0
        assert sample_experiment.last_used is None

    def test_execute_updates_statistics(self, sample_experiment):
        result = sample_experiment.execute(mode="sdp", seed=3)
        assert result == {"mode": "sdp", "seed": 3, "samples": 10}
        assert sample_experiment.call_count == 1
        assert isinstance(sample_experiment.last_used, datetime)
        assert sample_experiment.average_execution_time_ms >= 0.0

    def test_execute_reraises(self):
        def broken(**_):
            raise RuntimeError("boom")

        experiment = Experiment(name="broken", description="", function=broken)
        with pytest.raises(RuntimeError, match="boom"):
            experiment.execute(seed=1)
        assert experiment.call_count == 1

    def test_to_dict(self, calibration_experiment):
        calibration_experiment.execute(seed=4)
        data = calibration_experiment.to_dict()
        assert data["name"] == "selftest"
        assert data["status"] == "calibration"
        assert data["modes"] == ["ldp"]
        assert data["call_count"] == 1
        assert data["last_used"] is not None


class TestExperimentRegistry:
    """Test ExperimentRegistry functionality."""

    def test_init(self, registry):
        assert registry.experiments == {}
        assert registry.categories == {}

    def test_register(self, registry, sample_experiment):
        registry.register(sample_experiment)
        assert registry.get("echo") is sample_experiment
        assert registry.categories == {"map": ["echo"]}

    def test_register_twice_keeps_one_entry(self, registry, sample_experiment):
        registry.register(sample_experiment)
        registry.register(sample_experiment)
        assert registry.categories["map"] == ["echo"]

    def test_get_unknown(self, registry):
        assert registry.get("missing") is None

    def test_names_sorted(self, registry, sample_experiment, calibration_experiment):
        registry.register(calibration_experiment)
        registry.register(sample_experiment)
        assert registry.names() == ["echo", "selftest"]

    def test_execute(self, registry, sample_experiment):
        registry.register(sample_experiment)
        assert registry.execute("echo", seed=2)["seed"] == 2

    def test_execute_not_found(self, registry):
        with pytest.raises(ValueError, match="Experiment 'missing' not found in registry"):
            registry.execute("missing")

    def test_execute_disabled(self, registry, disabled_experiment):
        registry.register(disabled_experiment)
        with pytest.raises(ValueError, match="Experiment 'retired' is disabled"):
            registry.execute("retired")

    def test_execute_wrong_mode(self, registry, calibration_experiment):
        registry.register(calibration_experiment)
        with pytest.raises(ValueError, match="does not run in mode 'sdp'"):
            registry.execute("selftest", mode="sdp")
        assert calibration_experiment.call_count == 0

    def test_by_category_skips_disabled(
        self, registry, sample_experiment, disabled_experiment, calibration_experiment
    ):
        for experiment in (sample_experiment, disabled_experiment, calibration_experiment):
            registry.register(experiment)
        assert registry.by_category("map") == [sample_experiment]
        assert registry.by_category("calibration") == [calibration_experiment]
        assert registry.by_category("unknown") == []

    def test_stats(self, registry, sample_experiment, calibration_experiment):
        registry.register(sample_experiment)
        registry.register(calibration_experiment)
        registry.execute("echo")
        registry.execute("echo", mode="ldp")
        stats = registry.stats()
        assert stats["total_experiments"] == 2
        assert stats["total_calls"] == 2
        assert stats["categories"]["map"] == {"experiment_count": 1, "total_calls": 2}
        assert stats["categories"]["calibration"]["total_calls"] == 0
