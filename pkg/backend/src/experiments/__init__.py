"""
Experiment registry, replica runner and estimators.

The experiment catalog lives in `src.experiments.catalog`; it is not
imported here because the Busemann batches themselves use the runner.
"""

from .registry import Experiment, ExperimentRegistry, ExperimentStatus
from .runner import run_replicas

__all__ = ["Experiment", "ExperimentRegistry", "ExperimentStatus", "run_replicas"]
