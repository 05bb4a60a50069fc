"""
Experiment registry.

Experiments are registered by name with a category and a status, executed
through the registry (which the CLI dispatches on) and tracked with simple
call statistics.
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from openinference.semconv.trace import SpanAttributes
from opentelemetry import trace

logger = logging.getLogger("experiments_logger")
tracer = trace.get_tracer(__name__)


class ExperimentStatus(Enum):
    ACTIVE = "active"
    CALIBRATION = "calibration"
    DISABLED = "disabled"


@dataclass
class Experiment:
    """A named experiment returning an ExperimentReport."""

    name: str
    description: str
    function: Callable[..., Any]
    category: str = "map"
    status: ExperimentStatus = ExperimentStatus.ACTIVE
    modes: List[str] = field(default_factory=lambda: ["ldp", "sdp"])

    call_count: int = 0
    last_used: Optional[datetime] = None
    average_execution_time_ms: float = 0.0

    def execute(self, **parameters) -> Any:
        """Run the experiment inside a span and update the call statistics."""
        start_time = datetime.now()
        self.call_count += 1
        self.last_used = start_time
        try:
            with tracer.start_as_current_span(
                name=f"experiment_{self.name}",
                attributes={
                    SpanAttributes.OPENINFERENCE_SPAN_KIND: "CHAIN",
                    "experiment.name": self.name,
                    "experiment.category": self.category,
                    "experiment.call_count": self.call_count,
                },
            ) as span:
                for key in ("mode", "seed", "samples"):
                    if parameters.get(key) is not None:
                        span.set_attribute(f"experiment.{key}", str(parameters[key]))
                result = self.function(**parameters)

                execution_time = (datetime.now() - start_time).total_seconds() * 1000
                self.average_execution_time_ms = (
                    self.average_execution_time_ms * (self.call_count - 1) + execution_time
                ) / self.call_count
                span.set_attribute("experiment.execution_time_ms", execution_time)
                logger.info(f"Experiment {self.name} finished in {execution_time:.2f}ms")
                return result
        except Exception as e:
            logger.error(f"Error running experiment {self.name}: {str(e)}")
            raise

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "category": self.category,
            "status": self.status.value,
            "modes": self.modes,
            "call_count": self.call_count,
            "last_used": self.last_used.isoformat() if self.last_used else None,
            "average_execution_time_ms": self.average_execution_time_ms,
        }


class ExperimentRegistry:
    """Registry of experiments by name and category."""

    def __init__(self):
        self.experiments: Dict[str, Experiment] = {}
        self.categories: Dict[str, List[str]] = {}

    def register(self, experiment: Experiment) -> None:
        self.experiments[experiment.name] = experiment
        names = self.categories.setdefault(experiment.category, [])
        if experiment.name not in names:
            names.append(experiment.name)
        logger.debug(f"Registered experiment: {experiment.name}")

    def get(self, name: str) -> Optional[Experiment]:
        return self.experiments.get(name)

    def names(self) -> List[str]:
        return sorted(self.experiments)

    def execute(self, name: str, **parameters) -> Any:
        """Run an experiment by name; unknown or disabled names raise ValueError."""
        experiment = self.get(name)
        if not experiment:
            raise ValueError(f"Experiment '{name}' not found in registry")
        if experiment.status == ExperimentStatus.DISABLED:
            raise ValueError(f"Experiment '{name}' is disabled")
        mode = parameters.get("mode")
        if mode is not None and mode not in experiment.modes:
            raise ValueError(
                f"Experiment '{name}' does not run in mode '{mode}', "
                f"expected one of {experiment.modes}"
            )
        return experiment.execute(**parameters)

    def by_category(self, category: str) -> List[Experiment]:
        return [
            e
            for e in self.experiments.values()
            if e.category == category and e.status != ExperimentStatus.DISABLED
        ]

    def stats(self) -> Dict[str, Any]:
        """Call statistics per category."""
        categories = {}
        for category, names in self.categories.items():
            members = [self.experiments[name] for name in names]
            categories[category] = {
                "experiment_count": len(members),
                "total_calls": sum(e.call_count for e in members),
            }
        return {
            "total_experiments": len(self.experiments),
            "total_calls": sum(e.call_count for e in self.experiments.values()),
            "categories": categories,
        }
