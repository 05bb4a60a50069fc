"""
Runtime settings and numerical defaults.

Settings read from the environment only steer logging, telemetry and the
default worker count. Everything that can change a numerical result is a
module constant here and an explicit parameter at the call site.
"""

import os
import tempfile
from pathlib import Path
from typing import Dict, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

SERVICE_NAME = "bipolar-kmsw"
SERVICE_VERSION = "1.0.0"

# Enumeration caps
DEFAULT_WALK_CAP = 12
DEFAULT_WEIGHTED_LAW_CAP = 9
DEFAULT_COUNT_EDGE_CAP = 13
DEFAULT_PATH_EDGE_CAP = 40
CHANNELED_EXACT_CUTOFF = 12
CHANNELED_EDGE_CAP = 14

# Busemann windows
DEFAULT_INITIAL_WINDOW = 2_000
DEFAULT_MAX_WINDOW = 64_000
DEFAULT_PROBES = 4
DEFAULT_GUARD_FRACTION = 0.25
DEFAULT_CENSORING_THRESHOLD = 0.2
# Share of profiles that must survive a doubled window
DEFAULT_DOUBLING_STABILITY = 0.95
# Largest window the stability suites grow to
DEFAULT_SUITE_MAX_WINDOW = 8_000

# Samplers
DEFAULT_MAX_ATTEMPTS = 100_000
DEFAULT_MAX_SEGMENT_STEPS = 1_000_000

# Estimators
DEFAULT_TAIL_RANGE = (0.01, 0.10)
DEFAULT_BOOTSTRAP_REPLICATES = 200
DEFAULT_KS_LEVEL = 0.01

# Finite-volume exponents
DEFAULT_CELL_SIZES = tuple(2**p for p in range(12, 19))
DEFAULT_BOLTZMANN_SIZES = (16, 32, 64, 128, 256)
DEFAULT_SIZE_REPS = 50
DEFAULT_SELF_SIMILARITY_SCALE = 8
DEFAULT_CUBIC_GRID = (0.02, 0.04, 0.06, 0.08, 0.1, 0.12, 0.14, 0.16, 0.18, 0.2)

TOLERANCES_VERSION = "1"

# Acceptance intervals keyed by (experiment, statistic). Values are the
# closed intervals the fitted quantity must fall into, or the number of
# standard errors allowed around the expected value.
ACCEPTANCE_TOLERANCES: Dict[Tuple[str, str], Dict[str, float]] = {
    ("tail", "ldp_exponent"): {"expected": 2 / 3, "lower": 0.55, "upper": 0.78},
    ("tail", "sdp_exponent"): {"expected": 4 / 3, "lower": 1.15, "upper": 1.55},
    ("tail", "tail_ratio"): {"expected": 2.0, "lower": 1.6, "upper": 2.4},
    ("kappa", "kappa"): {"expected": 0.0, "z": 3.0},
    ("kappa", "f0"): {"expected_sign": 1.0, "z": 5.0},
    ("kappa", "g_minus_one"): {"expected_sign": 1.0, "z": 5.0},
    ("recursive", "ldp_aggregate"): {"expected": 0.0, "z": 3.0},
    ("recursive", "sdp_aggregate"): {"expected": 0.0, "z": 3.0},
    ("recursive", "cell"): {"expected": 0.0, "z": 4.0},
    ("cubic", "residual"): {"expected": 0.0, "z": 3.0},
    ("cell-path", "ldp_slope"): {"expected": 0.75, "lower": 0.69, "upper": 0.81},
    ("cell-path", "sdp_slope"): {
        "expected": 0.375,
        "lower": 0.315,
        "upper": 0.435,
    },
    ("boltzmann", "ldp_slope"): {"expected": 1.5, "lower": 1.38, "upper": 1.62},
    ("boltzmann", "edges_slope"): {"expected": 2.0, "lower": 1.9, "upper": 2.1},
    ("boltzmann", "sdp_boundary_slope"): {
        "expected": 0.75,
        "lower": 0.63,
        "upper": 0.87,
    },
    ("self-sim", "ks_pvalue"): {"minimum": DEFAULT_KS_LEVEL},
    ("symmetry", "ks_pvalue"): {"minimum": DEFAULT_KS_LEVEL},
    ("symmetry", "adjacent_correlation"): {"expected": 0.0, "z": 3.0},
    ("calibrate", "pareto_exponent"): {"z": 3.0},
    ("calibrate", "ks_pvalue"): {"minimum": DEFAULT_KS_LEVEL},
}


class Settings(BaseModel):
    """Environment-derived settings; none of them affects results."""

    log_dir: Path
    log_level: str = "WARNING"
    workers: int = Field(default=1, ge=1)
    otlp_endpoint: Optional[str] = None
    testing: bool = False

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{value}'")
        return level


def default_log_dir(testing: bool) -> Path:
    """Log directory next to src/, or a temporary one under tests."""
    if testing:
        return Path(tempfile.gettempdir()) / "bipolar-kmsw-test-logs"
    return Path(__file__).resolve().parent.parent / "logs"


def load_settings() -> Settings:
    """Load settings from a .env file (if any) and BIPOLAR_* variables."""
    load_dotenv()
    testing = os.environ.get("TESTING") == "true"
    log_dir = os.environ.get("BIPOLAR_LOG_DIR")
    return Settings(
        log_dir=Path(log_dir) if log_dir else default_log_dir(testing),
        log_level=os.environ.get("BIPOLAR_LOG_LEVEL", "WARNING"),
        workers=int(os.environ.get("BIPOLAR_WORKERS", "1")),
        otlp_endpoint=os.environ.get("BIPOLAR_OTLP_ENDPOINT") or None,
        testing=testing,
    )
