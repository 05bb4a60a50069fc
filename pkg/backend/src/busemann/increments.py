"""
Batches of Busemann increments.

Each replica estimates one profile on its own window sequence. Replicas that
never stabilize are censored: dropped from the sample and counted.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Tuple

import numpy as np
from opentelemetry import trace

from src.config import (
    DEFAULT_CENSORING_THRESHOLD,
    DEFAULT_INITIAL_WINDOW,
    DEFAULT_MAX_WINDOW,
    DEFAULT_PROBES,
)
from src.errors import CensoringThresholdError, NotStabilizedError
from src.experiments.runner import run_replicas
from src.models.busemann import BusemannProfile
from src.models.distances import Mode
from src.models.experiments import CensoringStats

from .profile import estimate_profile

logger = logging.getLogger("busemann_logger")
tracer = trace.get_tracer(__name__)

WHICH = ("positive_increment", "negative_increment")


@dataclass(frozen=True)
class WindowParams:
    initial_window: int = DEFAULT_INITIAL_WINDOW
    max_window: int = DEFAULT_MAX_WINDOW
    probes: int = DEFAULT_PROBES


def _replica_profile(
    seed, mode: Mode, K: int, params: WindowParams, model: str
) -> Tuple[Optional[BusemannProfile], int]:
    try:
        profile = estimate_profile(
            mode,
            K,
            initial_window=params.initial_window,
            max_window=params.max_window,
            probes=params.probes,
            seed=seed,
            model=model,
        )
        return profile, profile.window
    except NotStabilizedError as exc:
        return None, exc.window


def profile_batch(
    mode: Mode,
    K: int,
    n_samples: int,
    seed: int,
    params: WindowParams = WindowParams(),
    model: str = "uibot",
    workers: int = 1,
    progress: bool = False,
) -> Tuple[List[Optional[BusemannProfile]], CensoringStats]:
    """One profile per replica (None when censored), in replica order."""
    mode = Mode.parse(mode)
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    with tracer.start_as_current_span("profile_batch", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("mode", mode.value)
        span.set_attribute("batch.size", n_samples)
        span.set_attribute("batch.seed", seed)
        results = run_replicas(
            partial(_replica_profile, mode=mode, K=K, params=params, model=model),
            n_samples,
            seed,
            workers=workers,
            progress=progress,
            description=f"{model} {mode.value} profiles",
        )
        profiles = [profile for profile, _ in results]
        censored = sum(profile is None for profile in profiles)
        stats = CensoringStats(
            total=n_samples,
            censored=censored,
            max_window=max(window for _, window in results),
        )
        span.set_attribute("batch.censored", censored)
        return profiles, stats


def increment_samples(
    mode: Mode,
    which: str,
    n_samples: int,
    seed: int,
    params: WindowParams = WindowParams(),
    model: str = "uibot",
    workers: int = 1,
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    progress: bool = False,
) -> Tuple[np.ndarray, CensoringStats]:
    """X(1) - X(0) or X(0) - X(-1) from K = 1 profiles.

    Raises CensoringThresholdError when more than `censoring_threshold` of
    the replicas are censored.
    """
    if which not in WHICH:
        raise ValueError(f"Unknown increment '{which}', expected one of {WHICH}")
    profiles, stats = profile_batch(
        mode, 1, n_samples, seed, params, model, workers, progress
    )
    if stats.rate > censoring_threshold:
        logger.error(
            f"Censoring rate {stats.rate:.3f} above threshold {censoring_threshold}"
        )
        raise CensoringThresholdError(
            f"{stats.censored} of {stats.total} replicas did not stabilize",
            stats.censored,
            stats.total,
        )
    values = [getattr(p, which) for p in profiles if p is not None]
    return np.asarray(values, dtype=np.int64), stats
