"""
The experiment catalog.

Every experiment is a deterministic function of its parameters and master
seed (the worker count never enters) and returns an ExperimentReport whose
verdicts follow from the estimates and the versioned tolerances alone.
Estimator-side randomness (tie-breaking jitter, bootstrap, synthetic
calibration draws) comes from streams disjoint from the replica seeds.
"""

import dataclasses
import logging
import math
import time
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import special, stats

from src.busemann.increments import WindowParams, profile_batch
from src.config import (
    ACCEPTANCE_TOLERANCES,
    DEFAULT_BOLTZMANN_SIZES,
    DEFAULT_BOOTSTRAP_REPLICATES,
    DEFAULT_CELL_SIZES,
    DEFAULT_CENSORING_THRESHOLD,
    DEFAULT_CUBIC_GRID,
    DEFAULT_SELF_SIMILARITY_SCALE,
    DEFAULT_SIZE_REPS,
    DEFAULT_TAIL_RANGE,
    TOLERANCES_VERSION,
)
from src.distances.dp import boundary_sdp_statistics, max_xdp, xdp
from src.errors import CensoringThresholdError, InsufficientDataError
from src.models.busemann import BusemannProfile
from src.models.distances import Mode
from src.models.experiments import (
    Acceptance,
    CensoringStats,
    Estimate,
    ExperimentReport,
)
from src.samplers.boltzmann import sample_boltzmann_marked
from src.samplers.cells import sample_cell
from src.walks.rng import child_seeds, estimator_rng

from .registry import Experiment, ExperimentRegistry, ExperimentStatus
from .runner import run_replicas
from .stats import (
    PairedIncrements,
    bootstrap_pmf,
    characteristic_function,
    delta_method,
    kappa,
    ldp_aggregate,
    ldp_cell,
    loglog_slope,
    point_mass,
    rank_correlation,
    sdp_aggregate,
    sdp_cell,
)
from .tails import hill_fit, rank_regression_fit, survival, tail_ratio

logger = logging.getLogger("experiments_logger")

SampleSink = Optional[Callable[[PairedIncrements], None]]

# estimator_rng streams
_JITTER_ONE_SIDED = 1
_JITTER_TWO_SIDED = 2
_BOOTSTRAP = 3
_PARETO = 4
_STABLE_NEAR = 5
_STABLE_FAR = 6


def acceptance_for(
    experiment: str, statistic: str, expected: Optional[float] = None
) -> Acceptance:
    """The Acceptance rule of a (experiment, statistic) tolerance entry."""
    entry = ACCEPTANCE_TOLERANCES[(experiment, statistic)]
    if "minimum" in entry:
        return Acceptance(kind="minimum", lower=entry["minimum"])
    if "expected_sign" in entry:
        return Acceptance(kind="positive", z=entry["z"])
    if "lower" in entry:
        return Acceptance(
            kind="interval",
            expected=entry.get("expected"),
            lower=entry["lower"],
            upper=entry["upper"],
        )
    return Acceptance(
        kind="zscore",
        expected=entry["expected"] if expected is None else expected,
        z=entry["z"],
    )


def _report(
    name: str,
    mode: Optional[Mode],
    parameters: Dict,
    seed: int,
    started: float,
    **fields,
) -> ExperimentReport:
    return ExperimentReport(
        name=name,
        mode=mode.value if mode is not None else None,
        parameters=parameters,
        master_seed=seed,
        tolerances_version=TOLERANCES_VERSION,
        wall_clock_seconds=time.perf_counter() - started,
        **fields,
    )


def _batch_parameters(
    mode: Mode,
    samples: int,
    window: WindowParams,
    model: str,
    censoring_threshold: float,
    **extra,
) -> Dict:
    return {
        "mode": mode.value,
        "samples": samples,
        "model": model,
        "censoring_threshold": censoring_threshold,
        **dataclasses.asdict(window),
        **extra,
    }


def _collect(
    mode: Mode,
    K: int,
    samples: int,
    seed: int,
    window: WindowParams,
    model: str,
    workers: int,
    censoring_threshold: float,
    progress: bool,
) -> Tuple[List[BusemannProfile], CensoringStats]:
    """Stabilized profiles of a batch; too much censoring aborts."""
    profiles, censoring = profile_batch(
        mode, K, samples, seed, window, model, workers, progress
    )
    if censoring.rate > censoring_threshold:
        logger.error(
            f"Censoring rate {censoring.rate:.3f} above threshold {censoring_threshold}"
        )
        raise CensoringThresholdError(
            f"{censoring.censored} of {censoring.total} replicas did not stabilize",
            censoring.censored,
            censoring.total,
        )
    kept = [p for p in profiles if p is not None]
    if len(kept) < 2:
        raise InsufficientDataError(f"only {len(kept)} stabilized profiles")
    logger.info(f"Collected {len(kept)} {mode.value} profiles (K={K})")
    return kept, censoring


def _paired(profiles: Sequence[BusemannProfile], on_samples: SampleSink) -> PairedIncrements:
    sample = PairedIncrements(
        negative=np.array([p.negative_increment for p in profiles], dtype=np.int64),
        positive=np.array([p.positive_increment for p in profiles], dtype=np.int64),
    )
    if on_samples is not None:
        on_samples(sample)
    return sample


def _slope_estimate(
    name: str, x: Sequence[float], y: Sequence[float], acceptance: Acceptance, **details
) -> Estimate:
    fit = loglog_slope(x, y)
    return Estimate(
        name=name,
        value=fit.slope,
        se=fit.se,
        acceptance=acceptance,
        details={"intercept": fit.intercept, "points": fit.points, **details},
    )


def tail_experiment(
    mode="ldp",
    samples: int = 100_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    tail_range: Tuple[float, float] = DEFAULT_TAIL_RANGE,
    progress: bool = False,
    on_samples: SampleSink = None,
) -> ExperimentReport:
    """Tail exponents of the one-sided positive increment (LDP: left tail,
    SDP: right tail) and of |X(0) - X(-1)|, plus their tail ratio."""
    started = time.perf_counter()
    mode = Mode.parse(mode)
    profiles, censoring = _collect(
        mode, 1, samples, seed, window, model, workers, censoring_threshold, progress
    )
    sample = _paired(profiles, on_samples)
    one_sided = -sample.positive if mode is Mode.LDP else sample.positive
    two_sided = np.abs(sample.negative)

    fits = {}
    for label, values, stream in (
        ("one_sided", one_sided, _JITTER_ONE_SIDED),
        ("two_sided", two_sided, _JITTER_TWO_SIDED),
    ):
        fits[label] = (
            hill_fit(values, tail_range, estimator_rng(seed, stream)),
            rank_regression_fit(values, tail_range, estimator_rng(seed, stream)),
        )

    key = f"{mode.value}_exponent"
    estimates = []
    for label, (hill, rank) in fits.items():
        for fit, suffix in ((hill, ""), (rank, "_rank")):
            estimates.append(
                Estimate(
                    name=f"{label}_exponent{suffix}",
                    value=fit.exponent,
                    se=fit.se,
                    acceptance=acceptance_for("tail", key),
                    details={
                        "estimator": fit.estimator,
                        "fitting_range": list(fit.fitting_range),
                    },
                )
            )

    one_hill, two_hill = fits["one_sided"][0], fits["two_sided"][0]
    low = max(one_hill.fitting_range[0], two_hill.fitting_range[0])
    high = min(one_hill.fitting_range[1], two_hill.fitting_range[1])
    if not low < high:
        low, high = one_hill.fitting_range
    ratio, spread = tail_ratio(two_sided, one_sided, (low, high))
    estimates.append(
        Estimate(
            name="tail_ratio",
            value=ratio,
            acceptance=acceptance_for("tail", "tail_ratio"),
            details={"spread": spread, "range": [low, high]},
        )
    )

    if mode is Mode.LDP:
        f0 = sample.pmfs()["f"].get(0, 0.0)
        c1 = math.sqrt(3) * special.gamma(2 / 3) / (2 * math.pi) * ((3 + f0) / 2) ** (1 / 3)
        grid = np.geomspace(*one_hill.fitting_range, num=16)
        plateau = float(np.median(survival(one_sided, grid) * grid ** (2 / 3)))
        estimates.append(
            Estimate(name="c1", value=float(c1), details={"f0": f0, "plateau": plateau})
        )

    if censoring.censored:
        # every censored replica counted at the largest observed value
        padded = np.concatenate(
            [one_sided, np.full(censoring.censored, one_sided.max())]
        )
        try:
            censoring.sensitivity["one_sided_exponent"] = hill_fit(
                padded, tail_range, estimator_rng(seed, _JITTER_ONE_SIDED)
            ).exponent
        except InsufficientDataError as exc:
            logger.warning(f"No censoring sensitivity for the tail fit: {exc}")

    return _report(
        "tail",
        mode,
        _batch_parameters(
            mode, samples, window, model, censoring_threshold, tail_range=list(tail_range)
        ),
        seed,
        started,
        estimates=estimates,
        tail_fits=[fit for pair in fits.values() for fit in pair],
        censoring=censoring,
    )


def _cell_statistics(n: int, seed, mode: Mode) -> Tuple[Optional[int], ...]:
    map_ = sample_cell(n, seed)
    if mode is Mode.LDP:
        return (max_xdp(map_, Mode.LDP),)
    statistics = boundary_sdp_statistics(map_)
    return statistics.lower_to_upper, statistics.source_to_right


def _size_medians(
    task: Callable,
    sizes: Sequence[int],
    names: Sequence[str],
    reps: int,
    seed: int,
    workers: int,
    progress: bool,
    label: str,
) -> Tuple[Dict[str, List[float]], List[Dict]]:
    """Median of each statistic per size; size i draws from child seed i."""
    if len(set(sizes)) < 2:
        raise InsufficientDataError("a slope needs at least two distinct sizes")
    medians: Dict[str, List[float]] = {name: [] for name in names}
    rows = []
    for size, size_seed in zip(sizes, child_seeds(seed, len(sizes))):
        values = run_replicas(
            partial(task, size),
            reps,
            size_seed,
            workers=workers,
            progress=progress,
            description=f"{label}={size}",
        )
        row = {label: size, "reps": reps}
        for i, name in enumerate(names):
            column = [v[i] for v in values if v[i] is not None]
            if not column:
                raise InsufficientDataError(f"no finite {name} at {label}={size}")
            medians[name].append(float(np.median(column)))
            row[f"median_{name}"] = medians[name][-1]
        rows.append(row)
    return medians, rows


def cell_path_experiment(
    mode="ldp",
    samples: int = DEFAULT_SIZE_REPS,
    seed: int = 0,
    workers: int = 1,
    sizes: Sequence[int] = DEFAULT_CELL_SIZES,
    progress: bool = False,
) -> ExperimentReport:
    """Growth exponents of path statistics of the cell with n steps.

    LDP: median longest directed path. SDP: median of the largest
    min-over-upper-boundary SDP from the lower boundary, and of the largest
    SDP from the root tail to the lower-right side.
    """
    started = time.perf_counter()
    mode = Mode.parse(mode)
    sizes = [int(n) for n in sizes]
    names = (
        ("max_ldp",) if mode is Mode.LDP else ("lower_to_upper_sdp", "source_to_right_sdp")
    )

    medians, rows = _size_medians(
        partial(_cell_statistics, mode=mode),
        sizes,
        names,
        samples,
        seed,
        workers,
        progress,
        "n",
    )
    if mode is Mode.LDP:
        estimates = [
            _slope_estimate(
                "ldp_slope", sizes, medians["max_ldp"], acceptance_for("cell-path", "ldp_slope")
            )
        ]
    else:
        estimates = [
            _slope_estimate(
                "sdp_slope",
                sizes,
                medians["lower_to_upper_sdp"],
                acceptance_for("cell-path", "sdp_slope"),
            ),
            _slope_estimate(
                "sdp_lower_bound_slope",
                sizes,
                medians["source_to_right_sdp"],
                Acceptance(kind="none"),
                expected=0.375,
            ),
        ]
    return _report(
        "cell-path",
        mode,
        {"mode": mode.value, "reps": samples, "sizes": sizes},
        seed,
        started,
        estimates=estimates,
        tables={"sizes": rows},
    )


def _boltzmann_statistics(r: int, seed) -> Tuple[int, int, int, int]:
    map_, _ = sample_boltzmann_marked(r, seed)
    source, sink = map_.sources()[0], map_.sinks()[0]
    return (
        int(xdp(map_, Mode.LDP, source, sink)),
        int(xdp(map_, Mode.SDP, source, sink)),
        boundary_sdp_statistics(map_).source_to_right,
        map_.edge_count,
    )


def boltzmann_experiment(
    mode=None,
    samples: int = DEFAULT_SIZE_REPS,
    seed: int = 0,
    workers: int = 1,
    sizes: Sequence[int] = DEFAULT_BOLTZMANN_SIZES,
    progress: bool = False,
) -> ExperimentReport:
    """Growth in the right boundary length r of LDP(source, sink), of the
    SDP statistics and of the edge count of marked Boltzmann maps."""
    started = time.perf_counter()
    sizes = [int(r) for r in sizes]
    medians, rows = _size_medians(
        _boltzmann_statistics,
        sizes,
        ("ldp_source_sink", "sdp_source_sink", "sdp_source_right", "edges"),
        samples,
        seed,
        workers,
        progress,
        "r",
    )
    estimates = [
        _slope_estimate(
            "ldp_slope",
            sizes,
            medians["ldp_source_sink"],
            acceptance_for("boltzmann", "ldp_slope"),
        ),
        _slope_estimate(
            "edges_slope", sizes, medians["edges"], acceptance_for("boltzmann", "edges_slope")
        ),
        _slope_estimate(
            "sdp_boundary_slope",
            sizes,
            medians["sdp_source_right"],
            acceptance_for("boltzmann", "sdp_boundary_slope"),
        ),
        _slope_estimate(
            "sdp_slope",
            sizes,
            medians["sdp_source_sink"],
            Acceptance(kind="none"),
            upper_bound_exponent=0.75,
        ),
    ]
    return _report(
        "boltzmann",
        Mode.parse(mode) if mode is not None else None,
        {"reps": samples, "sizes": sizes},
        seed,
        started,
        estimates=estimates,
        tables={"sizes": rows},
    )


def recursive_experiment(
    mode="ldp",
    samples: int = 100_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    x_range: int = 3,
    progress: bool = False,
    on_samples: SampleSink = None,
) -> ExperimentReport:
    """Residuals of the mode's recursive equation per (x, y) cell and of its
    aggregate identity, with delta-method standard errors.

    Series over j run over the whole observed support of f, so no tail
    truncation enters the residuals.
    """
    started = time.perf_counter()
    mode = Mode.parse(mode)
    profiles, censoring = _collect(
        mode, 1, samples, seed, window, model, workers, censoring_threshold, progress
    )
    sample = _paired(profiles, on_samples)
    pmfs = sample.pmfs()
    f_support = sorted(pmfs["f"])
    if mode is Mode.LDP:
        cell, aggregate, ys = ldp_cell, ldp_aggregate(), (-3, -2, -1)
        off_support = sum(p for v, p in pmfs["g"].items() if v >= 0)
    else:
        cell, aggregate, ys = sdp_cell, sdp_aggregate(), (-1, 0, 1)
        off_support = sum(p for v, p in pmfs["g"].items() if v <= -2)

    value, se = delta_method(aggregate, sample)
    estimates = [
        Estimate(
            name=f"{mode.value}_aggregate",
            value=value,
            se=se,
            acceptance=acceptance_for("recursive", f"{mode.value}_aggregate"),
        )
    ]
    rows = []
    for x in range(-x_range, x_range + 1):
        for y in ys:
            value, se = delta_method(cell(x, y, f_support), sample)
            estimate = Estimate(
                name=f"cell[{x},{y}]",
                value=value,
                se=se,
                acceptance=acceptance_for("recursive", "cell"),
            )
            estimates.append(estimate)
            rows.append(
                {"x": x, "y": y, "residual": value, "se": se, "verdict": estimate.verdict.value}
            )
    estimates.append(
        Estimate(name="off_support_mass", value=off_support, details={"expected": 0.0})
    )
    return _report(
        "recursive",
        mode,
        _batch_parameters(
            mode, samples, window, model, censoring_threshold, x_range=x_range, y_values=list(ys)
        ),
        seed,
        started,
        estimates=estimates,
        tables={"cells": rows},
        censoring=censoring,
    )


def kappa_experiment(
    mode="sdp",
    samples: int = 100_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    progress: bool = False,
    on_samples: SampleSink = None,
) -> ExperimentReport:
    """kappa = 3 - 6 g(-1)^2 - f(0) for SDP increments, with f(0) > 0 and
    g(-1) > 0 checked alongside."""
    started = time.perf_counter()
    mode = Mode.parse(mode)
    if mode is not Mode.SDP:
        raise ValueError("kappa is defined for SDP increments only")
    profiles, censoring = _collect(
        mode, 1, samples, seed, window, model, workers, censoring_threshold, progress
    )
    sample = _paired(profiles, on_samples)
    estimates = []
    for name, poly in (
        ("kappa", kappa()),
        ("f0", point_mass("f", 0)),
        ("g_minus_one", point_mass("g", -1)),
    ):
        value, se = delta_method(poly, sample)
        estimates.append(
            Estimate(name=name, value=value, se=se, acceptance=acceptance_for("kappa", name))
        )
    return _report(
        "kappa",
        mode,
        _batch_parameters(mode, samples, window, model, censoring_threshold),
        seed,
        started,
        estimates=estimates,
        censoring=censoring,
    )


def _cubic_residual(
    support: np.ndarray, probs: np.ndarray, g_minus_one, t: np.ndarray, mode: Mode
) -> np.ndarray:
    """F^3 - K F^2 + 3F - 1 per (replicate, t); F is the characteristic
    function of the negative increment."""
    probs = np.atleast_2d(probs)
    g = np.atleast_1d(np.asarray(g_minus_one, dtype=float))[:, None]
    f0 = probs[:, support == 0].sum(axis=1)[:, None]
    F = characteristic_function(support, probs, t)
    if mode is Mode.LDP:
        K = -f0 + (3 + f0) * np.cos(t)
    else:
        K = f0 + (3 + 2 * g**2 - f0) * np.cos(t) - 2 * g**2 * np.cos(2 * t)
    return F**3 - K * F**2 + 3 * F - 1


def cubic_experiment(
    mode="ldp",
    samples: int = 100_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    t_grid: Sequence[float] = DEFAULT_CUBIC_GRID,
    replicates: int = DEFAULT_BOOTSTRAP_REPLICATES,
    progress: bool = False,
    on_samples: SampleSink = None,
) -> ExperimentReport:
    """|F^3 - K F^2 + 3F - 1| on a grid of small t with bootstrap bands."""
    started = time.perf_counter()
    mode = Mode.parse(mode)
    t = np.asarray(t_grid, dtype=float)
    if t.size == 0 or (t <= 0).any():
        raise ValueError("the t grid must be nonempty and positive")
    profiles, censoring = _collect(
        mode, 1, samples, seed, window, model, workers, censoring_threshold, progress
    )
    sample = _paired(profiles, on_samples)
    pmfs = sample.pmfs()
    n = len(sample)
    g_minus_one = pmfs["g"].get(-1, 0.0)

    rng = estimator_rng(seed, _BOOTSTRAP)
    support, boot_f = bootstrap_pmf(pmfs["f"], n, replicates, rng)
    boot_g = rng.binomial(n, g_minus_one, size=replicates) / n
    probs = np.array([pmfs["f"][v] for v in support])

    point = _cubic_residual(support, probs, g_minus_one, t, mode)[0]
    boot = _cubic_residual(support, boot_f, boot_g, t, mode)
    # band of the complex residual: both parts contribute to its modulus
    se = np.sqrt(boot.real.var(axis=0, ddof=1) + boot.imag.var(axis=0, ddof=1))
    at_zero = float(abs(_cubic_residual(support, probs, g_minus_one, np.zeros(1), mode)[0, 0]))

    rows = [{"t": 0.0, "residual": at_zero, "se": 0.0}]
    estimates = []
    for t_value, residual, band in zip(t, np.abs(point), se):
        estimate = Estimate(
            name=f"residual[t={t_value:g}]",
            value=float(residual),
            se=float(band),
            acceptance=acceptance_for("cubic", "residual"),
        )
        estimates.append(estimate)
        rows.append({"t": float(t_value), "residual": float(residual), "se": float(band)})
    return _report(
        "cubic",
        mode,
        _batch_parameters(
            mode,
            samples,
            window,
            model,
            censoring_threshold,
            t_grid=[float(v) for v in t],
            replicates=replicates,
        ),
        seed,
        started,
        estimates=estimates,
        tables={"residuals": rows},
        censoring=censoring,
    )


def _scaling_exponent(mode: Mode) -> float:
    return 1.5 if mode is Mode.LDP else 0.75


def self_similarity_experiment(
    mode="ldp",
    samples: int = 20_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    scale: int = DEFAULT_SELF_SIMILARITY_SCALE,
    progress: bool = False,
) -> ExperimentReport:
    """Two-sample KS between X(k)/k^a and X(2k)/(2k)^a on disjoint halves of
    the replicas (a = 3/2 for LDP, 3/4 for SDP)."""
    started = time.perf_counter()
    mode = Mode.parse(mode)
    if scale < 8:
        raise ValueError("the self-similarity scale must be at least 8")
    profiles, censoring = _collect(
        mode, 2 * scale, samples, seed, window, model, workers, censoring_threshold, progress
    )
    exponent = _scaling_exponent(mode)
    half = len(profiles) // 2
    near = np.array([p[scale] for p in profiles[:half]], dtype=float) / scale**exponent
    far = np.array([p[2 * scale] for p in profiles[half:]], dtype=float) / (
        2 * scale
    ) ** exponent
    statistic, pvalue = stats.ks_2samp(near, far)
    estimates = [
        Estimate(
            name="ks_pvalue",
            value=float(pvalue),
            acceptance=acceptance_for("self-sim", "ks_pvalue"),
            details={"statistic": float(statistic), "scale": scale, "exponent": exponent},
        )
    ]
    return _report(
        "self-sim",
        mode,
        _batch_parameters(mode, samples, window, model, censoring_threshold, scale=scale),
        seed,
        started,
        estimates=estimates,
        censoring=censoring,
    )


def symmetry_experiment(
    mode="ldp",
    samples: int = 20_000,
    seed: int = 0,
    workers: int = 1,
    window: WindowParams = WindowParams(),
    model: str = "uibot",
    censoring_threshold: float = DEFAULT_CENSORING_THRESHOLD,
    progress: bool = False,
    on_samples: SampleSink = None,
) -> ExperimentReport:
    """Symmetry of the negative increment and independence of increments.

    The law of X(0) - X(-1) is compared with the negated law on disjoint
    halves; X(1) - X(0) against X(2) - X(1), and X(0) - X(-1) against
    X(1) - X(0), are tested for zero rank correlation.
    """
    started = time.perf_counter()
    mode = Mode.parse(mode)
    profiles, censoring = _collect(
        mode, 2, samples, seed, window, model, workers, censoring_threshold, progress
    )
    sample = _paired(profiles, on_samples)
    half = len(sample) // 2
    statistic, pvalue = stats.ks_2samp(sample.negative[:half], -sample.negative[half:])
    estimates = [
        Estimate(
            name="ks_pvalue",
            value=float(pvalue),
            acceptance=acceptance_for("symmetry", "ks_pvalue"),
            details={"statistic": float(statistic)},
        )
    ]
    second = np.array([p[2] - p[1] for p in profiles], dtype=np.int64)
    for name, a, b in (
        ("adjacent_correlation", sample.positive, second),
        ("cross_correlation", sample.negative, sample.positive),
    ):
        rho, se = rank_correlation(a, b)
        estimates.append(
            Estimate(
                name=name,
                value=rho,
                se=se,
                acceptance=acceptance_for("symmetry", "adjacent_correlation"),
            )
        )
    return _report(
        "symmetry",
        mode,
        _batch_parameters(mode, samples, window, model, censoring_threshold),
        seed,
        started,
        estimates=estimates,
        censoring=censoring,
    )


def calibration_experiment(
    mode="ldp",
    samples: int = 20_000,
    seed: int = 0,
    scale: int = DEFAULT_SELF_SIMILARITY_SCALE,
    tail_range: Tuple[float, float] = DEFAULT_TAIL_RANGE,
) -> ExperimentReport:
    """Estimator self-tests on synthetic data with the mode's exponent.

    Exact Pareto(nu) draws must give back nu, and sums of k and 2k totally
    skewed nu-stable draws must pass the self-similarity test.
    """
    started = time.perf_counter()
    mode = Mode.parse(mode)
    nu = 1.0 / _scaling_exponent(mode)

    draws = stats.pareto(b=nu).rvs(size=samples, random_state=estimator_rng(seed, _PARETO))
    estimates = []
    hill = hill_fit(draws, tail_range)
    rank = rank_regression_fit(draws, tail_range)
    estimates.append(
        Estimate(
            name="pareto_exponent",
            value=hill.exponent,
            se=hill.se,
            acceptance=acceptance_for("calibrate", "pareto_exponent", expected=nu),
        )
    )
    estimates.append(
        Estimate(
            name="pareto_exponent_rank",
            value=rank.exponent,
            se=rank.se,
            details={"expected": nu},
        )
    )

    stable = stats.levy_stable(alpha=nu, beta=1.0)
    half = samples // 2
    near = stable.rvs(
        size=(half, scale), random_state=estimator_rng(seed, _STABLE_NEAR)
    ).sum(axis=1) / scale ** (1 / nu)
    far = stable.rvs(
        size=(half, 2 * scale), random_state=estimator_rng(seed, _STABLE_FAR)
    ).sum(axis=1) / (2 * scale) ** (1 / nu)
    statistic, pvalue = stats.ks_2samp(near, far)
    estimates.append(
        Estimate(
            name="stable_ks_pvalue",
            value=float(pvalue),
            acceptance=acceptance_for("calibrate", "ks_pvalue"),
            details={"statistic": float(statistic), "alpha": nu, "scale": scale},
        )
    )
    return _report(
        "calibrate",
        mode,
        {
            "mode": mode.value,
            "samples": samples,
            "scale": scale,
            "tail_range": list(tail_range),
        },
        seed,
        started,
        estimates=estimates,
        tail_fits=[hill, rank],
    )


def build_registry() -> ExperimentRegistry:
    registry = ExperimentRegistry()
    for experiment in (
        Experiment("tail", "Tail exponents of Busemann increments", tail_experiment),
        Experiment("cell-path", "Path exponents of the cell", cell_path_experiment),
        Experiment("boltzmann", "Exponents of marked Boltzmann maps", boltzmann_experiment),
        Experiment("recursive", "Recursive equation residuals", recursive_experiment),
        Experiment("kappa", "kappa = 0 for SDP", kappa_experiment, modes=["sdp"]),
        Experiment("cubic", "Characteristic function cubic", cubic_experiment),
        Experiment("self-sim", "Two-scale self-similarity", self_similarity_experiment),
        Experiment("symmetry", "Increment symmetry and independence", symmetry_experiment),
        Experiment(
            "calibrate",
            "Estimator self-tests on Pareto and stable draws",
            calibration_experiment,
            category="calibration",
            status=ExperimentStatus.CALIBRATION,
        ),
    ):
        registry.register(experiment)
    return registry


REGISTRY = build_registry()
