"""
Tail exponent estimators: Hill averaged over a band of order statistics and
a rank-plot regression as cross-check. Both fit P[X > x] ~ x^-nu on the
top `tail_range` fraction of the sample.
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy import stats

from src.config import DEFAULT_TAIL_RANGE
from src.errors import InsufficientDataError
from src.models.experiments import TailFit

MIN_TAIL_COUNT = 10


def _ordered_tail(
    values: np.ndarray,
    tail_range: Tuple[float, float],
    rng: Optional[np.random.Generator],
) -> Tuple[np.ndarray, int, int]:
    """Positive values in decreasing order with the (k_low, k_high) band.

    Integer data is spread by a uniform jitter in (-1/2, 1/2) when an rng
    is given, so ties do not bias the log spacings.
    """
    data = np.asarray(values, dtype=float)
    if rng is not None:
        data = data + rng.uniform(-0.5, 0.5, size=data.size)
    data = data[data > 0]
    low, high = tail_range
    if not 0 < low < high < 1:
        raise ValueError("tail_range must satisfy 0 < low < high < 1")
    k_low = int(math.ceil(low * data.size))
    k_high = int(math.floor(high * data.size))
    if k_low < MIN_TAIL_COUNT or k_high <= k_low or k_high >= data.size:
        raise InsufficientDataError(
            f"{data.size} positive samples leave too little tail mass in {tail_range}"
        )
    ordered = np.sort(data)[::-1]
    if not ordered[k_high] < ordered[k_low]:
        raise InsufficientDataError("the fitting band holds a single value")
    return ordered, k_low, k_high


def hill_fit(
    values,
    tail_range: Tuple[float, float] = DEFAULT_TAIL_RANGE,
    rng: Optional[np.random.Generator] = None,
) -> TailFit:
    """Hill estimates of nu averaged over k in the band."""
    ordered, k_low, k_high = _ordered_tail(values, tail_range, rng)
    logs = np.log(ordered)
    running_mean = np.cumsum(logs) / np.arange(1, logs.size + 1)
    ks = np.unique(np.geomspace(k_low, k_high, num=20).astype(int))
    gammas = running_mean[ks - 1] - logs[ks]
    if (gammas <= 0).any():
        raise InsufficientDataError("degenerate order statistics in the fitting band")
    nu = float(np.mean(1.0 / gammas))
    return TailFit(
        estimator="hill",
        exponent=nu,
        se=nu / math.sqrt(math.sqrt(k_low * k_high)),
        fitting_range=(float(ordered[k_high]), float(ordered[k_low])),
        sample_count=int(np.asarray(values).size),
        tail_count=k_high,
    )


def rank_regression_fit(
    values,
    tail_range: Tuple[float, float] = DEFAULT_TAIL_RANGE,
    rng: Optional[np.random.Generator] = None,
) -> TailFit:
    """Slope of log(rank / n) against log x over the band."""
    ordered, k_low, k_high = _ordered_tail(values, tail_range, rng)
    ranks = np.arange(k_low, k_high + 1)
    fit = stats.linregress(np.log(ordered[ranks - 1]), np.log(ranks / ordered.size))
    return TailFit(
        estimator="rank-regression",
        exponent=float(-fit.slope),
        se=float(fit.stderr),
        fitting_range=(float(ordered[k_high]), float(ordered[k_low])),
        sample_count=int(np.asarray(values).size),
        tail_count=k_high,
    )


def survival(values, x: np.ndarray) -> np.ndarray:
    """Empirical P[X >= x] at each threshold."""
    ordered = np.sort(np.asarray(values, dtype=float))
    return 1.0 - np.searchsorted(ordered, x, side="left") / ordered.size


def tail_ratio(
    two_sided, one_sided, fitting_range: Tuple[float, float], points: int = 16
) -> Tuple[float, float]:
    """Mean and spread of P[|Y| >= x] / P[X >= x] over a geometric grid."""
    low, high = fitting_range
    if not 0 < low < high:
        raise InsufficientDataError("tail ratio needs a nonempty positive range")
    grid = np.geomspace(low, high, num=points)
    denominator = survival(one_sided, grid)
    keep = denominator > 0
    if not keep.any():
        raise InsufficientDataError("no one-sided tail mass in the fitting range")
    ratios = survival(two_sided, grid[keep]) / denominator[keep]
    spread = float(ratios.std(ddof=1)) if ratios.size > 1 else 0.0
    return float(ratios.mean()), spread
