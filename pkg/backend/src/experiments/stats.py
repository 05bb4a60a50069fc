"""
Estimators over paired Busemann increments.

Every identity checked by the experiments is a polynomial in the point
masses f(v) = P[X(0) - X(-1) = v] and g(v) = P[X(1) - X(0) = v]. A
polynomial is kept as a list of terms so its gradient is exact, and its
standard error comes from the delta method: the influence of replica i is
grad_f[neg_i] + grad_g[pos_i] minus the gradient's mean.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from src.errors import InsufficientDataError

Pmf = Dict[int, float]
Factor = Tuple[str, int]


def empirical_pmf(values: Iterable[int]) -> Pmf:
    counts = pd.Series(np.asarray(values, dtype=np.int64)).value_counts(normalize=True)
    return {int(v): float(p) for v, p in counts.items()}


@dataclass(frozen=True)
class PairedIncrements:
    """negative[i] = X(0) - X(-1) and positive[i] = X(1) - X(0) of replica i."""

    negative: np.ndarray
    positive: np.ndarray

    def __post_init__(self):
        if len(self.negative) != len(self.positive):
            raise ValueError("paired increments need equal lengths")

    def __len__(self) -> int:
        return len(self.negative)

    def pmfs(self) -> Dict[str, Pmf]:
        return {"f": empirical_pmf(self.negative), "g": empirical_pmf(self.positive)}


@dataclass
class Polynomial:
    """Sum of coef * prod(pmf[name](v)) over terms."""

    terms: List[Tuple[float, Tuple[Factor, ...]]] = field(default_factory=list)

    def add(self, coef: float, *factors: Factor) -> "Polynomial":
        self.terms.append((coef, tuple(factors)))
        return self

    def value(self, pmfs: Dict[str, Pmf]) -> float:
        return sum(
            coef * math.prod(pmfs[name].get(v, 0.0) for name, v in factors)
            for coef, factors in self.terms
        )

    def gradient(self, pmfs: Dict[str, Pmf]) -> Dict[str, Dict[int, float]]:
        grad: Dict[str, Dict[int, float]] = {"f": {}, "g": {}}
        for coef, factors in self.terms:
            masses = [pmfs[name].get(v, 0.0) for name, v in factors]
            for i, (name, v) in enumerate(factors):
                others = math.prod(masses[:i] + masses[i + 1 :])
                if others:
                    grad[name][v] = grad[name].get(v, 0.0) + coef * others
        return grad


def delta_method(poly: Polynomial, sample: PairedIncrements) -> Tuple[float, float]:
    """(value, standard error) of a polynomial at the empirical pmfs."""
    n = len(sample)
    if n < 2:
        raise InsufficientDataError("the delta method needs at least two replicas")
    pmfs = sample.pmfs()
    grad = poly.gradient(pmfs)
    influence = np.zeros(n)
    for name, values in (("f", sample.negative), ("g", sample.positive)):
        weights = grad[name]
        centre = sum(w * pmfs[name].get(v, 0.0) for v, w in weights.items())
        mapped = pd.Series(values).map(weights).fillna(0.0).to_numpy(dtype=float)
        influence += mapped - centre
    return poly.value(pmfs), float(influence.std(ddof=1) / math.sqrt(n))


def _support_sum_indices(
    support: Iterable[int], pick: Callable[[int], Iterable[int]]
) -> List[int]:
    indices = set()
    for v in support:
        indices.update(pick(v))
    return sorted(indices)


def ldp_cell(x: int, y: int, f_support: Iterable[int]) -> Polynomial:
    """LHS - RHS of the LDP recursive equation at (x, y), y <= -1."""
    if y > -1:
        raise ValueError("the LDP recursive equation holds for y <= -1")
    poly = Polynomial().add(3.0, ("f", x), ("g", y)).add(-1.0, ("f", x), ("f", y))
    for j in range(1, -y):
        poly.add(-1.0, ("f", x), ("g", y + j), ("g", -j))
    if y == -1:
        # j >= 0 with f(j + x + 1) or f(-j) possibly non-zero
        indices = _support_sum_indices(f_support, lambda v: (-v, v - x - 1))
        for j in (j for j in indices if j >= 0):
            poly.add(-1.0, ("f", j + x + 1), ("f", -j))
        poly.add(-1.0, ("g", -x - 1))
    return poly


def sdp_cell(x: int, y: int, f_support: Iterable[int]) -> Polynomial:
    """LHS - RHS of the SDP recursive equation at (x, y), y >= -1."""
    if y < -1:
        raise ValueError("the SDP recursive equation holds for y >= -1")
    poly = Polynomial().add(3.0, ("f", x), ("g", y)).add(-1.0, ("f", x), ("f", y))
    for j in range(-1, y + 2):
        poly.add(-1.0, ("f", x), ("g", j), ("g", y - j))
    if y == -1:
        indices = _support_sum_indices(f_support, lambda v: (v, x - v - 1))
        for j in (j for j in indices if j <= -2):
            poly.add(-1.0, ("f", j), ("f", x - j - 1))
        poly.add(-1.0, ("g", -1), ("g", -1), ("f", x + 1))
        poly.add(-1.0, ("g", x - 1))
    return poly


def ldp_aggregate() -> Polynomial:
    """3g(-1) - f(-1) - (1 + f(0)) / 2 - 1."""
    return (
        Polynomial()
        .add(3.0, ("g", -1))
        .add(-1.0, ("f", -1))
        .add(-0.5, ("f", 0))
        .add(-1.5)
    )


def sdp_aggregate() -> Polynomial:
    """3g(-1) - (3 - f(0)) / 2 - 2g(-1)g(0) - g(-1)^2."""
    return (
        Polynomial()
        .add(3.0, ("g", -1))
        .add(-1.5)
        .add(0.5, ("f", 0))
        .add(-2.0, ("g", -1), ("g", 0))
        .add(-1.0, ("g", -1), ("g", -1))
    )


def kappa() -> Polynomial:
    """3 - 6g(-1)^2 - f(0)."""
    return Polynomial().add(3.0).add(-6.0, ("g", -1), ("g", -1)).add(-1.0, ("f", 0))


def point_mass(name: str, v: int) -> Polynomial:
    return Polynomial().add(1.0, (name, v))


def bootstrap_pmf(
    pmf: Pmf, n: int, replicates: int, rng: np.random.Generator
) -> Tuple[np.ndarray, np.ndarray]:
    """(support, replicates x support matrix of resampled pmfs)."""
    support = np.array(sorted(pmf), dtype=np.int64)
    probs = np.array([pmf[v] for v in support])
    counts = rng.multinomial(n, probs / probs.sum(), size=replicates)
    return support, counts / n


def characteristic_function(
    support: np.ndarray, probs: np.ndarray, t: np.ndarray
) -> np.ndarray:
    """sum_v p(v) exp(i t v) for each t; probs may carry a leading replicate axis."""
    phases = np.exp(1j * np.outer(support, t))
    return probs @ phases


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    se: float
    intercept: float
    points: int


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> SlopeFit:
    """Least-squares slope of log y on log x."""
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if len(np.unique(x_arr)) < 2:
        raise InsufficientDataError("a slope needs at least two distinct sizes")
    if (x_arr <= 0).any() or (y_arr <= 0).any():
        raise InsufficientDataError("log-log regression needs positive values")
    fit = stats.linregress(np.log(x_arr), np.log(y_arr))
    return SlopeFit(
        slope=float(fit.slope),
        se=float(fit.stderr),
        intercept=float(fit.intercept),
        points=len(x_arr),
    )


def rank_correlation(a: Sequence[float], b: Sequence[float]) -> Tuple[float, float]:
    """Spearman correlation and its standard error under independence."""
    if len(a) < 3:
        raise InsufficientDataError("a correlation needs at least three pairs")
    rho, _ = stats.spearmanr(a, b)
    return float(0.0 if np.isnan(rho) else rho), 1.0 / math.sqrt(len(a) - 1)
