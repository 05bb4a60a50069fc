"""
Exact path laws in rational arithmetic.

Paths are keyed by their step tags. The h-transform law is computed from the
one-step transition table and the flipped law as a pushforward, so the two
sides of the flip identity never share code.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import product
from typing import Dict, List

from src.config import DEFAULT_WEIGHTED_LAW_CAP
from src.errors import CapExceededError
from src.models.walk import Walk, walk_from_levels
from src.walks.flip import pitman_flip
from src.walks.sampling import conditioned_transitions

WEIGHTINGS = ("plain", "h-transform", "flipped")

PathLaw = Dict[str, Fraction]


def _all_walks(n: int) -> List[Walk]:
    return [Walk(start=(0, 0), steps=list(codes)) for codes in product(range(3), repeat=n)]


def _plain(n: int) -> PathLaw:
    mass = Fraction(1, 3**n)
    return {walk.tags(): mass for walk in _all_walks(n)}


def _h_transform(n: int) -> PathLaw:
    law: PathLaw = {}
    for walk in _all_walks(n):
        mass = Fraction(1)
        level = 0
        for step in walk:
            mass *= conditioned_transitions(level)[step]
            if not mass:
                break
            level += step.increment[0]
        if mass:
            law[walk.tags()] = mass
    return law


def _flipped(n: int) -> PathLaw:
    law: PathLaw = defaultdict(Fraction)
    mass = Fraction(1, 3**n)
    for walk in _all_walks(n):
        image = walk_from_levels(pitman_flip(walk.first_coordinate))
        law[image.tags()] += mass
    return dict(law)


_BUILDERS = {"plain": _plain, "h-transform": _h_transform, "flipped": _flipped}


def exact_weighted_law(
    n: int, weighting: str, cap: int = DEFAULT_WEIGHTED_LAW_CAP
) -> PathLaw:
    """pmf over n-step paths from (0, 0), zero-mass paths omitted.

    plain        every path has mass 3^-n
    h-transform  the walk conditioned to keep L non-negative
    flipped      the plain law pushed forward through the flip of L
    """
    if weighting not in _BUILDERS:
        raise ValueError(f"Unknown weighting '{weighting}', expected one of {WEIGHTINGS}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise CapExceededError(f"exact laws are capped at {cap} steps, got {n}")
    return _BUILDERS[weighting](n)


def ruin_probability(s: int, K: int) -> Fraction:
    """P[the lazy walk from s hits K before -1], solved exactly.

    Interior equations h(x) = (h(x - 1) + h(x) + h(x + 1)) / 3 for
    0 <= x <= K - 1 with h(-1) = 0 and h(K) = 1, by tridiagonal elimination.
    """
    if K < 0 or not 0 <= s <= K:
        raise ValueError("need 0 <= s <= K")
    if s == K:
        return Fraction(1)
    third = Fraction(1, 3)
    # normalized sweep of -h(x-1)/3 + 2h(x)/3 - h(x+1)/3 = [x == K - 1] / 3
    upper: List[Fraction] = []
    rhs: List[Fraction] = []
    for x in range(K):
        sub = -third if x > 0 else Fraction(0)
        sup = -third if x < K - 1 else Fraction(0)
        d = third if x == K - 1 else Fraction(0)
        pivot = Fraction(2, 3) - (sub * upper[-1] if x > 0 else 0)
        upper.append(sup / pivot)
        rhs.append((d - (sub * rhs[-1] if x > 0 else 0)) / pivot)
    h = rhs[:]
    for x in range(K - 2, -1, -1):
        h[x] = rhs[x] - upper[x] * h[x + 1]
    return h[s]


def total_mass(law: PathLaw) -> Fraction:
    return sum(law.values(), Fraction(0))
