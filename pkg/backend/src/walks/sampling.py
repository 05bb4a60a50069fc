"""
Walk samplers: i.i.d. uniform steps, the walk conditioned to keep its first
coordinate non-negative (exact h-transform with h(x) = x + 1), and the
two-sided walk encoding the boundary-channeled half-plane.
"""

import logging
from fractions import Fraction
from itertools import islice
from typing import Dict, Iterator, List, Tuple

import numpy as np
from opentelemetry import trace

from src.config import DEFAULT_MAX_SEGMENT_STEPS
from src.errors import RejectionBudgetError
from src.models.walk import INCREMENTS, HalfPlaneWalk, Step, Walk

from .rng import SeedLike, child_seeds, make_rng

logger = logging.getLogger("walks_logger")
tracer = trace.get_tracer(__name__)

_CHUNK = 4096


def uniform_codes(rng: np.random.Generator, n_steps: int) -> np.ndarray:
    """n_steps i.i.d. uniform step codes; a prefix of a longer draw."""
    return rng.integers(0, 3, size=n_steps, dtype=np.int8)


def sample_uibot_walk(n_steps: int, seed: SeedLike) -> Walk:
    """Walk of n_steps i.i.d. uniform steps from (0, 0).

    The first m steps of a longer walk with the same seed equal the walk of
    length m, which is what window doubling relies on.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be non-negative")
    return Walk(start=(0, 0), steps=uniform_codes(make_rng(seed), n_steps))


def conditioned_transitions(x: int) -> Dict[Step, Fraction]:
    """Exact one-step law of the conditioned walk from first coordinate x."""
    if x < 0:
        raise ValueError("the conditioned walk lives on x >= 0")
    denom = 3 * (x + 1)
    return {
        Step.A: Fraction(x + 2, denom),
        Step.B: Fraction(x, denom),
        Step.C: Fraction(1, 3),
    }


def conditioned_codes(rng: np.random.Generator, x0: int) -> Iterator[int]:
    """Endless stream of conditioned step codes started from level x0."""
    x = x0
    while True:
        for u in rng.random(_CHUNK):
            # P(A) = (x+2)/(3(x+1)), P(B) = x/(3(x+1)), P(C) = 1/3
            scaled = 3.0 * (x + 1) * u
            if scaled < x + 2:
                x += 1
                yield 0
            elif scaled < 2 * x + 2:
                x -= 1
                yield 1
            else:
                yield 2


def sample_conditioned_walk(n_steps: int, start_first_coord: int, seed: SeedLike) -> Walk:
    """Walk whose first coordinate is conditioned to stay non-negative."""
    if n_steps < 0:
        raise ValueError("n_steps must be non-negative")
    if start_first_coord < 0:
        raise ValueError("start_first_coord must be non-negative")
    stream = conditioned_codes(make_rng(seed), start_first_coord)
    codes = np.fromiter(islice(stream, n_steps), dtype=np.int8, count=n_steps)
    return Walk(start=(start_first_coord, 0), steps=codes)


def sample_conditioned_until_right_hit(r: int, seed: SeedLike) -> Tuple[Walk, int]:
    """Conditioned walk from (0, 0) run until R first equals -r.

    Returns the full walk (its last step is the hitting A step) and the
    hitting time.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    codes: List[int] = []
    right = 0
    for code in conditioned_codes(make_rng(seed), 0):
        codes.append(code)
        right += int(INCREMENTS[code, 1])
        if right == -r:
            break
    return Walk(start=(0, 0), steps=codes), len(codes)


def excursion_to_minus_one(
    rng: np.random.Generator, max_steps: int = DEFAULT_MAX_SEGMENT_STEPS
) -> np.ndarray:
    """Uniform steps until the first coordinate first hits -1 (inclusive)."""
    pieces: List[np.ndarray] = []
    level = 0
    drawn = 0
    chunk = 64
    while drawn < max_steps:
        codes = uniform_codes(rng, min(chunk, max_steps - drawn))
        path = level + np.cumsum(INCREMENTS[codes, 0])
        hits = np.flatnonzero(path == -1)
        if hits.size:
            pieces.append(codes[: hits[0] + 1])
            return np.concatenate(pieces)
        pieces.append(codes)
        level = int(path[-1])
        drawn += codes.size
        chunk = min(chunk * 2, 1 << 16)
    raise RejectionBudgetError(
        f"segment did not reach level -1 within {max_steps} steps"
    )


def sample_uibhbot_walk(
    n_negative_segments: int,
    n_positive_steps: int,
    seed: SeedLike,
    max_segment_steps: int = DEFAULT_MAX_SEGMENT_STEPS,
) -> HalfPlaneWalk:
    """Two-sided walk of the boundary-channeled half-plane.

    Negative time is a concatenation of i.i.d. excursions, each stopped when
    its first coordinate first drops by one; positive time is i.i.d. The
    returned walk starts at the earliest sampled time and is positioned so
    that time 0 sits at (0, 0).
    """
    if n_negative_segments < 0 or n_positive_steps < 0:
        raise ValueError("counts must be non-negative")
    with tracer.start_as_current_span(
        "sample_uibhbot_walk", kind=trace.SpanKind.INTERNAL
    ) as span:
        neg_seed, pos_seed = child_seeds(seed, 2)
        neg_rng = make_rng(neg_seed)
        segments = [
            excursion_to_minus_one(neg_rng, max_segment_steps)
            for _ in range(n_negative_segments)
        ]
        ends = tuple(int(x) for x in np.cumsum([s.size for s in segments]))
        negative = (
            np.concatenate(segments) if segments else np.zeros(0, dtype=np.int8)
        )
        positive = uniform_codes(make_rng(pos_seed), n_positive_steps)
        shift_r = int(INCREMENTS[negative, 1].sum()) if negative.size else 0
        walk = Walk(
            start=(n_negative_segments, -shift_r),
            steps=np.concatenate([negative, positive]),
        )
        span.set_attribute("walk.negative_steps", int(negative.size))
        span.set_attribute("walk.positive_steps", n_positive_steps)
        logger.debug(
            f"Sampled half-plane walk: {n_negative_segments} segments, "
            f"{negative.size} negative steps, {n_positive_steps} positive steps"
        )
        return HalfPlaneWalk(walk=walk, origin=int(negative.size), segment_ends=ends)


def step_frequencies(walk: Walk) -> Dict[Step, float]:
    counts = np.bincount(walk.steps, minlength=3)
    total = max(walk.length, 1)
    return {Step.from_code(c): counts[c] / total for c in range(3)}

