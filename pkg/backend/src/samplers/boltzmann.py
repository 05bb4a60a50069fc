"""
Boltzmann bipolar-oriented triangulations with a fixed right boundary.

An attempt runs i.i.d. steps until the second coordinate first reaches -r
and is rejected as soon as the first coordinate reaches -1. An accepted
attempt of length tau yields a map with tau edges, so every map with n
edges comes out of a single attempt with probability 3^-n.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from opentelemetry import trace

from src.config import DEFAULT_MAX_ATTEMPTS
from src.errors import RejectionBudgetError
from src.kmsw.builder import build
from src.maps.boundary import upper_left_vertices
from src.models.planar_map import OrientedMap
from src.models.walk import INCREMENTS, Walk
from src.walks.rng import SeedLike, child_seeds, make_rng
from src.walks.sampling import sample_conditioned_until_right_hit, uniform_codes

logger = logging.getLogger("samplers_logger")
tracer = trace.get_tracer(__name__)


def boltzmann_walk(rng: np.random.Generator, r: int) -> Optional[Walk]:
    """One attempt: the accepted prefix [0, tau - 1], or None."""
    if r < 1:
        raise ValueError("r must be at least 1")
    pieces: List[np.ndarray] = []
    left = right = 0
    chunk = 16
    while True:
        codes = uniform_codes(rng, chunk)
        path_l = left + np.cumsum(INCREMENTS[codes, 0])
        path_r = right + np.cumsum(INCREMENTS[codes, 1])
        stop = np.flatnonzero((path_l == -1) | (path_r == -r))
        if stop.size:
            i = int(stop[0])
            if path_l[i] == -1:
                return None
            pieces.append(codes[:i])
            return Walk(start=(0, 0), steps=np.concatenate(pieces))
        pieces.append(codes)
        left, right = int(path_l[-1]), int(path_r[-1])
        chunk = min(chunk * 2, 1 << 14)


def boltzmann_attempt(rng: np.random.Generator, r: int) -> Optional[OrientedMap]:
    walk = boltzmann_walk(rng, r)
    return None if walk is None else build(walk)


def _accepted_walk(rng, r: int, max_attempts: int, accept=None) -> Tuple[Walk, int]:
    for attempt in range(1, max_attempts + 1):
        walk = boltzmann_walk(rng, r)
        if walk is not None and (accept is None or accept(walk)):
            return walk, attempt
    raise RejectionBudgetError(f"no accepted attempt for r={r} in {max_attempts} tries")


def sample_boltzmann_right(
    r: int, seed: SeedLike, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> OrientedMap:
    """Boltzmann map with r lower-right edges and no missing edges."""
    with tracer.start_as_current_span(
        "sample_boltzmann_right", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("boltzmann.r", r)
        walk, attempts = _accepted_walk(make_rng(seed), r, max_attempts)
        span.set_attribute("boltzmann.attempts", attempts)
        logger.debug(f"Boltzmann r={r}: accepted after {attempts} attempts")
        return build(walk)


def sample_boltzmann_lr(
    l: int, r: int, seed: SeedLike, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> OrientedMap:
    """Boltzmann map with both boundary lengths fixed: left l, right r."""
    if l < 1:
        raise ValueError("l must be at least 1")

    def left_length_is_l(walk: Walk) -> bool:
        # left boundary length is L(tau - 1) + 1
        return walk.end[0] == l - 1

    walk, _ = _accepted_walk(make_rng(seed), r, max_attempts, left_length_is_l)
    return build(walk)


def sample_boltzmann_marked(r: int, seed: SeedLike) -> Tuple[OrientedMap, int]:
    """(map, marked left-boundary vertex) under the marked Boltzmann law.

    The map comes from the conditioned walk stopped when R first hits -r;
    given it, the mark is uniform over the L(tau) + 1 left-boundary vertices.
    """
    with tracer.start_as_current_span(
        "sample_boltzmann_marked", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("boltzmann.r", r)
        walk_seed, mark_seed = child_seeds(seed, 2)
        walk, tau = sample_conditioned_until_right_hit(r, walk_seed)
        map_ = build(walk.prefix(tau - 1))
        left = upper_left_vertices(map_)
        index = int(make_rng(mark_seed).integers(0, len(left)))
        span.set_attribute("map.edges", map_.edge_count)
        return map_, left[index]
