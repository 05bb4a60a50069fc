"""
Stopping times of walks: boundary hit times and the alternating times that
split a walk into the part exploring the reachable quadrant and the rest.
"""

import logging
from typing import Iterable, List, Optional, Tuple

import numpy as np

from src.models.walk import QuadrantTimes, StoppingTimeSet, Walk

logger = logging.getLogger("walks_logger")

C_CODE = 2


def _first_below(running_min: np.ndarray, level: int) -> Optional[int]:
    """First index i with running_min[i] <= level, running_min nonincreasing."""
    idx = int(np.searchsorted(-running_min, -level, side="left"))
    return idx if idx < running_min.size else None


def first_hit_times(walk: Walk, indices: Iterable[int]) -> StoppingTimeSet:
    """tau_k for each k: k >= 1 first n >= 1 with R(n) = -k, k <= -1 first
    n >= 1 with L(n) = k, tau_0 = 0. Coordinates are taken relative to the
    walk start; levels never reached map to None."""
    first = walk.first_coordinate - walk.start[0]
    second = walk.second_coordinate - walk.start[1]
    # Both coordinates move by at most one per step, so the first visit of a
    # level below the start is the first time the running minimum reaches it
    min_right = np.minimum.accumulate(second[1:]) if walk.length else np.zeros(0)
    min_left = np.minimum.accumulate(first[1:]) if walk.length else np.zeros(0)
    times = {}
    for k in indices:
        k = int(k)
        if k == 0:
            times[k] = 0
            continue
        running, level = (min_right, -k) if k > 0 else (min_left, k)
        hit = _first_below(running, level)
        times[k] = None if hit is None else hit + 1
    return StoppingTimeSet(times=times)


def _first_equal(values: np.ndarray, start: int, target: int) -> Optional[int]:
    """First index >= start holding target, scanning in growing chunks."""
    chunk = 256
    pos = start
    while pos < values.size:
        window = values[pos : pos + chunk]
        hits = np.flatnonzero(window == target)
        if hits.size:
            return pos + int(hits[0])
        pos += window.size
        chunk *= 2
    return None


def quadrant_decomposition_times(walk: Walk) -> QuadrantTimes:
    """N_1^R = 0 < N_1^L < N_2^R < ... truncated at the end of the walk.

    N_k^L is the first n >= N_k^R + 1 with L(n) = L(N_k^R) - 1 and N_{k+1}^R
    the first n >= N_k^L + 1 with R(n) = R(N_k^L) - 1.
    """
    if walk.start != (0, 0):
        raise ValueError("quadrant decomposition needs a walk started at (0, 0)")
    first = walk.first_coordinate
    second = walk.second_coordinate
    right_times: List[int] = [0]
    left_times: List[int] = []
    while True:
        n_right = right_times[-1]
        n_left = _first_equal(first, n_right + 1, int(first[n_right]) - 1)
        if n_left is None:
            return QuadrantTimes(tuple(right_times), tuple(left_times), True)
        left_times.append(n_left)
        n_next = _first_equal(second, n_left + 1, int(second[n_left]) - 1)
        if n_next is None:
            return QuadrantTimes(tuple(right_times), tuple(left_times), True)
        right_times.append(n_next)


def quadrant_intervals(
    times: QuadrantTimes, length: int
) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Closed time intervals [a, b] (times n >= 1, step index n - 1) of the
    quadrant part and of its complement."""
    hat: List[Tuple[int, int]] = []
    prime: List[Tuple[int, int]] = []
    for k, n_right in enumerate(times.right_times):
        n_left = times.left_times[k] if k < len(times.left_times) else length + 1
        hat.append((max(1, n_right), n_left - 1))
        if k < len(times.left_times):
            following = (
                times.right_times[k + 1] if k + 1 < len(times.right_times) else length + 1
            )
            prime.append((n_left, following - 1))
    return hat, prime


def split_quadrant_walks(walk: Walk) -> Tuple[Walk, Walk]:
    """(walk_hat, walk_hat_prime).

    walk_hat concatenates the increments at times inside [N_k^R, N_k^L - 1]
    (time n carries the increment Z(n) - Z(n-1)); walk_hat_prime takes the
    increments at times in [N_k^L, N_{k+1}^R - 1], with the B increment at
    every N_k^L replaced by C.
    """
    times = quadrant_decomposition_times(walk)
    hat_intervals, prime_intervals = quadrant_intervals(times, walk.length)
    steps = walk.steps
    hat_parts = [steps[a - 1 : b] for a, b in hat_intervals if b >= a]
    prime_parts = []
    for a, b in prime_intervals:
        part = steps[a - 1 : b].copy()
        part[0] = C_CODE
        prime_parts.append(part)
    hat = np.concatenate(hat_parts) if hat_parts else np.zeros(0, dtype=np.int8)
    prime = np.concatenate(prime_parts) if prime_parts else np.zeros(0, dtype=np.int8)
    logger.debug(
        f"Split walk of {walk.length} steps into {hat.size} + {prime.size} "
        f"({len(times.left_times)} left times)"
    )
    return Walk(start=(0, 0), steps=hat), Walk(start=(0, 0), steps=prime)
