"""
Boundary bookkeeping of KMSW maps read directly off the encoding walk.
"""

import logging
from typing import List, Tuple

import numpy as np

from src.models.walk import Walk

from .builder import build_state

logger = logging.getLogger("maps_logger")


def boundary_lengths_from_walk(walk: Walk) -> Tuple[int, int, int, int]:
    """(UL, LL, LR, UR) of build(walk).

    UL = L(n) - min L + 1, LL = -min L, LR = -min R + 1, UR = R(n) - min R,
    with minima over [0, n]. Coordinates are taken relative to the start.
    """
    left = walk.first_coordinate - walk.start[0]
    right = walk.second_coordinate - walk.start[1]
    min_left = int(left.min())
    min_right = int(right.min())
    return (
        int(left[-1]) - min_left + 1,
        -min_left,
        -min_right + 1,
        int(right[-1]) - min_right,
    )


def _first_hits(values: np.ndarray, depth: int) -> List[int]:
    """Times of the first visits to -1, -2, ..., -depth."""
    running = np.minimum.accumulate(values)
    return [int(np.argmax(running <= -k)) for k in range(1, depth + 1)]


def boundary_creation_check(walk: Walk) -> List[str]:
    """Compare the creation times of the final boundary edges with the times
    characterized by the walk; returns one message per discrepancy."""
    state = build_state(walk)
    created = state.created
    left = walk.first_coordinate - walk.start[0]
    right = walk.second_coordinate - walk.start[1]
    n = walk.length
    problems: List[str] = []

    lower_left = list(state.lower_left)
    for k, time in enumerate(_first_hits(left, len(lower_left)), start=1):
        edge = lower_left[-k]
        if created[edge] != time:
            problems.append(
                f"lower-left edge {k} created at {created[edge]}, first hit of L=-{k} at {time}"
            )

    lower_right = state.lower_right
    for k, time in enumerate(_first_hits(right, len(lower_right) - 1), start=1):
        edge = lower_right[k]
        if created[edge] != time:
            problems.append(
                f"lower-right edge {k + 1} created at {created[edge]}, first hit of R=-{k} at {time}"
            )

    # Suffix minima over (m, n] and [m, n]
    suffix_left = np.minimum.accumulate(left[::-1])[::-1]
    expected_ul = {
        int(state.trace[m])
        for m in range(n + 1)
        if m == n or suffix_left[m + 1] >= left[m] + 1
    }
    if expected_ul != set(state.upper_left):
        problems.append(
            f"upper-left edges {sorted(state.upper_left)} differ from the active "
            f"edges at non-revisited times {sorted(expected_ul)}"
        )

    suffix_right = np.minimum.accumulate(right[::-1])[::-1]
    expected_ur = {
        m for m in range(1, n + 1) if suffix_right[m] >= right[m - 1] + 1
    }
    actual_ur = {created[e] for e in state.upper_right}
    if expected_ur != actual_ur:
        problems.append(
            f"upper-right edges created at {sorted(actual_ur)}, expected {sorted(expected_ur)}"
        )

    if problems:
        logger.warning(f"Boundary creation check found {len(problems)} discrepancies")
    return problems
