"""
Cut-vertex events of quarter-plane walks and their map-side counterpart.

A time n >= 1 is a cut event when the second coordinate reaches a strict
running minimum at n and the first coordinate never drops below its value
at n afterwards. On a finite walk the second condition is checked over the
remaining horizon, and only times with at least `guard` steps of horizon
are reported.
"""

import logging
from typing import List, Optional

import numpy as np

from src.config import DEFAULT_GUARD_FRACTION
from src.maps.boundary import upper_left_vertices
from src.models.busemann import CutEvent
from src.models.planar_map import OrientedMap
from src.models.walk import Walk

logger = logging.getLogger("busemann_logger")


def default_guard(length: int) -> int:
    return max(1, int(length * DEFAULT_GUARD_FRACTION))


def detect_cut_events(walk: Walk, guard: Optional[int] = None) -> List[CutEvent]:
    """Candidate cut times of a conditioned walk, oldest first."""
    guard = default_guard(walk.length) if guard is None else guard
    if guard < 1:
        raise ValueError("guard must be at least 1")
    n_max = walk.length - guard
    if n_max < 1:
        return []
    left = walk.first_coordinate
    right = walk.second_coordinate
    # strict new minimum of R at n: R(n) < min R[0..n-1]
    past_min = np.minimum.accumulate(right)[:-1]
    new_min = right[1:] < past_min
    # B_n: L(j) >= L(n) for every j in [n, length]
    future_min = np.minimum.accumulate(left[::-1])[::-1]
    stays_above = future_min[1:] >= left[1:]
    times = np.flatnonzero(new_min & stays_above) + 1
    times = times[times <= n_max]
    return [
        CutEvent(time=int(n), level=int(left[n]), guard_verified=int(walk.length - n))
        for n in times
    ]


def cut_vertex_times(quadrant_map: OrientedMap) -> List[int]:
    """Creation times of the lower-right edges leaving cut vertices other
    than the source; needs a map built with creation times."""
    if quadrant_map.creation_times is None or quadrant_map.segments is None:
        raise ValueError("cut_vertex_times needs a map produced by the builder")
    upper = set(upper_left_vertices(quadrant_map))
    times = []
    for e in quadrant_map.segments.lower_right[1:]:
        if int(quadrant_map.tails[e]) in upper:
            times.append(int(quadrant_map.creation_times[e]))
    return times


def cut_events_agree(walk: Walk, quadrant_map: OrientedMap, guard: int) -> bool:
    """Map-side cut vertices and walk-side events coincide inside the band."""
    n_max = walk.length - guard
    detected = [event.time for event in detect_cut_events(walk, guard)]
    from_map = sorted(n for n in cut_vertex_times(quadrant_map) if n <= n_max)
    if detected != from_map:
        logger.warning(
            f"Cut events disagree on a walk of {walk.length} steps: "
            f"walk {detected[:10]} vs map {from_map[:10]}"
        )
        return False
    return True
