"""
Cone walks and the triangulations they encode.

Walks are enumerated depth first with a feasibility cut: from (x, y) with m
steps left, the end point (ex, ey) is reachable iff the step counts
c = (m + 2(ey - y) + (ex - x)) / 3, a = c - (ey - y), b = a - (ex - x) are
non-negative integers.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.config import DEFAULT_COUNT_EDGE_CAP, DEFAULT_WALK_CAP
from src.errors import CapExceededError
from src.kmsw.builder import build
from src.models.planar_map import OrientedMap
from src.models.walk import INCREMENTS, Walk

logger = logging.getLogger("enumeration_logger")

Point = Tuple[int, int]


@dataclass(frozen=True)
class Cone:
    """The closed cone [x_min, inf) x [y_min, inf)."""

    x_min: int = 0
    y_min: int = 0

    def contains(self, x: int, y: int) -> bool:
        return x >= self.x_min and y >= self.y_min


QUADRANT = Cone(0, 0)


def _reachable(x: int, y: int, end: Point, remaining: int) -> bool:
    dx, dy = end[0] - x, end[1] - y
    slack = remaining + 2 * dy + dx
    if slack < 0 or slack % 3:
        return False
    c = slack // 3
    a = c - dy
    return a >= 0 and a - dx >= 0


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise CapExceededError(f"enumeration of {n} steps exceeds the cap of {cap}")


def iter_walks_in_cone(
    n: int,
    start: Point,
    end: Optional[Point],
    cone: Cone = QUADRANT,
    cap: int = DEFAULT_WALK_CAP,
) -> Iterator[Walk]:
    """Lazy version of enum_walks_in_cone; `end=None` leaves the end free."""
    _check_cap(n, cap)
    if not cone.contains(*start):
        return
    codes: List[int] = []

    def extend(x: int, y: int) -> Iterator[Walk]:
        remaining = n - len(codes)
        if remaining == 0:
            yield Walk(start=start, steps=list(codes))
            return
        for code in range(3):
            nx_, ny_ = x + int(INCREMENTS[code, 0]), y + int(INCREMENTS[code, 1])
            if not cone.contains(nx_, ny_):
                continue
            if end is not None and not _reachable(nx_, ny_, end, remaining - 1):
                continue
            codes.append(code)
            yield from extend(nx_, ny_)
            codes.pop()

    if end is None or _reachable(start[0], start[1], end, n):
        yield from extend(*start)


def enum_walks_in_cone(
    n: int,
    start: Point,
    end: Point,
    cone: Cone = QUADRANT,
    cap: int = DEFAULT_WALK_CAP,
) -> List[Walk]:
    """All n-step walks from start to end that never leave the cone."""
    return list(iter_walks_in_cone(n, start, end, cone, cap))


def admissible_walks(n: int, cap: int = DEFAULT_WALK_CAP) -> Iterator[Walk]:
    """n-step walks from (0, 0) whose builds have no missing edges: L stays
    non-negative and R never drops below its final value."""
    for walk in iter_walks_in_cone(n, (0, 0), None, Cone(0, -n), cap):
        right = walk.second_coordinate
        if right.min() == right[-1]:
            yield walk


def _triangulation_walk_shape(n_edges: int, l: int, r: int) -> Tuple[int, Point, Cone]:
    if n_edges < 1 or l < 1 or r < 1:
        raise ValueError("need n_edges, l and r all at least 1")
    return n_edges - 1, (l - 1, 1 - r), Cone(0, 1 - r)


def count_triangulations(
    n_edges: int, l: int, r: int, cap: int = DEFAULT_COUNT_EDGE_CAP
) -> int:
    """Number of bipolar triangulations with n_edges edges, left boundary l
    and right boundary r, counted as their encoding cone walks."""
    steps, end, cone = _triangulation_walk_shape(n_edges, l, r)
    if n_edges > cap:
        raise CapExceededError(f"counting {n_edges}-edge maps exceeds the cap of {cap}")
    # transfer counts over positions, pruned by reachability of the end point
    layer = Counter({(0, 0): 1})
    for done in range(steps):
        remaining = steps - done - 1
        following: Counter = Counter()
        for (x, y), ways in layer.items():
            for code in range(3):
                nx_, ny_ = x + int(INCREMENTS[code, 0]), y + int(INCREMENTS[code, 1])
                if cone.contains(nx_, ny_) and _reachable(nx_, ny_, end, remaining):
                    following[(nx_, ny_)] += ways
        layer = following
    return layer.get(end, 0) if _reachable(0, 0, end, steps) else 0


def enumerate_maps(
    n_edges: int, l: int, r: int, cap: int = DEFAULT_WALK_CAP
) -> List[OrientedMap]:
    """Every triangulation of the class, built from its cone walk."""
    steps, end, cone = _triangulation_walk_shape(n_edges, l, r)
    return [build(w) for w in iter_walks_in_cone(steps, (0, 0), end, cone, cap)]


def boundary_classes(n_edges: int) -> List[Tuple[int, int]]:
    """(l, r) pairs a map with n_edges edges can have."""
    return [
        (l, r)
        for l in range(1, n_edges + 1)
        for r in range(1, n_edges + 2 - l)
    ]
