"""
Boundary segments of a map, read off its external face.

Walking the external face from the reversed root, the darts run along the
lower-left segment (missing, westward), the upper-left segment (oriented,
eastward), the upper-right segment (missing, eastward) and finally the
lower-right segment (oriented, westward) back to the root.
"""

import logging
from typing import FrozenSet, List, Optional

from src.errors import MalformedMapError
from src.models.planar_map import BoundaryIndexing, BoundarySegments, OrientedMap

from .faces import dart_edge, dart_reversed, external_face

logger = logging.getLogger("maps_logger")

LOWER_LEFT, UPPER_LEFT, UPPER_RIGHT, LOWER_RIGHT = range(4)


def _classify(map_: OrientedMap, d: int) -> int:
    missing = bool(map_.missing[dart_edge(d)])
    if dart_reversed(d):
        return LOWER_LEFT if missing else LOWER_RIGHT
    return UPPER_RIGHT if missing else UPPER_LEFT


def boundary_segments(map_: OrientedMap) -> BoundarySegments:
    """Segments computed from the geometry (independently of any builder
    bookkeeping stored on the map)."""
    cycle = external_face(map_)
    if not cycle:
        raise MalformedMapError("an unrooted map has no external face to read")
    parts: List[List[int]] = [[], [], [], []]
    current = LOWER_LEFT
    for d in cycle:
        kind = _classify(map_, d)
        if kind < current:
            raise MalformedMapError(
                f"external face is not of the form LL* UL* UR* LR* (edge {dart_edge(d)})"
            )
        current = kind
        parts[kind].append(dart_edge(d))
    return BoundarySegments(
        upper_left=tuple(parts[UPPER_LEFT]),
        lower_left=tuple(reversed(parts[LOWER_LEFT])),
        lower_right=tuple(reversed(parts[LOWER_RIGHT])),
        upper_right=tuple(parts[UPPER_RIGHT]),
    )


def _segments(map_: OrientedMap) -> BoundarySegments:
    return map_.segments if map_.segments is not None else boundary_segments(map_)


def boundary_indexing(
    map_: OrientedMap, segments: Optional[BoundarySegments] = None
) -> BoundaryIndexing:
    """x_0 = root tail, x_k (k >= 1) heads of the lower-right edges and x_k
    (k <= -1) tails of the lower-left edges counted from the east."""
    segments = segments or _segments(map_)
    if not segments.lower_right or segments.lower_right[0] != map_.root_edge:
        raise MalformedMapError("the root edge must open the lower-right segment")
    vertices = {0: map_.root_tail}
    for k, e in enumerate(segments.lower_right, start=1):
        vertices[k] = int(map_.heads[e])
    for k, e in enumerate(reversed(segments.lower_left), start=1):
        vertices[-k] = int(map_.tails[e])
    return BoundaryIndexing(vertices=vertices)


def _segment_vertices(map_: OrientedMap, edges) -> List[int]:
    if not edges:
        return []
    return [int(map_.tails[edges[0]])] + [int(map_.heads[e]) for e in edges]


def upper_left_vertices(map_: OrientedMap) -> List[int]:
    return _segment_vertices(map_, _segments(map_).upper_left)


def lower_right_vertices(map_: OrientedMap) -> List[int]:
    return _segment_vertices(map_, _segments(map_).lower_right)


def upper_boundary_vertices(map_: OrientedMap) -> FrozenSet[int]:
    """Vertices on the upper-left or upper-right segment."""
    segments = _segments(map_)
    upper = set(_segment_vertices(map_, segments.upper_left))
    upper.update(_segment_vertices(map_, segments.upper_right))
    return frozenset(upper)


def lower_boundary_vertices(map_: OrientedMap) -> FrozenSet[int]:
    segments = _segments(map_)
    lower = set(_segment_vertices(map_, segments.lower_left))
    lower.update(_segment_vertices(map_, segments.lower_right))
    return frozenset(lower)


def east_end(map_: OrientedMap) -> int:
    """Head of the last lower-right edge."""
    return int(map_.heads[_segments(map_).lower_right[-1]])
