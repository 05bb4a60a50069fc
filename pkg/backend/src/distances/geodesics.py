"""
Leftmost geodesics and the geodesic slices between consecutive ones.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from opentelemetry import trace

from src.errors import NotCoalescedError, UnreachableError
from src.maps.faces import FaceSet, dart, faces
from src.models.distances import NO_PATH, DistanceField, GeodesicSlice, Mode
from src.models.planar_map import BoundaryIndexing, OrientedMap

from .dp import distance_to_target

logger = logging.getLogger("distances_logger")
tracer = trace.get_tracer(__name__)


def follow_leftmost(
    map_: OrientedMap, to_target: DistanceField, src: int
) -> Tuple[int, ...]:
    """Greedy walk along the leftmost DP-optimal outgoing edge."""
    values = to_target.values
    if values[src] == NO_PATH:
        raise UnreachableError(f"vertex {to_target.source} is not reachable from {src}")
    path: List[int] = []
    v = src
    while v != to_target.source:
        wanted = values[v] - 1
        for e in reversed(map_.out_edges[v]):
            if values[map_.heads[e]] == wanted:
                path.append(e)
                v = int(map_.heads[e])
                break
    return tuple(path)


def leftmost_geodesic(map_: OrientedMap, mode: Mode, src: int, dst: int) -> Tuple[int, ...]:
    """The geodesic from src to dst that every other geodesic lies weakly
    to the right of."""
    return follow_leftmost(map_, distance_to_target(map_, Mode.parse(mode), dst), src)


def _path_vertices(map_: OrientedMap, start: int, path: Sequence[int]) -> List[int]:
    return [start] + [int(map_.heads[e]) for e in path]


def geodesic_slices(
    map_: OrientedMap,
    indexing: BoundaryIndexing,
    mode: Mode,
    k_range: Tuple[int, int],
    target: int,
) -> List[GeodesicSlice]:
    """Slices k = k_low..k_high between the leftmost geodesics towards
    `target` from x_{k-1} and x_k.

    Once two leftmost geodesics share a vertex they coincide, so theta_k and
    theta_k^- are the positions of the first vertex of P_k on P_{k-1}.
    """
    mode = Mode.parse(mode)
    k_low, k_high = k_range
    if not indexing.covers(k_low - 1, k_high):
        raise NotCoalescedError(f"window does not index x_{k_low - 1}..x_{k_high}")
    with tracer.start_as_current_span("geodesic_slices", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("slices", k_high - k_low + 1)
        to_target = distance_to_target(map_, mode, target)
        paths: Dict[int, Tuple[int, ...]] = {}
        for k in range(k_low - 1, k_high + 1):
            try:
                paths[k] = follow_leftmost(map_, to_target, indexing[k])
            except UnreachableError as exc:
                raise NotCoalescedError(
                    f"x_{k} has no directed path to the target {target}"
                ) from exc
        slices = []
        for k in range(k_low, k_high + 1):
            left = _path_vertices(map_, indexing[k - 1], paths[k - 1])
            right = _path_vertices(map_, indexing[k], paths[k])
            position = {v: i for i, v in enumerate(left)}
            theta = next(i for i, v in enumerate(right) if v in position)
            merge = right[theta]
            slices.append(
                GeodesicSlice(
                    k=k,
                    left_path=paths[k - 1][: position[merge]],
                    right_path=paths[k][:theta],
                    theta_minus=position[merge],
                    theta=theta,
                    merge_vertex=merge,
                )
            )
        logger.debug(f"Computed {len(slices)} geodesic slices towards vertex {target}")
        return slices


def _connecting_edge(map_: OrientedMap, west: int, east: int) -> Optional[int]:
    """The boundary edge joining consecutive boundary vertices west -> east."""
    for e in map_.rotations[west]:
        if int(map_.tails[e]) == west and int(map_.heads[e]) == east:
            return e
    return None


def enclosed_faces(
    map_: OrientedMap, darts: Sequence[int], face_set: Optional[FaceSet] = None
) -> FrozenSet[int]:
    """Faces inside a closed counterclockwise dart cycle.

    A dart and its reverse cancel; the faces on the left of the remaining
    darts seed a flood fill that never crosses a cycle edge.
    """
    face_set = face_set or faces(map_)
    remaining = set(darts)
    for d in darts:
        if d ^ 1 in remaining and d in remaining:
            remaining.discard(d)
            remaining.discard(d ^ 1)
    walls = {d >> 1 for d in remaining}
    inside = {int(face_set.labels[d]) for d in remaining}
    queue = deque(inside)
    while queue:
        f = queue.popleft()
        for d in face_set.cycles[f]:
            if d >> 1 in walls:
                continue
            g = int(face_set.labels[d ^ 1])
            if g not in inside:
                inside.add(g)
                queue.append(g)
    return frozenset(inside)


def slice_faces(
    map_: OrientedMap, geodesic_slice: GeodesicSlice, west: int, east: int,
    face_set: Optional[FaceSet] = None,
) -> FrozenSet[int]:
    """Faces between x_{k-1} = west and x_k = east and the two geodesic
    segments bounding the slice."""
    boundary = _connecting_edge(map_, west, east)
    if boundary is None:
        raise NotCoalescedError(f"no boundary edge joins {west} and {east}")
    cycle = [dart(boundary)]
    cycle.extend(dart(e) for e in geodesic_slice.right_path)
    cycle.extend(dart(e, reverse=True) for e in reversed(geodesic_slice.left_path))
    return enclosed_faces(map_, cycle, face_set)


def region_faces(
    map_: OrientedMap,
    indexing: BoundaryIndexing,
    left_path: Sequence[int],
    right_path: Sequence[int],
    k_range: Tuple[int, int],
    face_set: Optional[FaceSet] = None,
) -> FrozenSet[int]:
    """Faces between the geodesic from x_{k_low-1} (left_path) and the one
    from x_{k_high} (right_path), up to their first common vertex."""
    k_low, k_high = k_range
    left = _path_vertices(map_, indexing[k_low - 1], left_path)
    right = _path_vertices(map_, indexing[k_high], right_path)
    position = {v: i for i, v in enumerate(left)}
    theta = next(i for i, v in enumerate(right) if v in position)
    cycle = []
    for k in range(k_low, k_high + 1):
        edge = _connecting_edge(map_, indexing[k - 1], indexing[k])
        if edge is None:
            raise NotCoalescedError(f"no boundary edge joins x_{k - 1} and x_{k}")
        cycle.append(dart(edge))
    cycle.extend(dart(e) for e in right_path[:theta])
    cycle.extend(dart(e, reverse=True) for e in reversed(left_path[: position[right[theta]]]))
    return enclosed_faces(map_, cycle, face_set)
