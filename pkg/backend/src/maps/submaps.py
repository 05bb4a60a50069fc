"""
Submaps: the part reachable from a vertex, the oriented part of a map, and
the cut vertices of quadrant maps.
"""

import logging
from collections import deque
from typing import List

import numpy as np

from src.models.planar_map import OrientedMap

from .boundary import boundary_segments
from .faces import linearize_rotations

logger = logging.getLogger("maps_logger")


def induced_submap(map_: OrientedMap, keep_vertices, keep_edges, root_edge) -> OrientedMap:
    """Restrict to the given vertices and edges, relabeling both in
    increasing id order and re-cutting the rotations."""
    vertices = sorted(int(v) for v in keep_vertices)
    edges = sorted(int(e) for e in keep_edges)
    new_vertex = {v: i for i, v in enumerate(vertices)}
    new_edge = {e: i for i, e in enumerate(edges)}
    tails = np.array([new_vertex[int(map_.tails[e])] for e in edges], dtype=np.int64)
    heads = np.array([new_vertex[int(map_.heads[e])] for e in edges], dtype=np.int64)
    missing = np.array([bool(map_.missing[e]) for e in edges], dtype=bool)
    cyclic = [
        tuple(new_edge[e] for e in map_.rotations[v] if e in new_edge) for v in vertices
    ]
    root = None if root_edge is None else new_edge[root_edge]
    return OrientedMap(
        tails=tails,
        heads=heads,
        missing=missing,
        rotations=linearize_rotations(tails, heads, cyclic, root),
        root_edge=root,
    )


def reachable_vertices(map_: OrientedMap, v: int) -> List[int]:
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in map_.successors[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def reachable_submap(map_: OrientedMap, v: int) -> OrientedMap:
    """Oriented edges between vertices reachable from v; rooted at v's
    rightmost outgoing edge."""
    if not 0 <= v < map_.vertex_count:
        raise ValueError(f"vertex {v} is not in the map")
    keep = set(reachable_vertices(map_, v))
    edges = [
        e
        for e in map_.oriented_edges()
        if int(map_.tails[e]) in keep and int(map_.heads[e]) in keep
    ]
    root = map_.out_edges[v][0] if map_.out_edges[v] else None
    return induced_submap(map_, keep, edges, root)


def strip_missing(map_: OrientedMap) -> OrientedMap:
    """The same map without its missing edges."""
    return induced_submap(
        map_, range(map_.vertex_count), map_.oriented_edges(), map_.root_edge
    )


def cut_vertices(quadrant_map: OrientedMap) -> List[int]:
    """Vertices on both the upper-left and the lower-right boundary, in order
    along the lower-right boundary (the source first)."""
    segments = quadrant_map.segments or boundary_segments(quadrant_map)
    upper = {int(quadrant_map.tails[segments.upper_left[0]])}
    upper.update(int(quadrant_map.heads[e]) for e in segments.upper_left)
    right = [int(quadrant_map.tails[segments.lower_right[0]])]
    right.extend(int(quadrant_map.heads[e]) for e in segments.lower_right)
    return [v for v in right if v in upper]
