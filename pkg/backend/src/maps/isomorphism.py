"""
Rooted isomorphism by canonical breadth-first labeling from the root edge.

Vertices are labeled in discovery order; each vertex's rotation is read
counterclockwise starting at the edge through which it was discovered, so
the labeling only depends on the root, the cyclic orders and the
orientations.
"""

from collections import deque
from typing import Dict, Tuple

import numpy as np

from src.errors import MalformedMapError
from src.models.planar_map import OrientedMap

CanonicalForm = Tuple[
    int, int, Tuple[Tuple[int, int, bool], ...], Tuple[Tuple[int, ...], ...]
]


def _labeling(map_: OrientedMap) -> Tuple[Dict[int, int], Dict[int, int], Dict[int, int]]:
    """(vertex labels, edge labels, discovery edge per vertex)."""
    if map_.root_edge is None:
        if map_.vertex_count == 1 and map_.edge_count == 0:
            return {0: 0}, {}, {}
        raise MalformedMapError("canonical labeling needs a rooted map")
    root = map_.root_edge
    vertex_label = {map_.root_tail: 0, map_.root_head: 1}
    edge_label = {root: 0}
    discovered_by = {map_.root_tail: root, map_.root_head: root}
    queue = deque([map_.root_tail, map_.root_head])
    while queue:
        v = queue.popleft()
        rot = map_.rotations[v]
        first = rot.index(discovered_by[v])
        for e in rot[first:] + rot[:first]:
            if e not in edge_label:
                edge_label[e] = len(edge_label)
            w = map_.other_end(e, v)
            if w not in vertex_label:
                vertex_label[w] = len(vertex_label)
                discovered_by[w] = e
                queue.append(w)
    if len(vertex_label) != map_.vertex_count:
        raise MalformedMapError(
            f"map is disconnected: {map_.vertex_count - len(vertex_label)} vertices "
            "are not reached from the root"
        )
    return vertex_label, edge_label, discovered_by


def canonical_form(map_: OrientedMap) -> CanonicalForm:
    vertex_label, edge_label, discovered_by = _labeling(map_)
    edges = [None] * map_.edge_count
    for e, label in edge_label.items():
        edges[label] = (
            vertex_label[int(map_.tails[e])],
            vertex_label[int(map_.heads[e])],
            bool(map_.missing[e]),
        )
    rotations = [None] * map_.vertex_count
    for v, label in vertex_label.items():
        rot = map_.rotations[v]
        first = rot.index(discovered_by[v]) if v in discovered_by else 0
        rotations[label] = tuple(edge_label[e] for e in rot[first:] + rot[:first])
    return map_.vertex_count, map_.edge_count, tuple(edges), tuple(rotations)


def isomorphic(a: OrientedMap, b: OrientedMap) -> bool:
    """Root-, rotation- and orientation-preserving isomorphism."""
    if (a.vertex_count, a.edge_count) != (b.vertex_count, b.edge_count):
        return False
    return canonical_form(a) == canonical_form(b)


def canonicalize(map_: OrientedMap) -> OrientedMap:
    """Relabel vertices and edges canonically, keeping each rotation's
    linear cut and relabeling the active trace."""
    vertex_label, edge_label, _ = _labeling(map_)
    n_edges = map_.edge_count
    old_edge = np.empty(n_edges, dtype=np.int64)
    for e, label in edge_label.items():
        old_edge[label] = e
    new_edge = np.empty(n_edges, dtype=np.int64)
    new_edge[old_edge] = np.arange(n_edges)
    relabel = np.empty(map_.vertex_count, dtype=np.int64)
    for v, label in vertex_label.items():
        relabel[v] = label
    rotations = [()] * map_.vertex_count
    for v, label in vertex_label.items():
        rotations[label] = tuple(int(new_edge[e]) for e in map_.rotations[v])
    trace = None
    if map_.active_trace is not None:
        trace = new_edge[map_.active_trace]
    return OrientedMap(
        tails=relabel[map_.tails[old_edge]],
        heads=relabel[map_.heads[old_edge]],
        missing=map_.missing[old_edge],
        rotations=tuple(rotations),
        root_edge=None if map_.root_edge is None else 0,
        active_trace=trace,
    )
