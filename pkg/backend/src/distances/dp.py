"""
Directed-distance dynamic programming over a topological order.

LDP and SDP both reduce to one relaxation pass in topological order since
every edge has unit length and the oriented edges form a DAG.
"""

import logging
import weakref
from typing import List, NamedTuple, Optional, Sequence

import networkx as nx
import numpy as np
from opentelemetry import trace

from src.errors import CycleError
from src.maps.boundary import (
    lower_boundary_vertices,
    lower_right_vertices,
    upper_boundary_vertices,
)
from src.models.distances import NO_PATH, DistanceField, Length, Mode
from src.models.planar_map import OrientedMap

logger = logging.getLogger("distances_logger")
tracer = trace.get_tracer(__name__)

_ORDERS: "weakref.WeakKeyDictionary[OrientedMap, List[int]]" = weakref.WeakKeyDictionary()


def _cycle_witness(map_: OrientedMap, remaining: Sequence[int]) -> List[int]:
    inside = set(remaining)
    graph = nx.MultiDiGraph()
    for e in map_.oriented_edges():
        tail, head = int(map_.tails[e]), int(map_.heads[e])
        if tail in inside and head in inside:
            graph.add_edge(tail, head, key=e)
    return [int(key) for _, _, key, _ in nx.find_cycle(graph, orientation="original")]


def topological_order(map_: OrientedMap) -> List[int]:
    """Kahn's algorithm on the oriented edges (cached per map)."""
    cached = _ORDERS.get(map_)
    if cached is not None:
        return cached
    indegree = [len(ins) for ins in map_.in_edges]
    ready = [v for v in range(map_.vertex_count) if indegree[v] == 0]
    ready.reverse()
    order: List[int] = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in map_.successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
    if len(order) != map_.vertex_count:
        placed = set(order)
        remaining = [v for v in range(map_.vertex_count) if v not in placed]
        witness = _cycle_witness(map_, remaining)
        raise CycleError(f"oriented edges contain a directed cycle {witness}", witness)
    _ORDERS[map_] = order
    return order


def _better(mode: Mode):
    if mode is Mode.LDP:
        return lambda new, old: new > old
    return lambda new, old: new < old


def distance_field(map_: OrientedMap, mode: Mode, src: int) -> DistanceField:
    """XDP(src, v) for every vertex v."""
    mode = Mode.parse(mode)
    order = topological_order(map_)
    better = _better(mode)
    values = [NO_PATH] * map_.vertex_count
    values[src] = 0
    successors = map_.successors
    started = False
    for v in order:
        if v == src:
            started = True
        if not started or values[v] == NO_PATH:
            continue
        candidate = values[v] + 1
        for w in successors[v]:
            old = values[w]
            if old == NO_PATH or better(candidate, old):
                values[w] = candidate
    return DistanceField(source=src, mode=mode, values=np.asarray(values, dtype=np.int64))


def distance_to_target(map_: OrientedMap, mode: Mode, dst: int) -> DistanceField:
    """XDP(v, dst) for every vertex v; the field's `source` is dst."""
    mode = Mode.parse(mode)
    order = topological_order(map_)
    better = _better(mode)
    values = [NO_PATH] * map_.vertex_count
    values[dst] = 0
    successors = map_.successors
    started = False
    for v in reversed(order):
        if v == dst:
            started = True
        if not started or v == dst:
            continue
        best = NO_PATH
        for w in successors[v]:
            if values[w] == NO_PATH:
                continue
            candidate = values[w] + 1
            if best == NO_PATH or better(candidate, best):
                best = candidate
        values[v] = best
    return DistanceField(source=dst, mode=mode, values=np.asarray(values, dtype=np.int64))


def xdp(map_: OrientedMap, mode: Mode, src: int, dst: int) -> Length:
    """Optimal directed path length from src to dst, or UNREACHABLE."""
    if src == dst:
        return 0
    return distance_field(map_, mode, src)[dst]


def _longest_anywhere(map_: OrientedMap) -> int:
    best = [0] * map_.vertex_count
    for v in topological_order(map_):
        for w in map_.successors[v]:
            if best[v] + 1 > best[w]:
                best[w] = best[v] + 1
    return max(best, default=0)


def max_xdp(map_: OrientedMap, mode: Mode) -> int:
    """LDP: the longest directed path anywhere. SDP: the largest finite
    SDP(x, y) from a lower boundary vertex x to an upper boundary vertex y."""
    mode = Mode.parse(mode)
    with tracer.start_as_current_span("max_xdp", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("map.edges", map_.edge_count)
        span.set_attribute("mode", mode.value)
        if mode is Mode.LDP:
            return _longest_anywhere(map_)
        upper = sorted(upper_boundary_vertices(map_))
        best = 0
        for x in sorted(lower_boundary_vertices(map_)):
            values = distance_field(map_, Mode.SDP, x).values[upper]
            finite = values[values != NO_PATH]
            if finite.size:
                best = max(best, int(finite.max()))
        return best


class BoundarySdpStatistics(NamedTuple):
    """lower_to_upper: max over lower boundary x of min over upper boundary y
    of SDP(x, y). source_to_right: max over lower-right y of SDP(x_0, y)."""

    lower_to_upper: Optional[int]
    source_to_right: int


def boundary_sdp_statistics(map_: OrientedMap) -> BoundarySdpStatistics:
    with tracer.start_as_current_span(
        "boundary_sdp_statistics", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("map.edges", map_.edge_count)
        upper = upper_boundary_vertices(map_)
        to_upper = [NO_PATH] * map_.vertex_count
        for v in reversed(topological_order(map_)):
            if v in upper:
                to_upper[v] = 0
                continue
            reachable = [to_upper[w] for w in map_.successors[v] if to_upper[w] != NO_PATH]
            if reachable:
                to_upper[v] = min(reachable) + 1
        lower = [to_upper[x] for x in lower_boundary_vertices(map_) if to_upper[x] != NO_PATH]
        field = distance_field(map_, Mode.SDP, map_.root_tail)
        right = [field.values[y] for y in lower_right_vertices(map_)]
        return BoundarySdpStatistics(
            lower_to_upper=max(lower) if lower else None,
            source_to_right=int(max(right)),
        )
