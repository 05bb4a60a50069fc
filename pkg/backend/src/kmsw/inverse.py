"""
Inverse KMSW procedure: bipolar-oriented triangulation -> walk.
"""

import logging
from typing import List

import numpy as np
from opentelemetry import trace

from src.errors import MalformedMapError, NotBipolarError
from src.models.planar_map import OrientedMap
from src.models.walk import Step, Walk

logger = logging.getLogger("maps_logger")
tracer = trace.get_tracer(__name__)


def _check_bipolar(map_: OrientedMap) -> int:
    if map_.missing_edge_count:
        raise NotBipolarError(
            f"invert needs a map without missing edges, found {map_.missing_edge_count}"
        )
    if map_.root_edge is None:
        raise NotBipolarError("invert needs a rooted map")
    sources, sinks = map_.sources(), map_.sinks()
    if len(sources) != 1 or len(sinks) != 1:
        raise NotBipolarError(
            f"expected one source and one sink, found {len(sources)} and {len(sinks)}"
        )
    source = sources[0]
    if map_.root_tail != source or map_.out_edges[source][0] != map_.root_edge:
        raise NotBipolarError("the root must be the rightmost outgoing edge of the source")
    return source


def contour_order(map_: OrientedMap, source: int) -> List[int]:
    """Edges in counterclockwise contour order of the leftmost-incoming tree.

    Outgoing edges are listed right to left; the search descends through an
    edge only when it is the leftmost incoming edge of its head.
    """
    out_edges, in_edges, heads = map_.out_edges, map_.in_edges, map_.heads
    order: List[int] = []
    stack = [(source, 0)]
    while stack:
        vertex, i = stack.pop()
        outs = out_edges[vertex]
        if i >= len(outs):
            continue
        edge = outs[i]
        stack.append((vertex, i + 1))
        order.append(edge)
        head = int(heads[edge])
        if in_edges[head][0] == edge:
            stack.append((head, 0))
    return order


def _heights_to_sink(map_: OrientedMap) -> np.ndarray:
    """Depth of every vertex in the rightmost-outgoing tree rooted at the sink."""
    heights = np.full(map_.vertex_count, -1, dtype=np.int64)
    for start in range(map_.vertex_count):
        chain = []
        v = start
        while heights[v] < 0 and map_.out_edges[v]:
            chain.append(v)
            v = int(map_.heads[map_.out_edges[v][0]])
        if heights[v] < 0:
            heights[v] = 0
        base = int(heights[v])
        for offset, u in enumerate(reversed(chain), start=1):
            heights[u] = base + offset
    return heights


def invert(map_: OrientedMap) -> Walk:
    """The walk w with build(w) isomorphic to map_."""
    with tracer.start_as_current_span("kmsw_invert", kind=trace.SpanKind.INTERNAL) as span:
        source = _check_bipolar(map_)
        order = contour_order(map_, source)
        if len(order) != map_.edge_count:
            raise NotBipolarError(
                f"only {len(order)} of {map_.edge_count} edges are reachable from the source"
            )
        left_height = np.zeros(map_.vertex_count, dtype=np.int64)
        for edge in order:
            head = int(map_.heads[edge])
            if map_.in_edges[head][0] == edge:
                left_height[head] = left_height[map_.tails[edge]] + 1
        right_height = _heights_to_sink(map_)
        # Shift so that R(0) = 0: the root head sits r - 1 above the sink
        shift = int(right_height[source]) - 1
        edges = np.asarray(order, dtype=np.int64)
        left = left_height[map_.tails[edges]]
        right = right_height[map_.heads[edges]] - shift
        codes = []
        for dl, dr in zip(np.diff(left), np.diff(right)):
            try:
                codes.append(Step.from_increment(int(dl), int(dr)).code)
            except ValueError as exc:
                raise MalformedMapError(
                    f"contour increment ({dl}, {dr}) is not a KMSW step; "
                    "the map is not a triangulation"
                ) from exc
        span.set_attribute("walk.length", len(codes))
        logger.debug(f"Inverted map with {map_.edge_count} edges")
        return Walk(start=(0, 0), steps=np.asarray(codes, dtype=np.int8))
