"""
Finite cells and finite windows of the infinite map models.

Every sampler here is a walk sampler followed by the KMSW build. Windows
carry the boundary indexing and the frontier: the upper boundary of the
finite build, where later steps of the infinite walk would still attach.
"""

import logging

from opentelemetry import trace

from src.kmsw.builder import build
from src.maps.boundary import boundary_indexing, east_end, upper_boundary_vertices
from src.models.planar_map import BoundaryIndexing, MapWindow, OrientedMap
from src.models.walk import Walk
from src.walks.rng import SeedLike
from src.walks.sampling import (
    sample_conditioned_walk,
    sample_uibhbot_walk,
    sample_uibot_walk,
)

logger = logging.getLogger("samplers_logger")
tracer = trace.get_tracer(__name__)


def sample_cell(n: int, seed: SeedLike) -> OrientedMap:
    """The cell M_{0,n}: the map of n i.i.d. uniform steps."""
    with tracer.start_as_current_span("sample_cell", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("cell.steps", n)
        return build(sample_uibot_walk(n, seed))


def sample_uiqbot_window(n_steps: int, seed: SeedLike) -> OrientedMap:
    """Window of the quarter-plane map: the conditioned walk from (0, 0)."""
    with tracer.start_as_current_span(
        "sample_uiqbot_window", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("window.steps", n_steps)
        return build(sample_conditioned_walk(n_steps, 0, seed))


def window_from_walk(walk: Walk) -> MapWindow:
    """Window of the whole-plane model built from an explicit walk."""
    map_ = build(walk)
    frontier = set(upper_boundary_vertices(map_))
    frontier.add(east_end(map_))
    return MapWindow(
        map=map_,
        indexing=boundary_indexing(map_),
        frontier=frozenset(frontier),
        model="uibot",
        steps=walk.length,
    )


def sample_uibot_window(n_steps: int, seed: SeedLike) -> MapWindow:
    """Window of M_{0,inf}; a longer window with the same seed extends it."""
    return window_from_walk(sample_uibot_walk(n_steps, seed))


def sample_uibhbot_window(
    n_neg_segments: int, n_pos_steps: int, seed: SeedLike
) -> MapWindow:
    """Window of the boundary-channeled half-plane.

    The half-plane boundary vertex x^b_k (0 <= k <= n_neg_segments) is the
    lower-left vertex x_{k - n_neg_segments} of the finite build, so x^b_0 is
    the boundary vertex present at time 0 and x^b_k the one created when the
    k-th segment before time 0 ends.
    """
    with tracer.start_as_current_span(
        "sample_uibhbot_window", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("window.segments", n_neg_segments)
        span.set_attribute("window.steps", n_pos_steps)
        half_plane = sample_uibhbot_walk(n_neg_segments, n_pos_steps, seed)
        map_ = build(half_plane.walk)
        finite = boundary_indexing(map_)
        vertices = {
            k: finite[k - n_neg_segments]
            for k in range(n_neg_segments + 1)
            if k - n_neg_segments in finite
        }
        logger.debug(
            f"Half-plane window: {n_neg_segments} segments, "
            f"{half_plane.origin} negative steps, {map_.edge_count} edges"
        )
        return MapWindow(
            map=map_,
            indexing=BoundaryIndexing(vertices=vertices),
            frontier=upper_boundary_vertices(map_),
            model="uibhbot",
            steps=n_pos_steps,
            origin=half_plane.origin,
        )
