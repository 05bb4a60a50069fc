"""
Forward KMSW procedure: walk -> bipolar-oriented triangulation.

The builder keeps the four boundary segments as edge-id sequences in
west-to-east order. The active edge is always the last upper-left edge; the
upper-right segment starts at the head of the active edge.

Rotation lists follow the OrientedMap convention, with missing edges taken
as pointing west to east: at every vertex the list starts with the rightmost
(geometrically) outgoing edge.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, List, Tuple

import numpy as np
from opentelemetry import trace

from src.models.planar_map import BoundarySegments, OrientedMap
from src.models.walk import Step, Walk

logger = logging.getLogger("maps_logger")
tracer = trace.get_tracer(__name__)

A_CODE, B_CODE, C_CODE = 0, 1, 2


@dataclass
class BuilderState:
    """Mutable single-owner state of an incremental build."""

    tails: List[int] = field(default_factory=list)
    heads: List[int] = field(default_factory=list)
    missing: List[bool] = field(default_factory=list)
    created: List[int] = field(default_factory=list)
    rotations: List[List[int]] = field(default_factory=list)
    upper_left: List[int] = field(default_factory=list)
    upper_right: Deque[int] = field(default_factory=deque)
    lower_left: Deque[int] = field(default_factory=deque)
    lower_right: List[int] = field(default_factory=list)
    trace: List[int] = field(default_factory=list)
    step_index: int = 0

    @property
    def active(self) -> int:
        return self.upper_left[-1]

    def boundary_lengths(self) -> Tuple[int, int, int, int]:
        """(UL, LL, LR, UR) counts."""
        return (
            len(self.upper_left),
            len(self.lower_left),
            len(self.lower_right),
            len(self.upper_right),
        )

    def boundary_position(self) -> Tuple[int, int]:
        """(#UL - #LL - 1, #UR - #LR + 1), equal to the walk position."""
        ul, ll, lr, ur = self.boundary_lengths()
        return ul - ll - 1, ur - lr + 1

    def _new_vertex(self) -> int:
        self.rotations.append([])
        return len(self.rotations) - 1

    def _new_edge(self, tail: int, head: int, missing: bool = False) -> int:
        self.tails.append(tail)
        self.heads.append(head)
        self.missing.append(missing)
        self.created.append(self.step_index)
        return len(self.tails) - 1


def initial_state() -> BuilderState:
    """A single oriented root edge 0 -> 1, which is both UL and LR."""
    state = BuilderState()
    s, t = state._new_vertex(), state._new_vertex()
    root = state._new_edge(s, t)
    state.rotations[s].append(root)
    state.rotations[t].append(root)
    state.upper_left.append(root)
    state.lower_right.append(root)
    state.trace.append(root)
    return state


def _step_a(state: BuilderState) -> None:
    if state.upper_right:
        # The missing edge next to the active edge becomes oriented
        edge = state.upper_right.popleft()
        state.missing[edge] = False
        state.created[edge] = state.step_index
        state.upper_left.append(edge)
        return
    active = state.active
    t = state.heads[active]
    x = state._new_vertex()
    edge = state._new_edge(t, x)
    rot_t = state.rotations[t]
    rot_t.insert(rot_t.index(active), edge)
    state.rotations[x].append(edge)
    state.upper_left.append(edge)
    state.lower_right.append(edge)


def _step_b(state: BuilderState) -> None:
    active = state.upper_left.pop()
    s, t = state.tails[active], state.heads[active]
    rot_t = state.rotations[t]
    if state.upper_left:
        below = state.upper_left.pop()
        p = state.tails[below]
        edge = state._new_edge(p, t)
        rot_p = state.rotations[p]
        rot_p.insert(rot_p.index(below) + 1, edge)
        rot_t.insert(rot_t.index(active), edge)
        state.upper_left.append(edge)
        return
    # Closing to the west past the westmost vertex needs a new missing edge
    p = state._new_vertex()
    side = state._new_edge(p, s, missing=True)
    edge = state._new_edge(p, t)
    rot_t.insert(rot_t.index(active), edge)
    rot_s = state.rotations[s]
    rot_s.insert(rot_s.index(active) + 1, side)
    state.rotations[p].extend([side, edge])
    state.lower_left.appendleft(side)
    state.upper_left.append(edge)


def _step_c(state: BuilderState) -> None:
    active = state.active
    s, t = state.tails[active], state.heads[active]
    y = state._new_vertex()
    edge = state._new_edge(s, y)
    side = state._new_edge(y, t, missing=True)
    rot_s = state.rotations[s]
    rot_s.insert(rot_s.index(active) + 1, edge)
    rot_t = state.rotations[t]
    rot_t.insert(rot_t.index(active), side)
    state.rotations[y].extend([side, edge])
    state.upper_left[-1] = edge
    state.upper_right.appendleft(side)


_HANDLERS = {A_CODE: _step_a, B_CODE: _step_b, C_CODE: _step_c}


def extend(state: BuilderState, step) -> BuilderState:
    """Apply one KMSW step in place and return the same state."""
    code = step.code if isinstance(step, Step) else int(step)
    state.step_index += 1
    _HANDLERS[code](state)
    state.trace.append(state.active)
    return state


def freeze(state: BuilderState) -> OrientedMap:
    """Immutable snapshot of the current partial map."""
    return OrientedMap(
        tails=np.array(state.tails, dtype=np.int64),
        heads=np.array(state.heads, dtype=np.int64),
        missing=np.array(state.missing, dtype=bool),
        rotations=tuple(tuple(r) for r in state.rotations),
        root_edge=0,
        active_trace=np.array(state.trace, dtype=np.int64),
        segments=BoundarySegments(
            upper_left=tuple(state.upper_left),
            lower_left=tuple(state.lower_left),
            lower_right=tuple(state.lower_right),
            upper_right=tuple(state.upper_right),
        ),
        creation_times=np.array(state.created, dtype=np.int64),
    )


def build_state(walk: Walk) -> BuilderState:
    state = initial_state()
    for code in walk.steps:
        extend(state, code)
    return state


def build(walk: Walk) -> OrientedMap:
    """Run the KMSW procedure over the walk's steps (its start is ignored)."""
    with tracer.start_as_current_span("kmsw_build", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("walk.length", walk.length)
        result = freeze(build_state(walk))
        span.set_attribute("map.edges", result.edge_count)
        logger.debug(
            f"Built map from {walk.length} steps: {result.vertex_count} vertices, "
            f"{result.oriented_edge_count} oriented and "
            f"{result.missing_edge_count} missing edges"
        )
        return result
