"""
Boundary-channeled triangulations and the boundary reversal bijection.

A walk with n steps from (l - 1, 0) to (0, 0) inside the quadrant builds a
map with l lower boundary edges, all missing except the root, a single
upper-left edge and no upper-right edge. Orienting the missing edges west to
east turns it into a boundary-channeled map: every boundary vertex other
than the source and the sink has exactly one incoming edge.

Maps handled by apply_phi carry no missing edges and are rooted at the first
lower-right edge, so their left side is the upper-left segment and their
right side the lower-right one.
"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from opentelemetry import trace

from src.config import CHANNELED_EXACT_CUTOFF, DEFAULT_MAX_ATTEMPTS
from src.errors import (
    CapExceededError,
    MalformedMapError,
    PreconditionError,
    RejectionBudgetError,
)
from src.kmsw.builder import build
from src.maps.boundary import boundary_segments
from src.maps.faces import linearize_rotations
from src.maps.validation import validate
from src.models.planar_map import BoundarySegments, OrientedMap
from src.models.walk import INCREMENTS, Walk
from src.walks.rng import SeedLike, make_rng

logger = logging.getLogger("samplers_logger")
tracer = trace.get_tracer(__name__)

CHANNELED_MODES = ("exact-small", "rejection")


def _can_finish(x: int, y: int, remaining: int) -> bool:
    # a A's, b B's, c C's with a - b = -x, c - a = -y: remaining = 3c + 2y + x
    slack = remaining - x - 2 * y
    return slack >= 0 and slack % 3 == 0


def channeled_walks(l: int, n: int) -> Iterator[Walk]:
    """All walks with n steps from (l - 1, 0) to (0, 0) in the quadrant,
    in lexicographic order of their step codes."""
    if l < 1 or n < 0:
        raise ValueError("need l >= 1 and n >= 0")
    codes: List[int] = []

    def extend(x: int, y: int) -> Iterator[Walk]:
        remaining = n - len(codes)
        if remaining == 0:
            yield Walk(start=(l - 1, 0), steps=list(codes))
            return
        for code in range(3):
            nx_, ny_ = x + int(INCREMENTS[code, 0]), y + int(INCREMENTS[code, 1])
            if nx_ < 0 or ny_ < 0 or not _can_finish(nx_, ny_, remaining - 1):
                continue
            codes.append(code)
            yield from extend(nx_, ny_)
            codes.pop()

    if _can_finish(l - 1, 0, n):
        yield from extend(l - 1, 0)


def _bridge_counts(l: int, n: int) -> Optional[Tuple[int, int, int]]:
    """(#A, #B, #C) of any n-step walk from (l - 1, 0) to (0, 0)."""
    if not _can_finish(l - 1, 0, n):
        return None
    c = (n - (l - 1)) // 3
    return c, c + l - 1, c


def _in_quadrant(codes: np.ndarray, l: int) -> bool:
    path = np.cumsum(INCREMENTS[codes], axis=0)
    return bool((path[:, 0] >= -(l - 1)).all() and (path[:, 1] >= 0).all())


def _rejection_walk(
    l: int, n: int, rng: np.random.Generator, max_attempts: int
) -> Tuple[Walk, int]:
    counts = _bridge_counts(l, n)
    if counts is None:
        raise PreconditionError(f"no walk with {n} steps joins ({l - 1}, 0) to (0, 0)")
    base = np.repeat(np.arange(3, dtype=np.int8), counts)
    for attempt in range(1, max_attempts + 1):
        # a uniform bridge, kept only when it stays in the quadrant
        codes = rng.permutation(base)
        if _in_quadrant(codes, l):
            return Walk(start=(l - 1, 0), steps=codes), attempt
    raise RejectionBudgetError(
        f"no quadrant bridge for l={l}, n={n} in {max_attempts} attempts"
    )


def sample_channeled_walk(
    l: int,
    n: int,
    seed: SeedLike,
    mode: Optional[str] = None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Walk:
    """Uniform walk with n steps from (l - 1, 0) to (0, 0) in the quadrant.

    mode defaults to exact enumeration up to CHANNELED_EXACT_CUTOFF steps and
    rejection from uniform bridges beyond.
    """
    if l < 1 or n < 1:
        raise ValueError("need l >= 1 and n >= 1")
    if mode is None:
        mode = "exact-small" if n <= CHANNELED_EXACT_CUTOFF else "rejection"
    if mode not in CHANNELED_MODES:
        raise ValueError(f"Unknown channeled sampling mode '{mode}'")
    rng = make_rng(seed)
    if mode == "rejection":
        walk, attempts = _rejection_walk(l, n, rng, max_attempts)
        logger.debug(f"Channeled bridge l={l}, n={n} accepted after {attempts} attempts")
        return walk
    if n > CHANNELED_EXACT_CUTOFF:
        raise CapExceededError(
            f"exact enumeration is capped at {CHANNELED_EXACT_CUTOFF} steps, got {n}"
        )
    walks = list(channeled_walks(l, n))
    if not walks:
        raise PreconditionError(f"no walk with {n} steps joins ({l - 1}, 0) to (0, 0)")
    return walks[int(rng.integers(0, len(walks)))]


def sample_boundary_channeled(
    l: int,
    n: int,
    seed: SeedLike,
    mode: Optional[str] = None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> OrientedMap:
    """Built map of a uniform channeled walk, lower-left edges still missing."""
    with tracer.start_as_current_span(
        "sample_boundary_channeled", kind=trace.SpanKind.INTERNAL
    ) as span:
        span.set_attribute("channeled.l", l)
        span.set_attribute("channeled.steps", n)
        return build(sample_channeled_walk(l, n, seed, mode, max_attempts))


def _relinked(
    map_: OrientedMap, tails: np.ndarray, heads: np.ndarray, root: int
) -> OrientedMap:
    rotations = linearize_rotations(tails, heads, map_.rotations, root)
    return OrientedMap(
        tails=tails,
        heads=heads,
        missing=np.zeros(map_.edge_count, dtype=bool),
        rotations=rotations,
        root_edge=root,
    )


def reroot(map_: OrientedMap, edge: int) -> OrientedMap:
    """Same map rooted at `edge`, rotations cut again for the new root."""
    if not 0 <= edge < map_.edge_count or map_.missing[edge]:
        raise PreconditionError(f"edge {edge} cannot serve as a root")
    rotations = linearize_rotations(map_.tails, map_.heads, map_.rotations, edge)
    return OrientedMap(
        tails=map_.tails,
        heads=map_.heads,
        missing=map_.missing,
        rotations=rotations,
        root_edge=edge,
    )


def orient_missing_edges(map_: OrientedMap) -> OrientedMap:
    """Orient every missing edge west to east and root the map at the
    westmost lower boundary edge."""
    segments = map_.segments or boundary_segments(map_)
    if segments.upper_right:
        raise PreconditionError("missing upper-right edges cannot be channeled")
    lower = segments.lower_left + segments.lower_right
    return _relinked(map_, map_.tails.copy(), map_.heads.copy(), lower[0])


def _sides(map_: OrientedMap) -> BoundarySegments:
    if map_.missing.any():
        raise PreconditionError("the map still has missing edges")
    try:
        segments = boundary_segments(map_)
    except MalformedMapError as exc:
        raise PreconditionError(str(exc)) from exc
    if segments.lower_left or segments.upper_right:
        raise PreconditionError("the root must open the right side at the source")
    return segments


def _side_vertices(map_: OrientedMap, edges: Sequence[int]) -> List[int]:
    return [int(map_.tails[edges[0]])] + [int(map_.heads[e]) for e in edges]


def is_boundary_channeled(map_: OrientedMap) -> bool:
    """True when the map is a valid bipolar triangulation in which every
    boundary vertex except the source and the sink has one incoming edge."""
    try:
        segments = _sides(map_)
    except PreconditionError:
        return False
    if not validate(map_).valid:
        return False
    left = _side_vertices(map_, segments.upper_left)
    right = _side_vertices(map_, segments.lower_right)
    if left[0] != right[0] or left[-1] != right[-1]:
        return False
    interior = set(left[1:-1]) | set(right[1:-1])
    return all(len(map_.in_edges[v]) == 1 for v in interior)


def _reverse_prefix(
    map_: OrientedMap, edges: Sequence[int], new_root: int
) -> OrientedMap:
    tails = map_.tails.copy()
    heads = map_.heads.copy()
    idx = np.asarray(edges, dtype=np.int64)
    tails[idx], heads[idx] = map_.heads[idx], map_.tails[idx]
    return _relinked(map_, tails, heads, new_root)


def _require_channeled(map_: OrientedMap) -> BoundarySegments:
    segments = _sides(map_)
    if not is_boundary_channeled(map_):
        raise PreconditionError("the map is not boundary-channeled")
    return segments


def apply_phi(map_: OrientedMap, k: int) -> OrientedMap:
    """Reverse the first k right-boundary edges; (l, r) -> (l + k, r - k)."""
    right = _require_channeled(map_).lower_right
    if not 1 <= k <= len(right) - 1:
        raise PreconditionError(f"k must lie in [1, {len(right) - 1}], got {k}")
    return _reverse_prefix(map_, right[:k], right[k])


def apply_phi_inverse(map_: OrientedMap, k: int) -> OrientedMap:
    """Reverse the first k left-boundary edges; (l, r) -> (l - k, r + k)."""
    left = _require_channeled(map_).upper_left
    if not 1 <= k <= len(left) - 1:
        raise PreconditionError(f"k must lie in [1, {len(left) - 1}], got {k}")
    return _reverse_prefix(map_, left[:k], left[k - 1])


def side_lengths(map_: OrientedMap) -> Tuple[int, int]:
    """(left, right) boundary lengths of a fully oriented rooted map."""
    segments = _sides(map_)
    return len(segments.upper_left), len(segments.lower_right)
