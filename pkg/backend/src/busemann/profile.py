"""
Busemann profile estimation on growing windows.

For each boundary vertex x_k a pull-style DP computes XDP(x_k, v) together
with a touch flag: v is touched when it lies on the frontier or some optimal
predecessor is touched. Probes w are the vertices on the common suffix of the
rightmost directed paths from all x_k, below the frontier. The profile is
accepted once the last `probes` of them are untouched and agree on
D(k) = XDP(x_k, w) - XDP(x_base, w).
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from opentelemetry import trace

from src.config import DEFAULT_INITIAL_WINDOW, DEFAULT_MAX_WINDOW, DEFAULT_PROBES
from src.distances.dp import topological_order
from src.errors import NotStabilizedError
from src.maps.paths import path_vertices, rightmost_directed_path
from src.models.busemann import BusemannProfile
from src.models.distances import NO_PATH, Mode
from src.models.planar_map import MapWindow
from src.samplers.cells import sample_uibhbot_window, sample_uibot_window
from src.walks.rng import SeedLike

logger = logging.getLogger("busemann_logger")
tracer = trace.get_tracer(__name__)


def touch_field(
    window: MapWindow, mode: Mode, src: int
) -> Tuple[np.ndarray, np.ndarray]:
    """(XDP(src, v), touched(v)) for every vertex v of the window."""
    map_ = window.map
    frontier = window.frontier
    pick = max if mode is Mode.LDP else min
    dist = [NO_PATH] * map_.vertex_count
    touched = [False] * map_.vertex_count
    dist[src] = 0
    touched[src] = src in frontier
    predecessors = map_.predecessors
    started = False
    for v in topological_order(map_):
        if v == src:
            started = True
            continue
        if not started:
            continue
        reached = [u for u in predecessors[v] if dist[u] != NO_PATH]
        if not reached:
            continue
        best = pick(dist[u] for u in reached)
        dist[v] = best + 1
        touched[v] = v in frontier or any(touched[u] for u in reached if dist[u] == best)
    return np.asarray(dist, dtype=np.int64), np.asarray(touched, dtype=bool)


def _layout(window: MapWindow, K: int) -> Optional[Tuple[List[int], int]]:
    """Boundary indices feeding the profile and the index X is centred on."""
    if window.model == "uibot":
        # x_{-K-1} is the west end of the upper boundary until the window grows
        if not window.indexing.covers(-K - 1, K + 1):
            return None
        return list(range(-K, K + 1)), 0
    # half-plane: x^b_0 may still carry the active edge, so start at x^b_1
    if not window.indexing.covers(1, 2 * K + 1):
        return None
    return list(range(1, 2 * K + 2)), K + 1


def profile_sources(window: MapWindow, K: int) -> Tuple[List[int], int]:
    """Vertices x_k feeding the profile, west to east, and the position of
    the base vertex among them."""
    layout = _layout(window, K)
    if layout is None:
        raise NotStabilizedError(
            f"window of {window.steps} steps does not index the boundary for K={K}",
            window.steps,
        )
    indices, base = layout
    return [window.indexing[k] for k in indices], indices.index(base)


def probe_candidates(window: MapWindow, sources: Sequence[int]) -> List[int]:
    """Vertices shared by the rightmost directed paths from every source, in
    path order, up to the first frontier vertex.

    Rightmost paths are deterministic, so once they meet they coincide: the
    shared vertices form a common suffix of each path.
    """
    map_ = window.map
    paths = [
        path_vertices(map_, rightmost_directed_path(map_, x, map_.vertex_count), start=x)
        for x in sources
    ]
    on_others = [set(path) for path in paths[:-1]]
    east = paths[-1]
    merge = next(
        (i for i, v in enumerate(east) if all(v in seen for seen in on_others)),
        len(east),
    )
    candidates = []
    for w in east[merge:]:
        if w in window.frontier:
            break
        if w not in sources:
            candidates.append(w)
    return candidates


@dataclass(frozen=True)
class ProbeReading:
    """D(k) at one probe; `clean` when every x_k reaches it without touching
    the frontier."""

    vertex: int
    values: Tuple[int, ...]
    clean: bool


def settle_probes(readings: Sequence[ProbeReading], probes: int, steps: int) -> ProbeReading:
    """The last reading when the trailing `probes` readings are clean and
    agree; NotStabilizedError otherwise."""
    if len(readings) < probes:
        raise NotStabilizedError(
            f"only {len(readings)} probes on the common suffix in a window of {steps} steps",
            steps,
        )
    trailing = readings[-probes:]
    if not all(reading.clean for reading in trailing):
        raise NotStabilizedError(
            f"trailing probes touch the frontier in a window of {steps} steps", steps
        )
    if any(reading.values != trailing[0].values for reading in trailing):
        raise NotStabilizedError(
            f"probe values still moving in a window of {steps} steps", steps
        )
    return trailing[-1]


def profile_on_window(
    window: MapWindow, mode: Mode, K: int, probes: int = DEFAULT_PROBES
) -> BusemannProfile:
    """Profile of one window, or NotStabilizedError carrying its size."""
    mode = Mode.parse(mode)
    if K < 1 or probes < 2:
        raise ValueError("profile estimation needs K >= 1 and probes >= 2")
    sources, base_pos = profile_sources(window, K)
    candidates = probe_candidates(window, sources)
    fields = [touch_field(window, mode, x) for x in sources]
    readings = []
    for w in candidates:
        clean = all(dist[w] != NO_PATH and not touched[w] for dist, touched in fields)
        origin = int(fields[base_pos][0][w])
        values = tuple(int(dist[w]) - origin for dist, _ in fields)
        readings.append(ProbeReading(w, values, clean))
    settled = settle_probes(readings, probes, window.steps)
    return BusemannProfile(
        mode=mode,
        K=K,
        values=settled.values,
        window=window.steps,
        probes=probes,
        probe_vertex=settled.vertex,
        model=window.model,
    )


def window_builder(model: str, K: int, seed: SeedLike) -> Callable[[int], MapWindow]:
    """size -> window; successive sizes extend the same underlying walk."""
    if model == "uibot":
        return lambda size: sample_uibot_window(size, seed)
    if model == "uibhbot":
        return lambda size: sample_uibhbot_window(2 * K + 1, size, seed)
    raise ValueError(f"Unknown model '{model}', expected uibot or uibhbot")


def estimate_profile(
    mode: Mode,
    K: int,
    initial_window: int = DEFAULT_INITIAL_WINDOW,
    max_window: int = DEFAULT_MAX_WINDOW,
    probes: int = DEFAULT_PROBES,
    seed: SeedLike = 0,
    model: str = "uibot",
) -> BusemannProfile:
    """Double the window until the profile stabilizes or max_window is hit."""
    mode = Mode.parse(mode)
    if K < 1 or probes < 2:
        raise ValueError("profile estimation needs K >= 1 and probes >= 2")
    if initial_window < 1 or max_window < initial_window:
        raise ValueError("need 1 <= initial_window <= max_window")
    builder = window_builder(model, K, seed)
    with tracer.start_as_current_span("estimate_profile", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("mode", mode.value)
        span.set_attribute("profile.K", K)
        size = initial_window
        while True:
            try:
                profile = profile_on_window(builder(size), mode, K, probes)
                span.set_attribute("window.final", size)
                return profile
            except NotStabilizedError as exc:
                logger.debug(f"Window {size} not stabilized: {exc}")
                if size >= max_window:
                    raise NotStabilizedError(
                        f"profile did not stabilize up to window {max_window}", size
                    ) from exc
                size = min(2 * size, max_window)
