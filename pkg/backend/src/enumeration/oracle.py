"""
Brute-force geodesics: every directed path is listed, so the result does not
depend on the DP fields it is used to check.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.config import DEFAULT_PATH_EDGE_CAP
from src.errors import CapExceededError, UnreachableError
from src.maps.paths import is_weakly_right
from src.models.distances import Mode
from src.models.planar_map import OrientedMap

Path = Tuple[int, ...]


@dataclass(frozen=True)
class GeodesicOracle:
    """All optimal src -> dst paths; `leftmost` is the geodesic every other
    one lies weakly right of, None when no single path dominates."""

    mode: Mode
    length: int
    geodesics: Tuple[Path, ...]
    leftmost: Optional[Path]
    dominating: int


def all_directed_paths(map_: OrientedMap, src: int, dst: int) -> Iterator[Path]:
    """Every directed path from src to dst, depth first in rotation order."""
    if src == dst:
        yield ()
        return
    path: List[int] = []

    def extend(v: int) -> Iterator[Path]:
        for e in map_.out_edges[v]:
            w = int(map_.heads[e])
            path.append(e)
            if w == dst:
                yield tuple(path)
            else:
                yield from extend(w)
            path.pop()

    yield from extend(src)


def brute_force_geodesics(
    map_: OrientedMap,
    mode: Mode,
    src: int,
    dst: int,
    edge_cap: int = DEFAULT_PATH_EDGE_CAP,
) -> GeodesicOracle:
    mode = Mode.parse(mode)
    if map_.edge_count > edge_cap:
        raise CapExceededError(
            f"path enumeration is capped at {edge_cap} edges, map has {map_.edge_count}"
        )
    paths = list(all_directed_paths(map_, src, dst))
    if not paths:
        raise UnreachableError(f"vertex {dst} is not reachable from {src}")
    pick = max if mode is Mode.LDP else min
    length = pick(len(p) for p in paths)
    geodesics = tuple(p for p in paths if len(p) == length)
    dominating = [
        p for p in geodesics if all(is_weakly_right(map_, p, q) for q in geodesics)
    ]
    return GeodesicOracle(
        mode=mode,
        length=length,
        geodesics=geodesics,
        leftmost=dominating[0] if dominating else None,
        dominating=len(dominating),
    )
