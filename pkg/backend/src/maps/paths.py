"""
Leftmost and rightmost directed paths, and the left/right dominance test
between directed paths.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from src.models.planar_map import OrientedMap


def _extreme_path(map_: OrientedMap, v: int, max_len: int, pick: int) -> Tuple[int, ...]:
    path = []
    while len(path) < max_len:
        outs = map_.out_edges[v]
        if not outs:
            break
        edge = outs[pick]
        path.append(edge)
        v = int(map_.heads[edge])
    return tuple(path)


def leftmost_directed_path(map_: OrientedMap, v: int, max_len: int) -> Tuple[int, ...]:
    """Follow the leftmost outgoing edge (the one next to the incoming block
    or the boundary) until a sink or max_len edges."""
    return _extreme_path(map_, v, max_len, -1)


def rightmost_directed_path(map_: OrientedMap, v: int, max_len: int) -> Tuple[int, ...]:
    return _extreme_path(map_, v, max_len, 0)


def path_vertices(
    map_: OrientedMap, path: Sequence[int], start: Optional[int] = None
) -> List[int]:
    """Vertices visited by a directed path; `start` for the empty path."""
    if not path:
        return [] if start is None else [start]
    return [int(map_.tails[path[0]])] + [int(map_.heads[e]) for e in path]


def _edges_at(
    map_: OrientedMap, path: Sequence[int]
) -> Dict[int, Tuple[Optional[int], Optional[int]]]:
    """vertex -> (incoming path edge, outgoing path edge)."""
    incoming = {int(map_.heads[e]): e for e in path}
    outgoing = {int(map_.tails[e]): e for e in path}
    return {v: (incoming.get(v), outgoing.get(v)) for v in {**incoming, **outgoing}}


def is_weakly_right(map_: OrientedMap, p: Sequence[int], q: Sequence[int]) -> bool:
    """True when the directed path q never leaves the closed region on the
    right of the directed path p.

    At every vertex the two paths share, the edges of q must lie on the right
    side of p: incoming edges no further left than p's incoming edge and
    outgoing edges no further left than p's outgoing edge. Rotation lists run
    outgoing right-to-left, then incoming left-to-right, so this compares
    list positions.
    """
    if not p or not q:
        return True
    around_p = _edges_at(map_, p)
    around_q = _edges_at(map_, q)
    for v, (q_in, q_out) in around_q.items():
        if v not in around_p:
            continue
        p_in, p_out = around_p[v]
        if q_out is not None and p_out is not None:
            if map_.position_at(q_out, v) > map_.position_at(p_out, v):
                return False
        if q_in is not None and p_in is not None:
            if map_.position_at(q_in, v) < map_.position_at(p_in, v):
                return False
    return True
