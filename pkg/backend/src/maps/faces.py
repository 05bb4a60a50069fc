"""
Faces of a planar map, traced from the rotation system.

A dart is an edge with a direction of travel: dart 2e runs tail -> head of
edge e and dart 2e + 1 runs head -> tail. The face on the left of a dart
arriving at v through edge e continues with the edge preceding e in the
counterclockwise rotation at v.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.models.planar_map import OrientedMap


def dart(edge: int, reverse: bool = False) -> int:
    return 2 * edge + int(reverse)


def dart_edge(d: int) -> int:
    return d >> 1


def dart_reversed(d: int) -> bool:
    return bool(d & 1)


def dart_ends(map_: OrientedMap, d: int) -> Tuple[int, int]:
    """(start, end) vertices of a dart."""
    e = d >> 1
    tail, head = int(map_.tails[e]), int(map_.heads[e])
    return (head, tail) if d & 1 else (tail, head)


def _successor_table(
    tails: np.ndarray, heads: np.ndarray, rotations: Sequence[Sequence[int]]
) -> np.ndarray:
    n_edges = tails.size
    at_tail = np.full(n_edges, -1, dtype=np.int64)
    at_head = np.full(n_edges, -1, dtype=np.int64)
    for v, rot in enumerate(rotations):
        for i, e in enumerate(rot):
            if tails[e] == v and at_tail[e] < 0:
                at_tail[e] = i
            else:
                at_head[e] = i
    nxt = np.empty(2 * n_edges, dtype=np.int64)
    for d in range(2 * n_edges):
        e = d >> 1
        if d & 1:
            v, pos = int(tails[e]), at_tail[e]
        else:
            v, pos = int(heads[e]), at_head[e]
        rot = rotations[v]
        f = rot[pos - 1]
        nxt[d] = 2 * f if tails[f] == v else 2 * f + 1
    return nxt


def next_darts(map_: OrientedMap) -> np.ndarray:
    """nxt[d] = the dart following d around the face on its left."""
    return _successor_table(map_.tails, map_.heads, map_.rotations)


@dataclass(frozen=True, eq=False)
class FaceSet:
    """All faces of a map: `cycles[f]` lists the darts of face f in order and
    `labels[d]` is the face on the left of dart d."""

    cycles: Tuple[Tuple[int, ...], ...]
    labels: np.ndarray
    external: Optional[int]

    def __len__(self) -> int:
        return len(self.cycles)

    def bounded(self) -> List[int]:
        return [f for f in range(len(self.cycles)) if f != self.external]


def _decompose(nxt: np.ndarray) -> Tuple[List[Tuple[int, ...]], np.ndarray]:
    labels = np.full(nxt.size, -1, dtype=np.int64)
    cycles: List[Tuple[int, ...]] = []
    for start in range(nxt.size):
        if labels[start] >= 0:
            continue
        cycle = []
        d = start
        while labels[d] < 0:
            labels[d] = len(cycles)
            cycle.append(d)
            d = int(nxt[d])
        cycles.append(tuple(cycle))
    return cycles, labels


def faces(map_: OrientedMap) -> FaceSet:
    cycles, labels = _decompose(next_darts(map_))
    external = None
    if map_.root_edge is not None:
        external = int(labels[dart(map_.root_edge, reverse=True)])
    return FaceSet(cycles=tuple(cycles), labels=labels, external=external)


def external_face(map_: OrientedMap) -> Tuple[int, ...]:
    """Darts of the external face, starting right after the reversed root."""
    if map_.root_edge is None:
        return ()
    nxt = next_darts(map_)
    start = dart(map_.root_edge, reverse=True)
    cycle = []
    d = int(nxt[start])
    while d != start:
        cycle.append(d)
        d = int(nxt[d])
    cycle.append(start)
    return tuple(cycle)


def linearize_rotations(
    tails: np.ndarray,
    heads: np.ndarray,
    rotations: Sequence[Sequence[int]],
    root_edge: Optional[int],
) -> Tuple[Tuple[int, ...], ...]:
    """Cut each cyclic rotation into the stored linear form.

    Edges count as outgoing at their tail (missing edges point west to east).
    Vertices with both kinds start right after the incoming-to-outgoing
    change; the others start at the edge through which the external face
    enters them.
    """
    tails = np.asarray(tails)
    heads = np.asarray(heads)
    entry = {}
    if root_edge is not None and tails.size:
        nxt = _successor_table(tails, heads, rotations)
        start = dart(root_edge, reverse=True)
        d = start
        while True:
            e = d >> 1
            end = int(tails[e]) if d & 1 else int(heads[e])
            entry.setdefault(end, e)
            d = int(nxt[d])
            if d == start:
                break
    out: List[Tuple[int, ...]] = []
    for v, rot in enumerate(rotations):
        rot = tuple(int(e) for e in rot)
        outgoing = [tails[e] == v for e in rot]
        cut = None
        if any(outgoing) and not all(outgoing):
            for i in range(len(rot)):
                if outgoing[i] and not outgoing[i - 1]:
                    cut = i
                    break
        elif v in entry:
            cut = rot.index(entry[v])
        out.append(rot[cut:] + rot[:cut] if cut else rot)
    return tuple(out)
