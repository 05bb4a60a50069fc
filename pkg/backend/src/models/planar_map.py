"""
Planar map types.

An OrientedMap stores flat edge arrays and one rotation list per vertex.
Rotations are counterclockwise; each list is stored linearized so that it
starts at the rightmost outgoing edge: oriented outgoing edges come first
(right to left), then oriented incoming edges (left to right). At vertices
lacking one of the two blocks the list is cut at the external-face angle.
Missing edges keep their geometric position and are stored west to east
(tail = west endpoint).
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np


def _frozen_int_array(values, dtype=np.int64) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class BoundarySegments:
    """The four boundary segments as edge-id tuples in west-to-east order."""

    upper_left: Tuple[int, ...]
    lower_left: Tuple[int, ...]
    lower_right: Tuple[int, ...]
    upper_right: Tuple[int, ...]

    def lengths(self) -> Tuple[int, int, int, int]:
        """(UL, LL, LR, UR) counts."""
        return (
            len(self.upper_left),
            len(self.lower_left),
            len(self.lower_right),
            len(self.upper_right),
        )


@dataclass(frozen=True)
class BoundaryIndexing:
    """Signed index k -> boundary vertex x_k, x_0/x_1 = root tail/head."""

    vertices: Dict[int, int]

    def __getitem__(self, k: int) -> int:
        return self.vertices[k]

    def __contains__(self, k: int) -> bool:
        return k in self.vertices

    @property
    def k_min(self) -> int:
        return min(self.vertices)

    @property
    def k_max(self) -> int:
        return max(self.vertices)

    def covers(self, k_low: int, k_high: int) -> bool:
        return all(k in self.vertices for k in range(k_low, k_high + 1))


@dataclass(frozen=True, eq=False)
class OrientedMap:
    """Planar map with oriented edges and unoriented missing boundary edges."""

    tails: np.ndarray
    heads: np.ndarray
    missing: np.ndarray
    rotations: Tuple[Tuple[int, ...], ...]
    root_edge: Optional[int]
    active_trace: Optional[np.ndarray] = None
    segments: Optional[BoundarySegments] = None
    creation_times: Optional[np.ndarray] = None

    def __post_init__(self):
        object.__setattr__(self, "tails", _frozen_int_array(self.tails))
        object.__setattr__(self, "heads", _frozen_int_array(self.heads))
        object.__setattr__(self, "missing", _frozen_int_array(self.missing, bool))
        object.__setattr__(
            self, "rotations", tuple(tuple(int(e) for e in r) for r in self.rotations)
        )
        if self.active_trace is not None:
            object.__setattr__(
                self, "active_trace", _frozen_int_array(self.active_trace)
            )
        if self.creation_times is not None:
            object.__setattr__(
                self, "creation_times", _frozen_int_array(self.creation_times)
            )
        if not (self.tails.shape == self.heads.shape == self.missing.shape):
            raise ValueError("tails, heads and missing must have equal length")
        if self.root_edge is not None and not 0 <= self.root_edge < self.edge_count:
            raise ValueError(f"root_edge {self.root_edge} is not an edge id")
        if self.root_edge is not None and self.missing[self.root_edge]:
            raise ValueError("the root edge must be oriented")

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return int(self.tails.size)

    @property
    def oriented_edge_count(self) -> int:
        return int(self.edge_count - self.missing.sum())

    @property
    def missing_edge_count(self) -> int:
        return int(self.missing.sum())

    @property
    def root_tail(self) -> int:
        if self.root_edge is None:
            return 0
        return int(self.tails[self.root_edge])

    @property
    def root_head(self) -> int:
        if self.root_edge is None:
            return 0
        return int(self.heads[self.root_edge])

    def other_end(self, edge: int, vertex: int) -> int:
        tail = int(self.tails[edge])
        return int(self.heads[edge]) if tail == vertex else tail

    @cached_property
    def out_edges(self) -> Tuple[Tuple[int, ...], ...]:
        """Oriented outgoing edges per vertex, rightmost first."""
        return tuple(
            tuple(e for e in rot if not self.missing[e] and self.tails[e] == v)
            for v, rot in enumerate(self.rotations)
        )

    @cached_property
    def in_edges(self) -> Tuple[Tuple[int, ...], ...]:
        """Oriented incoming edges per vertex, leftmost first."""
        return tuple(
            tuple(e for e in rot if not self.missing[e] and self.heads[e] == v)
            for v, rot in enumerate(self.rotations)
        )

    @cached_property
    def successors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(self.heads[e]) for e in outs) for outs in self.out_edges)

    @cached_property
    def predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(self.tails[e]) for e in ins) for ins in self.in_edges)

    @cached_property
    def rotation_index(self) -> Tuple[np.ndarray, np.ndarray]:
        """Positions of each edge inside the rotation of its tail and head."""
        at_tail = np.full(self.edge_count, -1, dtype=np.int64)
        at_head = np.full(self.edge_count, -1, dtype=np.int64)
        for v, rot in enumerate(self.rotations):
            for i, e in enumerate(rot):
                if self.tails[e] == v:
                    at_tail[e] = i
                else:
                    at_head[e] = i
        return at_tail, at_head

    def position_at(self, edge: int, vertex: int) -> int:
        at_tail, at_head = self.rotation_index
        return int(at_tail[edge] if self.tails[edge] == vertex else at_head[edge])

    def sources(self) -> List[int]:
        return [v for v in range(self.vertex_count) if not self.in_edges[v]]

    def sinks(self) -> List[int]:
        return [v for v in range(self.vertex_count) if not self.out_edges[v]]

    def oriented_edges(self) -> List[int]:
        return [e for e in range(self.edge_count) if not self.missing[e]]

    def edge(self, e: int) -> Tuple[int, int, bool]:
        return int(self.tails[e]), int(self.heads[e]), bool(self.missing[e])

    def with_root(self, root_edge: int) -> "OrientedMap":
        return OrientedMap(
            tails=self.tails,
            heads=self.heads,
            missing=self.missing,
            rotations=self.rotations,
            root_edge=root_edge,
        )


@dataclass(frozen=True)
class Violation:
    """One violated invariant; witness lists the offending ids."""

    kind: str
    message: str
    witness: Tuple[int, ...] = ()


@dataclass
class ValidationReport:
    """Outcome of validate(); violations are content, not failures."""

    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def to_dict(self) -> Dict[str, object]:
        return {
            "valid": self.valid,
            "violations": [
                {"kind": v.kind, "message": v.message, "witness": list(v.witness)}
                for v in self.violations
            ],
        }


@dataclass(frozen=True, eq=False)
class MapWindow:
    """A finite window of an infinite map model.

    `frontier` holds the vertices whose neighbourhood can still grow in the
    infinite map; paths touching them are not trusted.
    """

    map: OrientedMap
    indexing: BoundaryIndexing
    frontier: FrozenSet[int]
    model: str
    steps: int
    origin: int = 0
