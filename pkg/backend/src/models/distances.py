"""
Directed-distance types.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple, Union

import numpy as np


class Mode(Enum):
    """Longest (LDP) or shortest (SDP) directed path length."""

    LDP = "ldp"
    SDP = "sdp"

    @classmethod
    def parse(cls, value: Union[str, "Mode"]) -> "Mode":
        if isinstance(value, Mode):
            return value
        try:
            return cls(value.lower())
        except ValueError as exc:
            raise ValueError(f"Unknown mode '{value}', expected ldp or sdp") from exc


class _Unreachable:
    """Marker for vertex pairs without a directed path."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()
Length = Union[int, _Unreachable]

# Internal marker inside integer arrays
NO_PATH = -1


@dataclass(frozen=True, eq=False)
class DistanceField:
    """Optimal directed-path lengths from `source`; NO_PATH when unreachable."""

    source: int
    mode: Mode
    values: np.ndarray

    def __getitem__(self, v: int) -> Length:
        value = int(self.values[v])
        return UNREACHABLE if value == NO_PATH else value

    def __len__(self) -> int:
        return int(self.values.size)

    def reachable(self, v: int) -> bool:
        return int(self.values[v]) != NO_PATH

    def reachable_vertices(self) -> Iterator[int]:
        return (int(v) for v in np.flatnonzero(self.values != NO_PATH))


@dataclass(frozen=True)
class GeodesicSlice:
    """Region between consecutive leftmost geodesics up to their merge.

    `left_path` starts at x_{k-1} and `right_path` at x_k; theta_minus and
    theta count their edges before the merge vertex.
    """

    k: int
    left_path: Tuple[int, ...]
    right_path: Tuple[int, ...]
    theta_minus: int
    theta: int
    merge_vertex: int

    @property
    def increment(self) -> int:
        return self.theta - self.theta_minus
