"""
Lattice walks over the three-step alphabet.

Steps are stored as int8 codes (A=0, B=1, C=2); positions are recomputed
from the codes when needed and cached on the (immutable) walk.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import InvalidWalkError


class Step(Enum):
    """One of the three walk steps, valued by its text tag."""

    A = "a"
    B = "b"
    C = "c"

    @property
    def code(self) -> int:
        return _CODES[self]

    @property
    def increment(self) -> Tuple[int, int]:
        return _INCREMENTS[self]

    @classmethod
    def from_code(cls, code: int) -> "Step":
        return _BY_CODE[int(code)]

    @classmethod
    def from_increment(cls, dl: int, dr: int) -> "Step":
        for step, inc in _INCREMENTS.items():
            if inc == (dl, dr):
                return step
        raise InvalidWalkError(f"Increment ({dl}, {dr}) is not a walk step")


_CODES = {Step.A: 0, Step.B: 1, Step.C: 2}
_BY_CODE = {code: step for step, code in _CODES.items()}
_INCREMENTS = {Step.A: (1, -1), Step.B: (-1, 0), Step.C: (0, 1)}

# Row i holds the (L, R) increment of step code i
INCREMENTS = np.array([[1, -1], [-1, 0], [0, 1]], dtype=np.int64)
# First-coordinate increment +1 / -1 / 0 maps to step code A / B / C
LEVEL_TO_CODE = {1: 0, -1: 1, 0: 2}


def _as_codes(steps) -> np.ndarray:
    if isinstance(steps, np.ndarray):
        codes = steps.astype(np.int8, copy=True)
    else:
        items = list(steps)
        codes = np.array(
            [s.code if isinstance(s, Step) else int(s) for s in items],
            dtype=np.int8,
        )
    if codes.ndim != 1:
        raise InvalidWalkError("Step codes must form a one-dimensional array")
    if codes.size and (codes.min() < 0 or codes.max() > 2):
        raise InvalidWalkError("Step codes must lie in {0, 1, 2}")
    codes.setflags(write=False)
    return codes


@dataclass(frozen=True, eq=False)
class Walk:
    """A start lattice point plus a finite step sequence."""

    start: Tuple[int, int] = (0, 0)
    steps: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int8))

    def __post_init__(self):
        object.__setattr__(self, "start", (int(self.start[0]), int(self.start[1])))
        object.__setattr__(self, "steps", _as_codes(self.steps))

    @classmethod
    def from_steps(
        cls, steps: Iterable[Step], start: Tuple[int, int] = (0, 0)
    ) -> "Walk":
        return cls(start=start, steps=list(steps))

    @classmethod
    def from_tags(cls, tags: str, start: Tuple[int, int] = (0, 0)) -> "Walk":
        """Parse a string over {a, b, c} (case-insensitive)."""
        try:
            return cls(start=start, steps=[Step(ch) for ch in tags.strip().lower()])
        except ValueError as exc:
            raise InvalidWalkError(f"Walk tags must use a/b/c only: {exc}") from exc

    @property
    def length(self) -> int:
        return int(self.steps.size)

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[Step]:
        return (Step.from_code(c) for c in self.steps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Walk):
            return NotImplemented
        return self.start == other.start and np.array_equal(self.steps, other.steps)

    def __hash__(self) -> int:
        return hash((self.start, self.steps.tobytes()))

    def __repr__(self) -> str:
        tags = self.tags()
        shown = tags if len(tags) <= 40 else tags[:37] + "..."
        return f"Walk(start={self.start}, steps='{shown}', length={self.length})"

    def tags(self) -> str:
        return "".join("abc"[c] for c in self.steps)

    def step(self, index: int) -> Step:
        return Step.from_code(self.steps[index])

    @cached_property
    def positions(self) -> np.ndarray:
        """(length+1, 2) array of lattice positions, row 0 = start."""
        out = np.empty((self.length + 1, 2), dtype=np.int64)
        out[0] = self.start
        if self.length:
            out[1:] = self.start + np.cumsum(INCREMENTS[self.steps], axis=0)
        out.setflags(write=False)
        return out

    @property
    def first_coordinate(self) -> np.ndarray:
        return self.positions[:, 0]

    @property
    def second_coordinate(self) -> np.ndarray:
        return self.positions[:, 1]

    def position(self, j: int) -> Tuple[int, int]:
        row = self.positions[j]
        return int(row[0]), int(row[1])

    @property
    def end(self) -> Tuple[int, int]:
        return self.position(self.length)

    def prefix(self, n: int) -> "Walk":
        return Walk(start=self.start, steps=self.steps[:n])

    def suffix(self, n: int) -> "Walk":
        """The walk of steps n, n+1, ... started from position(n)."""
        return Walk(start=self.position(n), steps=self.steps[n:])

    def rebased(self) -> "Walk":
        """Same steps started from (0, 0)."""
        return Walk(start=(0, 0), steps=self.steps)

    def concat(self, other: "Walk") -> "Walk":
        return Walk(start=self.start, steps=np.concatenate([self.steps, other.steps]))


@dataclass(frozen=True)
class StoppingTimeSet:
    """Boundary hit times tau_k keyed by the signed level index k."""

    times: Dict[int, Optional[int]]

    def __getitem__(self, k: int) -> Optional[int]:
        return self.times[k]

    def hit(self, k: int) -> bool:
        return self.times.get(k) is not None


@dataclass(frozen=True)
class QuadrantTimes:
    """Alternating decomposition times N_1^R=0 < N_1^L < N_2^R < ...

    `open_end` is True when the last interval is cut off by the end of the
    walk rather than closed by the next time.
    """

    right_times: Tuple[int, ...]
    left_times: Tuple[int, ...]
    open_end: bool

    def ordered(self) -> List[Tuple[str, int]]:
        """Times in increasing order tagged "R" or "L"."""
        out: List[Tuple[str, int]] = []
        for i, r in enumerate(self.right_times):
            out.append(("R", r))
            if i < len(self.left_times):
                out.append(("L", self.left_times[i]))
        return out


@dataclass(frozen=True, eq=False)
class HalfPlaneWalk:
    """A UIBHBOT walk: steps plus the index of time 0 inside them.

    `origin` is the number of negative-time steps; `segment_ends` lists the
    step counts at which each negative segment finishes.
    """

    walk: Walk
    origin: int
    segment_ends: Tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= self.origin <= self.walk.length:
            raise ValueError("origin must lie within the walk")

    @property
    def negative_steps(self) -> Walk:
        return self.walk.prefix(self.origin)

    @property
    def positive_steps(self) -> Walk:
        return self.walk.suffix(self.origin).rebased()

    def levels(self) -> np.ndarray:
        """First coordinate indexed so that entry `origin` is time 0 (value 0)."""
        first = self.walk.first_coordinate
        return first - first[self.origin]


def walk_from_levels(levels: Sequence[int], start_second: int = 0) -> Walk:
    """Walk whose first coordinate follows `levels` (increments +1/-1/0)."""
    arr = np.asarray(levels, dtype=np.int64)
    diffs = np.diff(arr)
    if diffs.size and (diffs.min() < -1 or diffs.max() > 1):
        raise InvalidWalkError("Level increments must lie in {-1, 0, 1}")
    codes = np.choose(diffs + 1, [1, 2, 0]).astype(np.int8)
    start = (int(arr[0]) if arr.size else 0, start_second)
    return Walk(start=start, steps=codes)
