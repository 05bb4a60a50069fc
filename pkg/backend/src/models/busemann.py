"""
Busemann profile and cut-event types.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .distances import Mode


@dataclass(frozen=True)
class BusemannProfile:
    """Estimated X(k) for k in [-K, K]; `values[i]` holds X(i - K).

    Half-plane profiles (model "uibhbot") are centred on an interior boundary
    vertex and carry no sign constraint.
    """

    mode: Mode
    K: int
    values: Tuple[int, ...]
    window: int
    probes: int
    stabilized: bool = True
    probe_vertex: Optional[int] = None
    model: str = "uibot"

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be at least 1")
        if len(self.values) != 2 * self.K + 1:
            raise ValueError(f"expected {2 * self.K + 1} values, got {len(self.values)}")
        if self.values[self.K] != 0:
            raise ValueError("a Busemann profile must satisfy X(0) = 0")
        if self.model != "uibot":
            return
        # Sign constraints hold on the lower boundary of the whole-plane model
        for k in range(1, self.K + 1):
            step = self[k] - self[k - 1]
            if self.mode is Mode.LDP and step > -1:
                raise ValueError(f"LDP increment X({k}) - X({k - 1}) = {step} > -1")
            if self.mode is Mode.SDP and step < -1:
                raise ValueError(f"SDP increment X({k}) - X({k - 1}) = {step} < -1")

    def __getitem__(self, k: int) -> int:
        if not -self.K <= k <= self.K:
            raise KeyError(k)
        return self.values[k + self.K]

    def as_dict(self) -> Dict[int, int]:
        return {k: self[k] for k in range(-self.K, self.K + 1)}

    def increments(self) -> List[int]:
        """X(k) - X(k-1) for k = -K+1, ..., K."""
        return [self[k] - self[k - 1] for k in range(-self.K + 1, self.K + 1)]

    @property
    def positive_increment(self) -> int:
        return self[1] - self[0]

    @property
    def negative_increment(self) -> int:
        return self[0] - self[-1]


@dataclass(frozen=True)
class CutEvent:
    """A time n where the right coordinate hits a strict running minimum and
    the left coordinate never returns below its value over the verified band."""

    time: int
    level: int
    guard_verified: int
