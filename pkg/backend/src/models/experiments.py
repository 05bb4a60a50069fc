"""
Report models for experiments and verification suites.

These are pydantic models so reports serialize with a fixed field order and
can be validated when loaded back.
"""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

REPORT_SCHEMA_VERSION = 1


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


class Acceptance(BaseModel):
    """How an estimate is judged.

    kind "interval": lower <= value <= upper.
    kind "zscore": |value - expected| <= z * se.
    kind "positive": value - z * se > 0.
    kind "minimum": value >= lower.
    kind "none": informational only.
    """

    kind: Literal["interval", "zscore", "positive", "minimum", "none"]
    expected: Optional[float] = None
    lower: Optional[float] = None
    upper: Optional[float] = None
    z: Optional[float] = None

    def judge(self, value: float, se: Optional[float]) -> Verdict:
        if self.kind == "none":
            return Verdict.INFO
        if self.kind == "interval":
            ok = self.lower <= value <= self.upper
        elif self.kind == "minimum":
            ok = value >= self.lower
        elif self.kind == "zscore":
            ok = abs(value - self.expected) <= self.z * (se or 0.0)
        else:
            ok = value - self.z * (se or 0.0) > 0
        return Verdict.PASS if ok else Verdict.FAIL


class Estimate(BaseModel):
    """A point estimate with its uncertainty and the rule it is judged by."""

    name: str
    value: float
    se: Optional[float] = None
    acceptance: Acceptance = Field(default_factory=lambda: Acceptance(kind="none"))
    verdict: Verdict = Verdict.INFO
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _derive_verdict(self) -> "Estimate":
        self.verdict = self.acceptance.judge(self.value, self.se)
        return self


class TailFit(BaseModel):
    """A fitted tail exponent nu (P[X > x] ~ x^-nu)."""

    estimator: Literal["hill", "rank-regression"]
    exponent: float
    se: float
    fitting_range: Tuple[float, float]
    sample_count: int
    tail_count: int

    @model_validator(mode="after")
    def _check(self) -> "TailFit":
        low, high = self.fitting_range
        if not low < high:
            raise ValueError("fitting range must be nonempty")
        if self.exponent != self.exponent or self.exponent in (
            float("inf"),
            float("-inf"),
        ):
            raise ValueError("fitted exponent must be finite")
        return self


class CensoringStats(BaseModel):
    total: int = 0
    censored: int = 0
    max_window: Optional[int] = None
    sensitivity: Dict[str, float] = Field(default_factory=dict)

    @property
    def rate(self) -> float:
        return self.censored / self.total if self.total else 0.0


class ExperimentReport(BaseModel):
    """Everything needed to judge and re-run one experiment."""

    schema_version: int = REPORT_SCHEMA_VERSION
    name: str
    mode: Optional[str] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)
    master_seed: int
    tolerances_version: str
    estimates: List[Estimate] = Field(default_factory=list)
    tail_fits: List[TailFit] = Field(default_factory=list)
    tables: Dict[str, List[Dict[str, Any]]] = Field(default_factory=dict)
    censoring: CensoringStats = Field(default_factory=CensoringStats)
    wall_clock_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(e.verdict != Verdict.FAIL for e in self.estimates)

    def estimate(self, name: str) -> Estimate:
        for est in self.estimates:
            if est.name == name:
                return est
        raise KeyError(name)


class SuiteResult(BaseModel):
    """Outcome of one exact verification suite."""

    schema_version: int = REPORT_SCHEMA_VERSION
    suite: str
    passed: bool
    checked: int
    failures: List[str] = Field(default_factory=list)
    parameters: Dict[str, Any] = Field(default_factory=dict)
