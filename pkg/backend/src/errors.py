"""
Exception hierarchy for the bipolar map toolkit.

Plain argument mistakes raise ValueError (several classes below also derive
from it so callers catching ValueError keep working).
"""

from typing import List, Optional


class BipolarMapError(Exception):
    """Root of every error raised by this package."""


class InvalidWalkError(BipolarMapError, ValueError):
    """A step tag or lattice increment outside the allowed set."""


class MalformedMapError(BipolarMapError):
    """A map whose structure cannot support the requested operation."""


class CycleError(MalformedMapError):
    """The oriented edges contain a directed cycle."""

    def __init__(self, message: str, witness: List[int]):
        super().__init__(message)
        self.witness = witness


class NotBipolarError(MalformedMapError):
    """The map is not a bipolar-oriented triangulation without missing edges."""


class UnreachableError(BipolarMapError):
    """No directed path joins the requested vertices."""


class NotCoalescedError(BipolarMapError):
    """Leftmost geodesics did not merge inside the window."""


class NotStabilizedError(BipolarMapError):
    """A Busemann estimate did not stabilize before the maximal window."""

    def __init__(self, message: str, window: int):
        super().__init__(message)
        self.window = window


class CensoringThresholdError(BipolarMapError):
    """Too many replicas of a batch were censored."""

    def __init__(self, message: str, censored: int, total: int):
        super().__init__(message)
        self.censored = censored
        self.total = total


class CapExceededError(BipolarMapError, ValueError):
    """An exhaustive enumeration was asked to exceed its size cap."""


class RejectionBudgetError(BipolarMapError):
    """A rejection sampler ran out of attempts."""


class PreconditionError(BipolarMapError, ValueError):
    """An operation was applied outside its domain."""


class InsufficientDataError(BipolarMapError):
    """An estimator does not have enough data for the requested fit."""


class FormatError(BipolarMapError):
    """A file could not be parsed; `field` names the offending entry."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class FormatVersionError(FormatError):
    """A file declares a format version this package does not read."""
