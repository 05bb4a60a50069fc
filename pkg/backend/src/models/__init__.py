"""
Model package initialization.
Export all models for easy importing.
"""

from .busemann import BusemannProfile, CutEvent
from .distances import (
    NO_PATH,
    UNREACHABLE,
    DistanceField,
    GeodesicSlice,
    Mode,
)
from .experiments import (
    Acceptance,
    CensoringStats,
    Estimate,
    ExperimentReport,
    SuiteResult,
    TailFit,
    Verdict,
)
from .planar_map import (
    BoundaryIndexing,
    BoundarySegments,
    MapWindow,
    OrientedMap,
    ValidationReport,
    Violation,
)
from .walk import HalfPlaneWalk, QuadrantTimes, Step, StoppingTimeSet, Walk

__all__ = [
    # Walks
    "Step",
    "Walk",
    "StoppingTimeSet",
    "QuadrantTimes",
    "HalfPlaneWalk",
    # Maps
    "OrientedMap",
    "BoundarySegments",
    "BoundaryIndexing",
    "MapWindow",
    "ValidationReport",
    "Violation",
    # Distances
    "Mode",
    "DistanceField",
    "GeodesicSlice",
    "UNREACHABLE",
    "NO_PATH",
    # Busemann
    "BusemannProfile",
    "CutEvent",
    # Reports
    "Acceptance",
    "Estimate",
    "TailFit",
    "CensoringStats",
    "ExperimentReport",
    "SuiteResult",
    "Verdict",
]
