"""
KMSW bijection between walks and bipolar-oriented triangulations.
"""

from .boundary import boundary_creation_check, boundary_lengths_from_walk
from .builder import BuilderState, build, build_state, extend, freeze, initial_state
from .inverse import contour_order, invert

__all__ = [
    "BuilderState",
    "boundary_creation_check",
    "boundary_lengths_from_walk",
    "build",
    "build_state",
    "contour_order",
    "extend",
    "freeze",
    "initial_state",
    "invert",
]
