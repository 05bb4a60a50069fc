"""
Planar map operations: faces, validation, boundaries, directed paths,
isomorphism and submaps.
"""

from .boundary import (
    boundary_indexing,
    boundary_segments,
    east_end,
    lower_boundary_vertices,
    lower_right_vertices,
    upper_boundary_vertices,
    upper_left_vertices,
)
from .faces import FaceSet, external_face, faces, linearize_rotations
from .isomorphism import canonical_form, canonicalize, isomorphic
from .paths import (
    is_weakly_right,
    leftmost_directed_path,
    path_vertices,
    rightmost_directed_path,
)
from .submaps import cut_vertices, reachable_submap, strip_missing
from .validation import validate

__all__ = [
    "FaceSet",
    "boundary_indexing",
    "boundary_segments",
    "canonical_form",
    "canonicalize",
    "cut_vertices",
    "east_end",
    "external_face",
    "faces",
    "is_weakly_right",
    "isomorphic",
    "leftmost_directed_path",
    "linearize_rotations",
    "lower_boundary_vertices",
    "lower_right_vertices",
    "path_vertices",
    "reachable_submap",
    "rightmost_directed_path",
    "strip_missing",
    "upper_boundary_vertices",
    "upper_left_vertices",
    "validate",
]
