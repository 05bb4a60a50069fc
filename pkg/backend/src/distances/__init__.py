"""
Directed distances: DP fields, leftmost geodesics and geodesic slices.
"""

from .dp import (
    BoundarySdpStatistics,
    boundary_sdp_statistics,
    distance_field,
    distance_to_target,
    max_xdp,
    topological_order,
    xdp,
)
from .geodesics import (
    enclosed_faces,
    follow_leftmost,
    geodesic_slices,
    leftmost_geodesic,
    region_faces,
    slice_faces,
)

__all__ = [
    "BoundarySdpStatistics",
    "boundary_sdp_statistics",
    "distance_field",
    "distance_to_target",
    "enclosed_faces",
    "follow_leftmost",
    "geodesic_slices",
    "leftmost_geodesic",
    "max_xdp",
    "region_faces",
    "slice_faces",
    "topological_order",
    "xdp",
]
