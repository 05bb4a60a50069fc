"""
Exact small-instance oracles and the verification suites.
"""

from .channeled import (
    channeled_counts,
    channeled_maps,
    channeled_walk_check,
    phi_bijection_check,
)
from .cone import (
    QUADRANT,
    Cone,
    admissible_walks,
    boundary_classes,
    count_triangulations,
    enum_walks_in_cone,
    enumerate_maps,
    iter_walks_in_cone,
)
from .laws import WEIGHTINGS, exact_weighted_law, ruin_probability, total_mass
from .oracle import GeodesicOracle, all_directed_paths, brute_force_geodesics
from .suites import SUITES, run_suite

__all__ = [
    "QUADRANT",
    "SUITES",
    "WEIGHTINGS",
    "Cone",
    "GeodesicOracle",
    "admissible_walks",
    "all_directed_paths",
    "boundary_classes",
    "brute_force_geodesics",
    "channeled_counts",
    "channeled_maps",
    "channeled_walk_check",
    "count_triangulations",
    "enum_walks_in_cone",
    "enumerate_maps",
    "exact_weighted_law",
    "iter_walks_in_cone",
    "phi_bijection_check",
    "run_suite",
    "ruin_probability",
    "total_mass",
]
