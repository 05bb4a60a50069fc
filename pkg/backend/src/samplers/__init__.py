"""
Exact samplers for the random map models.
"""

from .boltzmann import (
    boltzmann_attempt,
    boltzmann_walk,
    sample_boltzmann_lr,
    sample_boltzmann_marked,
    sample_boltzmann_right,
)
from .cells import (
    sample_cell,
    sample_uibhbot_window,
    sample_uibot_window,
    sample_uiqbot_window,
    window_from_walk,
)
from .channeled import (
    apply_phi,
    apply_phi_inverse,
    channeled_walks,
    is_boundary_channeled,
    orient_missing_edges,
    reroot,
    sample_boundary_channeled,
    sample_channeled_walk,
    side_lengths,
)

__all__ = [
    "apply_phi",
    "apply_phi_inverse",
    "boltzmann_attempt",
    "boltzmann_walk",
    "channeled_walks",
    "is_boundary_channeled",
    "orient_missing_edges",
    "reroot",
    "sample_boltzmann_lr",
    "sample_boltzmann_marked",
    "sample_boltzmann_right",
    "sample_boundary_channeled",
    "sample_cell",
    "sample_channeled_walk",
    "sample_uibhbot_window",
    "sample_uibot_window",
    "sample_uiqbot_window",
    "side_lengths",
    "window_from_walk",
]
