"""
Walk samplers, stopping times and path transforms.
"""

from .flip import flip_preimages, pitman_flip, pitman_unflip
from .rng import child_seeds, estimator_rng, make_rng, replica_seeds, seed_sequence
from .sampling import (
    conditioned_codes,
    conditioned_transitions,
    excursion_to_minus_one,
    sample_conditioned_until_right_hit,
    sample_conditioned_walk,
    sample_uibhbot_walk,
    sample_uibot_walk,
    step_frequencies,
    uniform_codes,
)
from .stopping import (
    first_hit_times,
    quadrant_decomposition_times,
    quadrant_intervals,
    split_quadrant_walks,
)

__all__ = [
    "child_seeds",
    "conditioned_codes",
    "conditioned_transitions",
    "estimator_rng",
    "excursion_to_minus_one",
    "first_hit_times",
    "flip_preimages",
    "make_rng",
    "pitman_flip",
    "pitman_unflip",
    "quadrant_decomposition_times",
    "quadrant_intervals",
    "replica_seeds",
    "sample_conditioned_until_right_hit",
    "sample_conditioned_walk",
    "sample_uibhbot_walk",
    "sample_uibot_walk",
    "seed_sequence",
    "split_quadrant_walks",
    "step_frequencies",
    "uniform_codes",
]
