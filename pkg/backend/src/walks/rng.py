"""
Seeding contract.

Every stochastic entry point takes an integer seed (or an already derived
SeedSequence). Replica r of a batch uses SeedSequence(master).spawn(n)[r],
and draws come from PCG64, which is portable across platforms.
"""

from typing import List, Union

import numpy as np

SeedLike = Union[int, np.random.SeedSequence]


def seed_sequence(seed: SeedLike) -> np.random.SeedSequence:
    """A fresh SeedSequence equal to `seed` with no children spawned yet."""
    if isinstance(seed, np.random.SeedSequence):
        # spawn() advances a counter on the parent; copy to keep derivation pure
        return np.random.SeedSequence(seed.entropy, spawn_key=seed.spawn_key)
    if isinstance(seed, (bool, float)) or int(seed) < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.SeedSequence(int(seed))


def make_rng(seed: SeedLike) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed_sequence(seed)))


def replica_seeds(master_seed: SeedLike, n_replicas: int) -> List[np.random.SeedSequence]:
    """Independent child seeds; entry r depends only on (master_seed, r)."""
    return seed_sequence(master_seed).spawn(n_replicas)


def child_seeds(seed: SeedLike, n_children: int) -> List[np.random.SeedSequence]:
    """Split one replica seed into independent streams for its sub-tasks."""
    return seed_sequence(seed).spawn(n_children)


def estimator_rng(master_seed: SeedLike, stream: int) -> np.random.Generator:
    """Generator for estimator-side draws (jitter, bootstrap) of a batch.

    Its entropy differs from every replica seed spawned from the same master.
    """
    entropy = seed_sequence(master_seed).entropy
    return make_rng(np.random.SeedSequence([int(entropy), 0x5EED, int(stream)]))
