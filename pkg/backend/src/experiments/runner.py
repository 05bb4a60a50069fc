"""
Replica runner.

Replica r always receives the r-th child of the master seed, and results
come back in replica order, so the worker count never changes an outcome.
"""

import logging
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from src.walks.rng import SeedLike, replica_seeds

logger = logging.getLogger("experiments_logger")

T = TypeVar("T")


def run_replicas(
    task: Callable[[np.random.SeedSequence], T],
    n_replicas: int,
    master_seed: SeedLike,
    workers: int = 1,
    progress: bool = False,
    description: Optional[str] = None,
) -> List[T]:
    """[task(seed_0), ..., task(seed_{n-1})] with seeds spawned from master."""
    if n_replicas < 0:
        raise ValueError("n_replicas must be non-negative")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    seeds: Sequence[np.random.SeedSequence] = replica_seeds(master_seed, n_replicas)
    logger.debug(f"Running {n_replicas} replicas of {description or task} on {workers} workers")
    if workers == 1:
        iterator = tqdm(seeds, desc=description, disable=not progress, leave=False)
        return [task(seed) for seed in iterator]
    parallel = Parallel(n_jobs=workers, return_as="generator")
    results = parallel(delayed(task)(seed) for seed in seeds)
    return list(
        tqdm(results, total=n_replicas, desc=description, disable=not progress, leave=False)
    )
