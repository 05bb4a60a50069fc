"""
Pitman-type flip of lazy walks and its inverse unfoldings.

Flipping maps a lazy walk L started at 0 to L - 2 min_{j<=n} L(j), a
non-negative path; each non-negative path of length n ending at level m has
exactly m + 1 preimages, recovered by `pitman_unflip` with k = 0..m.
"""

from typing import List, Sequence

import numpy as np

from src.errors import InvalidWalkError


def _as_lazy_path(path: Sequence[int]) -> np.ndarray:
    arr = np.asarray(path, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidWalkError("a lazy path needs at least its starting value")
    if arr[0] != 0:
        raise InvalidWalkError("a lazy path must start at 0")
    steps = np.diff(arr)
    if steps.size and (steps.min() < -1 or steps.max() > 1):
        raise InvalidWalkError("lazy path increments must lie in {-1, 0, 1}")
    return arr


def pitman_flip(lazy_walk: Sequence[int]) -> np.ndarray:
    arr = _as_lazy_path(lazy_walk)
    return arr - 2 * np.minimum.accumulate(arr)


def pitman_unflip(path: Sequence[int], k: int) -> np.ndarray:
    """path(j) - 2 min(k, min_{i in [j, n]} path(i)).

    For a lazy walk L, pitman_unflip(pitman_flip(L), -min L) == L.
    """
    arr = _as_lazy_path(path)
    if arr.min() < 0:
        raise InvalidWalkError("only non-negative paths can be unflipped")
    if not 0 <= k <= arr[-1]:
        raise ValueError(f"k must lie in [0, {int(arr[-1])}], got {k}")
    suffix_min = np.minimum.accumulate(arr[::-1])[::-1]
    return arr - 2 * np.minimum(k, suffix_min)


def flip_preimages(path: Sequence[int]) -> List[np.ndarray]:
    """All lazy walks whose flip equals `path`."""
    arr = _as_lazy_path(path)
    return [pitman_unflip(arr, k) for k in range(int(arr[-1]) + 1)]
