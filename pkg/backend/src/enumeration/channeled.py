"""
Exhaustive checks of the boundary reversal bijection on boundary-channeled
triangulations.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from src.config import CHANNELED_EDGE_CAP
from src.errors import CapExceededError
from src.kmsw.builder import build
from src.maps.isomorphism import canonical_form, isomorphic
from src.models.planar_map import OrientedMap
from src.samplers.channeled import (
    apply_phi,
    apply_phi_inverse,
    channeled_walks,
    is_boundary_channeled,
    orient_missing_edges,
    side_lengths,
)

from .cone import enumerate_maps

logger = logging.getLogger("enumeration_logger")


@lru_cache(maxsize=None)
def _channeled_class(l: int, r: int, interior: int, cap: int) -> Tuple[OrientedMap, ...]:
    n_edges = interior + l + r
    if n_edges > cap:
        raise CapExceededError(f"channeled class with {n_edges} edges exceeds the cap of {cap}")
    maps = enumerate_maps(n_edges, l, r, cap=cap - 1)
    return tuple(m for m in maps if is_boundary_channeled(m))


def channeled_maps(
    l: int, r: int, interior: int, cap: int = CHANNELED_EDGE_CAP
) -> List[OrientedMap]:
    """Boundary-channeled maps with left length l, right length r and
    `interior` non-boundary edges."""
    if l < 1 or r < 1 or interior < 0:
        raise ValueError("need l, r >= 1 and interior >= 0")
    return list(_channeled_class(l, r, interior, cap))


def channeled_counts(l: int, r: int, interior: int, cap: int = CHANNELED_EDGE_CAP) -> int:
    return len(channeled_maps(l, r, interior, cap))


def phi_bijection_check(
    l: int, r: int, k: int, interior: int, cap: int = CHANNELED_EDGE_CAP
) -> List[str]:
    """Discrepancies between the images of the (l, r) class under the
    k-edge reversal and the (l + k, r - k) class; empty on success."""
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must lie in [1, {r - 1}], got {k}")
    label = f"phi(l={l}, r={r}, k={k}, interior={interior})"
    source = channeled_maps(l, r, interior, cap)
    target = channeled_maps(l + k, r - k, interior, cap)
    failures = []
    if len(source) != len(target):
        failures.append(f"{label}: {len(source)} maps map onto a class of {len(target)}")
    images = set()
    for index, map_ in enumerate(source):
        image = apply_phi(map_, k)
        if not is_boundary_channeled(image):
            failures.append(f"{label}: image of map {index} is not channeled")
            continue
        if side_lengths(image) != (l + k, r - k):
            failures.append(f"{label}: image of map {index} has sides {side_lengths(image)}")
        if not isomorphic(apply_phi_inverse(image, k), map_):
            failures.append(f"{label}: inverse does not recover map {index}")
        images.add(canonical_form(image))
    if images != {canonical_form(m) for m in target}:
        failures.append(f"{label}: images differ from the target class")
    logger.debug(f"{label}: {len(source)} maps, {len(failures)} failures")
    return failures


def channeled_walk_check(l: int, n: int, cap: int = CHANNELED_EDGE_CAP) -> List[str]:
    """Walks from (l - 1, 0) to (0, 0) against channeled maps with left
    length 1 and right length l: same count, and every oriented build lands
    in that class."""
    label = f"channeled walks(l={l}, n={n})"
    walks = list(channeled_walks(l, n))
    expected = channeled_counts(1, l, n - 1, cap)
    failures = []
    if len(walks) != expected:
        failures.append(f"{label}: {len(walks)} walks against {expected} maps")
    forms = set()
    for walk in walks:
        oriented = orient_missing_edges(build(walk))
        if not is_boundary_channeled(oriented) or side_lengths(oriented) != (1, l):
            failures.append(f"{label}: walk {walk.tags()} builds outside the class")
            continue
        forms.add(canonical_form(oriented))
    if len(forms) != len(walks):
        failures.append(f"{label}: distinct walks build isomorphic maps")
    return failures
