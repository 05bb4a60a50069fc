"""
One-step relation between the profile of M_{0,inf} and that of M_{1,inf}.

Removing the first step of the walk gives a map with the same law; its
profile X1 determines (X(-1), X(1)) through the first step alone.
"""

from typing import Optional, Tuple

from src.config import DEFAULT_PROBES
from src.errors import NotStabilizedError
from src.models.busemann import BusemannProfile
from src.models.distances import Mode
from src.models.walk import Step, Walk
from src.samplers.cells import window_from_walk

from .profile import profile_on_window


def one_step_prediction(
    mode: Mode, step: Step, shifted: BusemannProfile
) -> Tuple[int, int]:
    """(X(-1), X(1)) predicted from the shifted profile X1 (needs K >= 2)."""
    mode = Mode.parse(mode)
    if shifted.K < 2:
        raise ValueError("the one-step relation reads X1 on [-2, 2]")
    if step is Step.B:
        return -shifted[1] - 1, -1
    if step is Step.A:
        pick = max if mode is Mode.LDP else min
        top = pick(shifted[-1], 1)
        return shifted[-2] - top, -top
    if mode is Mode.LDP:
        return shifted[-1], shifted[2]
    shift = min(0, shifted[2] + 1)
    return shifted[-1] - shift, shifted[2] - shift


def one_step_check(
    mode: Mode, walk: Walk, probes: int = DEFAULT_PROBES
) -> Optional[bool]:
    """Compare the K = 1 profile of walk with the prediction from the K = 2
    profile of walk without its first step; None when either window is
    censored."""
    if walk.length < 1:
        raise ValueError("the walk needs at least one step")
    mode = Mode.parse(mode)
    try:
        full = profile_on_window(window_from_walk(walk), mode, 1, probes)
        shifted = profile_on_window(window_from_walk(walk.suffix(1)), mode, 2, probes)
    except NotStabilizedError:
        return None
    predicted = one_step_prediction(mode, walk.step(0), shifted)
    return predicted == (full[-1], full[1])
