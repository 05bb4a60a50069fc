"""
Cut events and Busemann profiles.
"""

from .cut_events import cut_events_agree, cut_vertex_times, default_guard, detect_cut_events
from .increments import WindowParams, increment_samples, profile_batch
from .profile import estimate_profile, profile_on_window, touch_field
from .recursion import one_step_check, one_step_prediction

__all__ = [
    "WindowParams",
    "cut_events_agree",
    "cut_vertex_times",
    "default_guard",
    "detect_cut_events",
    "estimate_profile",
    "increment_samples",
    "one_step_check",
    "one_step_prediction",
    "profile_batch",
    "profile_on_window",
    "touch_field",
]
