"""Clutters, blockers, minors, cleanness and the rainbow-cover / setcore
connectivity parameters of clean tangled clutters."""

from .clutter_core import (
    INF,
    Clutter,
    MinorSpec,
    blocker,
    covering_number,
    is_cover,
    minimum_covers,
    minor,
    validate,
)
from .obstructions import is_clean, recognize_blocker_of_extended_odd_hole, recognize_delta
from .params import connectivity, param_report, rainbow_covering_number
from .structure import SetSystem, core, is_tangled, min_cover_graph, setcore

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Clutter",
    "MinorSpec",
    "SetSystem",
    "blocker",
    "connectivity",
    "core",
    "covering_number",
    "is_clean",
    "is_cover",
    "is_tangled",
    "min_cover_graph",
    "minimum_covers",
    "minor",
    "param_report",
    "rainbow_covering_number",
    "recognize_blocker_of_extended_odd_hole",
    "recognize_delta",
    "setcore",
    "validate",
]
