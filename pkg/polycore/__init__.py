"""
PolyCore - Polyomino ideals, admissible labelings and balance checks
"""

from .backend import PolyBackend, RunOptions
from .config import Config
from .enumeration import count_polyominoes, enumerate_polyominoes, first_nonsimple
from .grid import Interval, LatticePoint, Polyomino, inner_intervals, polyomino_from_anchors
from .ideal import (
    cross_check_balanced,
    is_balanced_certified,
    is_labeling_balanced,
    search_witness,
    verify_witness,
)
from .labeling import Labeling, border_labeling, is_admissible
from .topology import border_polygon, good_corners, holes, is_simple

__version__ = "1.0.0"
__all__ = [
    "PolyBackend",
    "RunOptions",
    "Config",
    "LatticePoint",
    "Interval",
    "Polyomino",
    "polyomino_from_anchors",
    "inner_intervals",
    "holes",
    "is_simple",
    "border_polygon",
    "good_corners",
    "Labeling",
    "is_admissible",
    "border_labeling",
    "search_witness",
    "is_labeling_balanced",
    "verify_witness",
    "is_balanced_certified",
    "cross_check_balanced",
    "enumerate_polyominoes",
    "count_polyominoes",
    "first_nonsimple",
]
