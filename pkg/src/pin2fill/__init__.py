"""Pin(2)-monopole Floer obstructions to indefinite Stein fillings, computed exactly."""

from .catalog import ManifoldEntry, builtin
from .cobordism import CobordismData, Mono, ZERO, Zero, compose_bar, grading_shift, hs_bar_map
from .floer import (
    ContactClass,
    FloerModel,
    TowerName,
    TypeClass,
    build_rank_one,
    build_s3,
    build_y4k1,
    verify_model,
)
from .graded import GradedMap, GradedSpace, Window
from .lattice import LatticeForm, classify_even_indefinite, gram, invariants
from .obstruct import FillingConstraint, euler_bounds, forced_qpower, theorem_contact, theorem_main

__version__ = "0.1.0"

__all__ = [
    "CobordismData",
    "ContactClass",
    "FillingConstraint",
    "FloerModel",
    "GradedMap",
    "GradedSpace",
    "LatticeForm",
    "ManifoldEntry",
    "Mono",
    "TowerName",
    "TypeClass",
    "Window",
    "ZERO",
    "Zero",
    "build_rank_one",
    "build_s3",
    "build_y4k1",
    "builtin",
    "classify_even_indefinite",
    "compose_bar",
    "euler_bounds",
    "forced_qpower",
    "grading_shift",
    "gram",
    "hs_bar_map",
    "invariants",
    "theorem_contact",
    "theorem_main",
    "verify_model",
]
