"""flowcat: framed flow categories with one-dimensional moduli data.

Build categories, check their invariants, apply stable-type-preserving
Morse moves (Whitney trick, handle cancellation, circle removal), simplify
greedily, compute integral and mod-2 cohomology exactly, and recognize
stable homotopy types against a small catalog.
"""

from __future__ import annotations

from . import datasets
from .algebra import integral_cohomology, mod2_cohomology
from .ffc_io import DecodeError, decode, digest, encode, load, save
from .gen import random_category
from .model import (
    NEGATIVE,
    POSITIVE,
    Category,
    Circle,
    End,
    Interval,
    InvalidCategory,
    Obj,
    check,
    validate,
)
from .moves import Move, MoveError, apply_move, list_moves
from .recognizer import Recognition, recognize
from .strategy import TraceError, build_trace, replay_trace, simplify

__version__ = "0.1.0"

__all__ = [
    "Category",
    "Circle",
    "DecodeError",
    "End",
    "Interval",
    "InvalidCategory",
    "Move",
    "MoveError",
    "NEGATIVE",
    "Obj",
    "POSITIVE",
    "Recognition",
    "TraceError",
    "apply_move",
    "build_trace",
    "check",
    "datasets",
    "decode",
    "digest",
    "encode",
    "integral_cohomology",
    "list_moves",
    "load",
    "mod2_cohomology",
    "random_category",
    "recognize",
    "replay_trace",
    "save",
    "simplify",
    "validate",
]
