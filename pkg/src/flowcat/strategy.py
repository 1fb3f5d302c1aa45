"""Greedy simplification and replayable simplification traces.

The greedy strategy repeatedly applies the first listed move that makes
progress (anything except a summand split) until none remains.  Termination
is guaranteed: a Whitney trick removes two points, a cancellation removes
two objects, a circle removal removes components, so the triple

    (object count, total points, total one-dimensional components)

drops strictly in lexicographic order on every step.

A *trace* is a JSON-friendly record of a simplification run: the digest of
the starting category, each move descriptor with the digest of the category
right after it, and the final recognition.  Replaying a trace re-applies
the moves and verifies every digest, so a trace is a checkable certificate.
"""

from __future__ import annotations

from typing import Any, Optional

from .ffc_io import digest
from .model import Category
from .moves import Move, apply_move, list_moves
from .recognizer import recognize


class TraceError(ValueError):
    """A trace that does not replay against its category."""


def next_progress_move(cat: Category) -> Optional[Move]:
    """The first listed move that is not a summand split, if any."""
    for move in list_moves(cat):
        if move.kind != "split_summand":
            return move
    return None


def simplify(
    cat: Category, max_steps: Optional[int] = None
) -> tuple[Category, list[Move]]:
    """Greedily apply progress moves until only splits (or nothing) remain."""
    applied: list[Move] = []
    current = cat
    while max_steps is None or len(applied) < max_steps:
        move = next_progress_move(current)
        if move is None:
            break
        current = apply_move(current, move)
        applied.append(move)
    return current, applied


def build_trace(cat: Category) -> tuple[Category, dict[str, Any]]:
    """Simplify and record a replayable trace of the run."""
    steps: list[dict[str, Any]] = []
    current = cat
    while True:
        move = next_progress_move(current)
        if move is None:
            break
        current = apply_move(current, move)
        entry = move.to_dict()
        entry["digest"] = digest(current)
        steps.append(entry)
    trace = {
        "initial": digest(cat),
        "moves": steps,
        "result": list(recognize(current).summands),
    }
    return current, trace


def replay_trace(cat: Category, trace: dict[str, Any]) -> Category:
    """Re-apply a trace, verifying the digest at every step."""
    if not isinstance(trace, dict) or "initial" not in trace or "moves" not in trace:
        raise TraceError("trace must be an object with 'initial' and 'moves'")
    if digest(cat) != trace["initial"]:
        raise TraceError("trace does not start at this category")
    current = cat
    for i, step in enumerate(trace["moves"]):
        move = Move.from_dict(step)
        current = apply_move(current, move)
        expected = step.get("digest")
        if expected is not None and digest(current) != expected:
            raise TraceError(f"digest mismatch after move {i} ({move.to_spec()})")
    return current
