"""Bundled example categories.

Five categories ship with the package as canonical ``.ffc`` files:

* ``torus_3_4_q11`` — a 19-object category concentrated in degrees 2..4
  whose simplification lands on ``RP5/RP2@2``;
* ``pretzel_m2_2_2_q-6`` — a 24-object category in degrees 0..2 that
  simplifies to ``CP2@0 v S2 v S2``;
* ``two_trefoils_q14`` — a 6-object category whose 4-object block admits no
  moves at all (an irreducible residue) next to two stray spheres;
* ``two_trefoils_aux`` — the same block with two auxiliary objects that
  unlock it; it simplifies to ``RP2^RP2@4``;
* ``trefoil_q7`` — a minimal two-object example of a Moore space.
"""

from __future__ import annotations

from importlib import resources

from .ffc_io import decode
from .model import Category

NAMES = (
    "torus_3_4_q11",
    "pretzel_m2_2_2_q-6",
    "two_trefoils_q14",
    "two_trefoils_aux",
    "trefoil_q7",
)


def names() -> list[str]:
    """Names accepted by :func:`load` (and by the CLI in place of a path)."""
    return list(NAMES)


def read_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown dataset {name!r}; known: {', '.join(NAMES)}")
    return (
        resources.files("flowcat.data").joinpath(f"{name}.ffc").read_text("utf-8")
    )


def load(name: str) -> Category:
    """Decode a bundled dataset by name."""
    return decode(read_text(name))
