#!/usr/bin/env python3
"""Construct the bundled datasets and write them into src/flowcat/data/.

Each category is built through the library API, checked against every
structural invariant, and cross-checked against its known integral
cohomology before anything is written.  Run from the repository root:

    python tools/build_datasets.py
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from flowcat.algebra import integral_cohomology
from flowcat.ffc_io import digest, encode
from flowcat.model import CHAR_SIGN, Category, End, check

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "flowcat", "data")


def build(quantum, objects, points, intervals, labels=None):
    """Assemble a category from degree/point/interval tables."""
    cat = Category()
    for oid, degree in objects:
        label = (labels or {}).get(oid)
        cat.add_object(oid, degree, quantum=quantum, label=label)
    for (frm, to), pts in points.items():
        for pid, sign in pts.items():
            cat.add_point(frm, to, pid, CHAR_SIGN[sign])
    for (frm, to), comps in intervals.items():
        for i, (framing, e1, e2) in enumerate(comps):
            cat.add_interval(frm, to, f"e{i}", framing, End(*e1), End(*e2))
    check(cat)
    return cat


def torus_3_4_q11():
    objects = (
        [(f"a{i}", 2) for i in (4, 5, 6, 7, 9)]
        + [(f"a{i}", 3) for i in (11, 14, 15, 16, 17, 20, 21, 22, 23)]
        + [(f"a{i}", 4) for i in (25, 26, 27, 28, 30)]
    )
    points = {
        ("a11", "a4"): {"p": "+"},
        ("a11", "a7"): {"p": "+"},
        ("a14", "a7"): {"p": "+"},
        ("a14", "a9"): {"m": "-"},
        ("a15", "a7"): {"p": "+"},
        ("a15", "a9"): {"p": "+"},
        ("a16", "a5"): {"p": "+", "m": "-"},
        ("a16", "a7"): {"p": "+", "m": "-"},
        ("a17", "a6"): {"p": "+", "m": "-"},
        ("a20", "a6"): {"p": "+"},
        ("a20", "a9"): {"p": "+"},
        ("a21", "a6"): {"p": "+"},
        ("a21", "a9"): {"m": "-"},
        ("a22", "a5"): {"p": "+"},
        ("a22", "a9"): {"m": "-"},
        ("a23", "a5"): {"p": "+"},
        ("a23", "a9"): {"p": "+"},
        ("a25", "a11"): {"P": "+", "M": "-"},
        ("a25", "a16"): {"P": "+"},
        ("a26", "a17"): {"P": "+"},
        ("a27", "a14"): {"M": "-"},
        ("a27", "a15"): {"P": "+"},
        ("a27", "a16"): {"T": "+"},
        ("a27", "a22"): {"P": "+"},
        ("a27", "a23"): {"M": "-"},
        ("a28", "a14"): {"P": "+"},
        ("a28", "a15"): {"M": "-"},
        ("a28", "a17"): {"T": "+"},
        ("a28", "a20"): {"P": "+"},
        ("a28", "a21"): {"M": "-"},
        ("a30", "a20"): {"P": "+"},
        ("a30", "a21"): {"m": "-"},
        ("a30", "a22"): {"P": "+"},
        ("a30", "a23"): {"M": "-"},
    }
    intervals = {
        ("a25", "a4"): [(0, ("a11", "p", "P"), ("a11", "p", "M"))],
        ("a25", "a5"): [(1, ("a16", "p", "P"), ("a16", "m", "P"))],
        ("a25", "a7"): [
            (0, ("a11", "p", "P"), ("a16", "m", "P")),
            (0, ("a11", "p", "M"), ("a16", "p", "P")),
        ],
        ("a26", "a6"): [(1, ("a17", "p", "P"), ("a17", "m", "P"))],
        ("a27", "a5"): [
            (0, ("a22", "p", "P"), ("a16", "m", "T")),
            (0, ("a16", "p", "T"), ("a23", "p", "M")),
        ],
        ("a27", "a7"): [
            (0, ("a14", "p", "M"), ("a16", "p", "T")),
            (0, ("a16", "m", "T"), ("a15", "p", "P")),
        ],
        ("a27", "a9"): [
            (1, ("a14", "m", "M"), ("a23", "p", "M")),
            (0, ("a15", "p", "P"), ("a22", "m", "P")),
        ],
        ("a28", "a6"): [
            (0, ("a20", "p", "P"), ("a17", "m", "T")),
            (0, ("a17", "p", "T"), ("a21", "p", "M")),
        ],
        ("a28", "a7"): [(0, ("a14", "p", "P"), ("a15", "p", "M"))],
        ("a28", "a9"): [
            (0, ("a14", "m", "P"), ("a21", "m", "M")),
            (0, ("a15", "p", "M"), ("a20", "p", "P")),
        ],
        ("a30", "a5"): [(1, ("a23", "p", "M"), ("a22", "p", "P"))],
        ("a30", "a6"): [(0, ("a20", "p", "P"), ("a21", "p", "m"))],
        ("a30", "a9"): [
            (0, ("a20", "p", "P"), ("a23", "p", "M")),
            (0, ("a21", "m", "m"), ("a22", "m", "P")),
        ],
    }
    return build(11, objects, points, intervals)


def pretzel_m2_2_2_qm6():
    objects = (
        [(f"alpha{i}", 0) for i in range(1, 6)]
        + [(f"beta{i}", 1) for i in range(1, 11)]
        + [(f"gamma{i}", 2) for i in range(1, 10)]
    )
    points = {
        ("beta1", "alpha1"): {"p": "+"},
        ("beta1", "alpha2"): {"p": "+"},
        ("beta2", "alpha1"): {"m": "-"},
        ("beta2", "alpha2"): {"m": "-"},
        ("beta3", "alpha1"): {"p": "+"},
        ("beta3", "alpha3"): {"p": "+"},
        ("beta4", "alpha1"): {"m": "-"},
        ("beta4", "alpha3"): {"m": "-"},
        ("beta5", "alpha2"): {"m": "-"},
        ("beta5", "alpha3"): {"p": "+"},
        ("beta6", "alpha2"): {"p": "+"},
        ("beta6", "alpha3"): {"m": "-"},
        ("beta7", "alpha3"): {"p": "+"},
        ("beta7", "alpha4"): {"p": "+"},
        ("beta8", "alpha2"): {"m": "-"},
        ("beta8", "alpha5"): {"p": "+"},
        ("beta9", "alpha4"): {"p": "+", "m": "-"},
        ("beta10", "alpha5"): {"p": "+", "m": "-"},
        ("gamma1", "beta1"): {"p": "+"},
        ("gamma1", "beta2"): {"p": "+"},
        ("gamma1", "beta8"): {"p": "+", "m": "-"},
        ("gamma2", "beta1"): {"p": "+"},
        ("gamma2", "beta3"): {"m": "-"},
        ("gamma2", "beta5"): {"p": "+"},
        ("gamma3", "beta2"): {"m": "-"},
        ("gamma3", "beta4"): {"p": "+"},
        ("gamma3", "beta6"): {"m": "-"},
        ("gamma4", "beta3"): {"p": "+"},
        ("gamma4", "beta4"): {"p": "+"},
        ("gamma4", "beta7"): {"p": "+", "m": "-"},
        ("gamma5", "beta5"): {"p": "+"},
        ("gamma5", "beta6"): {"p": "+"},
        ("gamma5", "beta8"): {"p": "+", "m": "-"},
        ("gamma5", "beta10"): {"p": "+"},
        ("gamma6", "beta5"): {"m": "-"},
        ("gamma6", "beta6"): {"m": "-"},
        ("gamma6", "beta7"): {"p": "+", "m": "-"},
        ("gamma6", "beta9"): {"p": "+"},
        ("gamma7", "beta9"): {"p": "+"},
        ("gamma8", "beta10"): {"p": "+"},
    }
    intervals = {
        ("gamma1", "alpha1"): [(0, ("beta1", "p", "p"), ("beta2", "m", "p"))],
        ("gamma1", "alpha2"): [
            (0, ("beta1", "p", "p"), ("beta8", "m", "p")),
            (0, ("beta8", "m", "m"), ("beta2", "m", "p")),
        ],
        ("gamma1", "alpha5"): [(0, ("beta8", "p", "p"), ("beta8", "p", "m"))],
        ("gamma2", "alpha1"): [(0, ("beta1", "p", "p"), ("beta3", "p", "m"))],
        ("gamma2", "alpha2"): [(0, ("beta1", "p", "p"), ("beta5", "m", "p"))],
        ("gamma2", "alpha3"): [(0, ("beta3", "p", "m"), ("beta5", "p", "p"))],
        ("gamma3", "alpha1"): [(0, ("beta2", "m", "m"), ("beta4", "m", "p"))],
        ("gamma3", "alpha2"): [(1, ("beta2", "m", "m"), ("beta6", "p", "m"))],
        ("gamma3", "alpha3"): [(0, ("beta4", "m", "p"), ("beta6", "m", "m"))],
        ("gamma4", "alpha1"): [(0, ("beta3", "p", "p"), ("beta4", "m", "p"))],
        ("gamma4", "alpha3"): [
            (0, ("beta3", "p", "p"), ("beta7", "p", "m")),
            (1, ("beta7", "p", "p"), ("beta4", "m", "p")),
        ],
        ("gamma4", "alpha4"): [(0, ("beta7", "p", "p"), ("beta7", "p", "m"))],
        ("gamma5", "alpha2"): [
            (0, ("beta5", "m", "p"), ("beta8", "m", "m")),
            (0, ("beta8", "m", "p"), ("beta6", "p", "p")),
        ],
        ("gamma5", "alpha3"): [(0, ("beta5", "p", "p"), ("beta6", "m", "p"))],
        ("gamma5", "alpha5"): [
            (0, ("beta10", "p", "p"), ("beta8", "p", "m")),
            (0, ("beta8", "p", "p"), ("beta10", "m", "p")),
        ],
        ("gamma6", "alpha2"): [(1, ("beta5", "m", "m"), ("beta6", "p", "m"))],
        ("gamma6", "alpha3"): [
            (0, ("beta5", "p", "m"), ("beta7", "p", "p")),
            (0, ("beta7", "p", "m"), ("beta6", "m", "m")),
        ],
        ("gamma6", "alpha4"): [
            (0, ("beta9", "p", "p"), ("beta7", "p", "m")),
            (0, ("beta7", "p", "p"), ("beta9", "m", "p")),
        ],
        ("gamma7", "alpha4"): [(0, ("beta9", "p", "p"), ("beta9", "m", "p"))],
        ("gamma8", "alpha5"): [(0, ("beta10", "p", "p"), ("beta10", "m", "p"))],
    }
    return build(-6, objects, points, intervals)


def two_trefoils_q14():
    objects = [
        ("alpha", 4),
        ("beta1", 5),
        ("beta2", 5),
        ("out1", 5),
        ("out2", 5),
        ("gamma", 6),
    ]
    points = {
        ("gamma", "beta1"): {"P0": "+", "P1": "+"},
        ("gamma", "beta2"): {"Q0": "-", "Q1": "-"},
        ("beta1", "alpha"): {"p0": "+", "p1": "+"},
        ("beta2", "alpha"): {"q0": "+", "q1": "+"},
    }
    intervals = {
        ("gamma", "alpha"): [
            (0, ("beta1", "p0", "P0"), ("beta2", "q0", "Q0")),
            (0, ("beta1", "p0", "P1"), ("beta2", "q1", "Q0")),
            (0, ("beta1", "p1", "P0"), ("beta2", "q0", "Q1")),
            (0, ("beta1", "p1", "P1"), ("beta2", "q1", "Q1")),
        ],
    }
    return build(14, objects, points, intervals)


def two_trefoils_aux():
    objects = [
        ("alpha", 4),
        ("beta1", 5),
        ("beta2", 5),
        ("sigma", 5),
        ("gamma", 6),
        ("tau", 6),
    ]
    points = {
        ("gamma", "beta1"): {"P0": "+", "P1": "+"},
        ("gamma", "beta2"): {"Q0": "-", "Q1": "-"},
        ("tau", "beta1"): {"m": "-"},
        ("tau", "beta2"): {"p": "+"},
        ("tau", "sigma"): {"p": "+"},
        ("beta1", "alpha"): {"p0": "+", "p1": "+"},
        ("beta2", "alpha"): {"q0": "+", "q1": "+"},
    }
    intervals = {
        ("gamma", "alpha"): [
            (0, ("beta1", "p0", "P0"), ("beta2", "q0", "Q0")),
            (0, ("beta1", "p0", "P1"), ("beta2", "q1", "Q0")),
            (0, ("beta1", "p1", "P0"), ("beta2", "q0", "Q1")),
            (0, ("beta1", "p1", "P1"), ("beta2", "q1", "Q1")),
        ],
        ("tau", "alpha"): [
            (0, ("beta1", "p0", "m"), ("beta2", "q1", "p")),
            (0, ("beta1", "p1", "m"), ("beta2", "q0", "p")),
        ],
    }
    return build(14, objects, points, intervals)


def trefoil_q7():
    objects = [("v0", 2), ("v1", 3)]
    points = {("v1", "v0"): {"s0": "+", "s1": "+"}}
    return build(7, objects, points, {}, labels={"v0": "+", "v1": "-"})


EXPECTED_COHOMOLOGY = {
    "torus_3_4_q11": {2: (0, ()), 3: (0, (2,)), 4: (1, ())},
    "pretzel_m2_2_2_q-6": {0: (1, ()), 1: (0, ()), 2: (3, ())},
    "two_trefoils_q14": {4: (0, ()), 5: (2, (2,)), 6: (0, (2,))},
    "two_trefoils_aux": {4: (0, ()), 5: (0, (2,)), 6: (0, (2,))},
    "trefoil_q7": {2: (0, ()), 3: (0, (2,))},
}

BUILDERS = {
    "torus_3_4_q11": torus_3_4_q11,
    "pretzel_m2_2_2_q-6": pretzel_m2_2_2_qm6,
    "two_trefoils_q14": two_trefoils_q14,
    "two_trefoils_aux": two_trefoils_aux,
    "trefoil_q7": trefoil_q7,
}


def main() -> int:
    os.makedirs(OUT_DIR, exist_ok=True)
    for name, builder in BUILDERS.items():
        cat = builder()
        groups = integral_cohomology(cat)
        expected = EXPECTED_COHOMOLOGY[name]
        if groups != expected:
            print(f"error: {name}: cohomology {groups} != expected {expected}")
            return 1
        path = os.path.join(OUT_DIR, f"{name}.ffc")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(encode(cat))
        print(f"{name}: {digest(cat)}  ({len(cat.objects)} objects)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
