"""Scripted move sequences with verified intermediate listings.

Each script is a list of steps ``(move_spec, one_dim, zero_dim)``: the move
to apply (None = inspect only), then expected listings keyed by space.  A
listing is the canonical compact rendering produced by :func:`one_dim_repr`
/ :func:`zero_dim_repr`; an expected empty string means the space is gone.
Every step also re-validates the category and checks that integral
cohomology never changes.

This module is imported by both the replay tests and the acceptance gate.
"""

from __future__ import annotations

import flowcat
from flowcat.algebra import integral_cohomology
from flowcat.model import SIGN_CHAR, Category, Circle
from flowcat.moves import Move, apply_move


def one_dim_repr(cat: Category, a: str, b: str) -> str:
    comps = cat.components(a, b)
    bits = []
    for cid in sorted(comps):
        c = comps[cid]
        if isinstance(c, Circle):
            bits.append(f"{cid}=C fr{c.framing}")
        else:
            s, e = c.start, c.end
            bits.append(
                f"{cid}=I fr{c.framing} [{s.mid}({s.lower},{s.upper})"
                f"--{e.mid}({e.lower},{e.upper})]"
            )
    return "; ".join(bits)


def zero_dim_repr(cat: Category, a: str, b: str) -> str:
    pts = cat.points(a, b)
    return " ".join(f"{pid}{SIGN_CHAR[pts[pid]]}" for pid in sorted(pts))


def run_script(dataset: str, script) -> Category:
    cat = flowcat.datasets.load(dataset)
    h0 = integral_cohomology(cat)
    for step, (spec, one_dim, zero_dim) in enumerate(script):
        if spec is not None:
            cat = apply_move(cat, Move.from_spec(spec))
            errors = flowcat.validate(cat)
            assert errors == [], f"step {step} ({spec}): {errors}"
            assert integral_cohomology(cat) == h0, (
                f"step {step} ({spec}): cohomology changed"
            )
        for key, want in (one_dim or {}).items():
            got = one_dim_repr(cat, *key)
            assert got == want, (
                f"step {step} ({spec}): M{key} is {got!r}, expected {want!r}"
            )
        for key, want in (zero_dim or {}).items():
            got = zero_dim_repr(cat, *key)
            assert got == want, (
                f"step {step} ({spec}): points of M{key} are {got!r},"
                f" expected {want!r}"
            )
    return cat


# -- torus T(3,4), q = 11 -------------------------------------------------------

TORUS_DATASET = "torus_3_4_q11"
TORUS_H = {2: (0, ()), 3: (0, (2,)), 4: (1, ())}
TORUS_FINAL = "RP5/RP2@2"
TORUS_NOTE = "RP5/RP2@2 = Susp(-1) RP5/RP2"

TORUS_SCRIPT = [
    (
        "whitney:a25,a11:P,M",
        {
            ("a25", "a4"): "g0=C fr1",
            ("a25", "a5"): "e0=I fr1 [a16(m,P)--a16(p,P)]",
            ("a25", "a7"): "g1=I fr1 [a16(m,P)--a16(p,P)]",
            ("a26", "a6"): "e0=I fr1 [a17(m,P)--a17(p,P)]",
            ("a27", "a5"): "e0=I fr0 [a16(m,T)--a22(p,P)]; e1=I fr0 [a16(p,T)--a23(p,M)]",
            ("a27", "a7"): "e0=I fr0 [a14(p,M)--a16(p,T)]; e1=I fr0 [a15(p,P)--a16(m,T)]",
            ("a27", "a9"): "e0=I fr1 [a14(m,M)--a23(p,M)]; e1=I fr0 [a15(p,P)--a22(m,P)]",
            ("a28", "a6"): "e0=I fr0 [a17(m,T)--a20(p,P)]; e1=I fr0 [a17(p,T)--a21(p,M)]",
            ("a28", "a7"): "e0=I fr0 [a14(p,P)--a15(p,M)]",
            ("a28", "a9"): "e0=I fr0 [a14(m,P)--a21(m,M)]; e1=I fr0 [a15(p,M)--a20(p,P)]",
            ("a30", "a5"): "e0=I fr1 [a22(p,P)--a23(p,M)]",
            ("a30", "a6"): "e0=I fr0 [a20(p,P)--a21(p,m)]",
            ("a30", "a9"): "e0=I fr0 [a20(p,P)--a23(p,M)]; e1=I fr0 [a21(m,m)--a22(m,P)]",
        },
        None,
    ),
    ("rmcircle:a25,a4:g0", {("a25", "a4"): ""}, None),
    (
        "whitney:a16,a7:p,m",
        {
            ("a25", "a7"): "g0=C fr1",
            ("a27", "a7"): "g1=I fr0 [a14(p,M)--a15(p,P)]",
        },
        None,
    ),
    ("rmcircle:a25,a7:g0", {("a25", "a7"): ""}, None),
    (
        "whitney:a16,a5:p,m",
        {
            ("a25", "a5"): "g0=C fr1",
            ("a27", "a5"): "g1=I fr0 [a22(p,P)--a23(p,M)]",
        },
        None,
    ),
    ("rmcircle:a25,a5:g0", {("a25", "a5"): ""}, None),
    (
        "whitney:a17,a6:p,m",
        {
            ("a26", "a6"): "g0=C fr1",
            ("a28", "a6"): "g1=I fr0 [a20(p,P)--a21(p,M)]",
        },
        None,
    ),
    (
        "rmcircle:a26,a6:g0",
        {
            ("a26", "a6"): "",
            ("a27", "a5"): "g1=I fr0 [a22(p,P)--a23(p,M)]",
            ("a27", "a7"): "g1=I fr0 [a14(p,M)--a15(p,P)]",
            ("a27", "a9"): "e0=I fr1 [a14(m,M)--a23(p,M)]; e1=I fr0 [a15(p,P)--a22(m,P)]",
            ("a28", "a6"): "g1=I fr0 [a20(p,P)--a21(p,M)]",
            ("a28", "a7"): "e0=I fr0 [a14(p,P)--a15(p,M)]",
            ("a28", "a9"): "e0=I fr0 [a14(m,P)--a21(m,M)]; e1=I fr0 [a15(p,M)--a20(p,P)]",
            ("a30", "a5"): "e0=I fr1 [a22(p,P)--a23(p,M)]",
            ("a30", "a6"): "e0=I fr0 [a20(p,P)--a21(p,m)]",
            ("a30", "a9"): "e0=I fr0 [a20(p,P)--a23(p,M)]; e1=I fr0 [a21(m,m)--a22(m,P)]",
        },
        None,
    ),
    ("cancel:a11,a4", None, None),
    ("cancel:a25,a16", None, None),
    (
        "cancel:a26,a17",
        {
            ("a27", "a9"): "e0=I fr1 [a14(m,M)--a23(p,M)]; e1=I fr0 [a15(p,P)--a22(m,P)]",
            ("a28", "a9"): "e0=I fr0 [a14(m,P)--a21(m,M)]; e1=I fr0 [a15(p,M)--a20(p,P)]",
        },
        None,
    ),
    (
        "cancel:a14,a7",
        {
            ("a27", "a7"): "",
            ("a28", "a7"): "",
            ("a27", "a9"): "e1=I fr0 [a15(p,P)--a22(m,P)]; g0=I fr0 [a15(m.p,P)--a23(p,M)]",
            ("a28", "a9"): "e1=I fr0 [a15(p,M)--a20(p,P)]; g1=I fr1 [a15(m.p,M)--a21(m,M)]",
        },
        None,
    ),
    (
        "cancel:a20,a6",
        {
            ("a28", "a6"): "",
            ("a30", "a6"): "",
            ("a28", "a9"): "g0=I fr1 [a15(p,M)--a21(p.p,M)]; g1=I fr1 [a15(m.p,M)--a21(m,M)]",
            ("a30", "a9"): "e1=I fr0 [a21(m,m)--a22(m,P)]; g1=I fr1 [a21(p.p,m)--a23(p,M)]",
        },
        None,
    ),
    (
        "cancel:a30,a23",
        {
            ("a27", "a5"): "g0=I fr0 [a22(p,P)--a22(p,P.M)]",
            ("a27", "a9"): (
                "e1=I fr0 [a15(p,P)--a22(m,P)];"
                " g1=I fr0 [a15(m.p,P)--a21(p.p,m.M)];"
                " g2=I fr0 [a21(m,m.M)--a22(m,P.M)]"
            ),
            ("a28", "a9"): "g0=I fr1 [a15(p,M)--a21(p.p,M)]; g1=I fr1 [a15(m.p,M)--a21(m,M)]",
        },
        {("a27", "a22"): "P+ P.M-"},
    ),
    (
        "whitney:a27,a22:P,P.M",
        {
            ("a27", "a5"): "g1=C fr1",
            ("a27", "a9"): "g1=I fr0 [a15(m.p,P)--a21(p.p,m.M)]; g3=I fr0 [a15(p,P)--a21(m,m.M)]",
        },
        None,
    ),
    ("rmcircle:a27,a5:g1", {("a27", "a5"): ""}, None),
    ("cancel:a22,a5", None, None),
    (
        "cancel:a27,a15",
        {
            # two framing-1 intervals remain
            ("a28", "a9"): "g2=I fr1 [a21(m,m.M.M)--a21(p.p,M)]; g3=I fr1 [a21(m,M)--a21(p.p,m.M.M)]",
        },
        {("a28", "a21"): "M- m.M.M+"},
    ),
    (
        "whitney:a28,a21:m.M.M,M",
        {
            # ... and close into a single framing-0 circle
            ("a28", "a9"): "g0=C fr0",
            ("a28", "a21"): "",
        },
        {("a21", "a9"): "m- p.p-"},
    ),
]


# -- pretzel P(-2,2,2), sl3, q = -6 ---------------------------------------------

PRETZEL_DATASET = "pretzel_m2_2_2_q-6"
PRETZEL_H = {0: (1, ()), 1: (0, ()), 2: (3, ())}
PRETZEL_FINAL = "CP2@0 v S2 v S2"
PRETZEL_NOTE = "CP2@0 = Susp(-2) CP2"

PRETZEL_SCRIPT = [
    ("whitney:gamma1,beta8:p,m", None, None),
    ("whitney:gamma5,beta8:p,m", None, None),
    ("whitney:gamma4,beta7:p,m", None, None),
    ("whitney:gamma6,beta7:p,m", None, None),
    ("whitney:beta9,alpha4:p,m", None, None),
    (
        "whitney:beta10,alpha5:p,m",
        {
            ("gamma1", "alpha1"): "e0=I fr0 [beta1(p,p)--beta2(m,p)]",
            ("gamma1", "alpha2"): "g0=I fr0 [beta1(p,p)--beta2(m,p)]",
            ("gamma1", "alpha5"): "g1=C fr1",
            ("gamma2", "alpha1"): "e0=I fr0 [beta1(p,p)--beta3(p,m)]",
            ("gamma2", "alpha2"): "e0=I fr0 [beta1(p,p)--beta5(m,p)]",
            ("gamma2", "alpha3"): "e0=I fr0 [beta3(p,m)--beta5(p,p)]",
            ("gamma3", "alpha1"): "e0=I fr0 [beta2(m,m)--beta4(m,p)]",
            ("gamma3", "alpha2"): "e0=I fr1 [beta2(m,m)--beta6(p,m)]",
            ("gamma3", "alpha3"): "e0=I fr0 [beta4(m,p)--beta6(m,m)]",
            ("gamma4", "alpha1"): "e0=I fr0 [beta3(p,p)--beta4(m,p)]",
            ("gamma4", "alpha3"): "g0=I fr0 [beta3(p,p)--beta4(m,p)]",
            ("gamma4", "alpha4"): "g1=C fr1",
            ("gamma5", "alpha2"): "g0=I fr0 [beta5(m,p)--beta6(p,p)]",
            ("gamma5", "alpha3"): "e0=I fr0 [beta5(p,p)--beta6(m,p)]",
            ("gamma5", "alpha5"): "g0=C fr1",
            ("gamma6", "alpha2"): "e0=I fr1 [beta5(m,m)--beta6(p,m)]",
            ("gamma6", "alpha3"): "g0=I fr1 [beta5(p,m)--beta6(m,m)]",
            ("gamma6", "alpha4"): "g0=C fr1",
            ("gamma7", "alpha4"): "g1=C fr0",
            ("gamma8", "alpha5"): "g1=C fr0",
        },
        None,
    ),
    ("rmcircle:gamma1,alpha5:g1", None, None),
    ("rmcircle:gamma4,alpha4:g1", None, None),
    ("rmcircle:gamma5,alpha5:g0", None, None),
    (
        "rmcircle:gamma6,alpha4:g0",
        {
            ("gamma1", "alpha5"): "",
            ("gamma4", "alpha4"): "",
            ("gamma5", "alpha5"): "",
            ("gamma6", "alpha4"): "",
            ("gamma7", "alpha4"): "g1=C fr0",
            ("gamma8", "alpha5"): "g1=C fr0",
        },
        None,
    ),
    ("cancel:beta7,alpha4", None, None),
    ("cancel:beta8,alpha5", None, None),
    ("cancel:gamma8,beta10", None, None),
    (
        "cancel:gamma7,beta9",
        {
            ("gamma1", "alpha1"): "e0=I fr0 [beta1(p,p)--beta2(m,p)]",
            ("gamma1", "alpha2"): "g0=I fr0 [beta1(p,p)--beta2(m,p)]",
            ("gamma2", "alpha1"): "e0=I fr0 [beta1(p,p)--beta3(p,m)]",
            ("gamma2", "alpha2"): "e0=I fr0 [beta1(p,p)--beta5(m,p)]",
            ("gamma2", "alpha3"): "e0=I fr0 [beta3(p,m)--beta5(p,p)]",
            ("gamma3", "alpha1"): "e0=I fr0 [beta2(m,m)--beta4(m,p)]",
            ("gamma3", "alpha2"): "e0=I fr1 [beta2(m,m)--beta6(p,m)]",
            ("gamma3", "alpha3"): "e0=I fr0 [beta4(m,p)--beta6(m,m)]",
            ("gamma4", "alpha1"): "e0=I fr0 [beta3(p,p)--beta4(m,p)]",
            ("gamma4", "alpha3"): "g0=I fr0 [beta3(p,p)--beta4(m,p)]",
            # the leftover framing-0 circles have migrated down:
            ("gamma5", "alpha2"): "g0=I fr0 [beta5(m,p)--beta6(p,p)]; g1=C fr0",
            ("gamma5", "alpha3"): "e0=I fr0 [beta5(p,p)--beta6(m,p)]",
            ("gamma6", "alpha2"): "e0=I fr1 [beta5(m,m)--beta6(p,m)]",
            ("gamma6", "alpha3"): "g0=I fr1 [beta5(p,m)--beta6(m,m)]; g1=C fr0",
        },
        None,
    ),
    (
        "cancel:gamma1,beta1",
        {
            ("gamma2", "alpha1"): "g0=I fr0 [beta2(m,p.p)--beta3(p,m)]",
            ("gamma2", "alpha2"): "g1=I fr0 [beta2(m,p.p)--beta5(m,p)]",
        },
        {
            ("gamma2", "beta2"): "p.p-",
            ("gamma2", "beta3"): "m-",
            ("gamma2", "beta5"): "p+",
        },
    ),
    (
        "cancel:gamma6,beta6",
        {
            ("gamma3", "alpha2"): "g0=I fr1 [beta2(m,m)--beta5(m,m.m)]",
            ("gamma3", "alpha3"): "g1=I fr1 [beta4(m,p)--beta5(p,m.m)]; g2=C fr0",
            ("gamma5", "alpha2"): "g1=C fr0; g3=I fr0 [beta5(m,m.p)--beta5(m,p)]",
            ("gamma5", "alpha3"): "g4=I fr1 [beta5(p,m.p)--beta5(p,p)]; g5=C fr0",
        },
        {
            ("gamma3", "beta5"): "m.m+",
            ("gamma5", "beta5"): "m.p- p+",
        },
    ),
    (
        "whitney:gamma5,beta5:p,m.p",
        {
            ("gamma5", "alpha2"): "g0=C fr0; g1=C fr0",
            ("gamma5", "alpha3"): "g1=C fr0; g5=C fr0",
        },
        None,
    ),
    ("rmcircle:gamma5,alpha2:g0,g1", {("gamma5", "alpha2"): ""}, None),
    ("rmcircle:gamma5,alpha3:g1,g5", {("gamma5", "alpha3"): ""}, None),
    (
        "cancel:gamma4,beta4",
        {
            ("gamma3", "alpha1"): "g0=I fr1 [beta2(m,m)--beta3(p,p.p)]",
            # the second interval keeps framing 0 (the chain rule sums to 0)
            ("gamma3", "alpha3"): "g2=C fr0; g3=I fr0 [beta3(p,p.p)--beta5(p,m.m)]",
        },
        {("gamma3", "beta3"): "p.p-"},
    ),
    (
        "cancel:beta2,alpha2",
        {
            ("gamma2", "alpha1"): "g1=I fr0 [beta3(p,m)--beta5(m.m,p)]",
            # again framing 0 by the chain rule
            ("gamma3", "alpha1"): "g2=I fr0 [beta3(p,p.p)--beta5(m.m,m.m)]",
        },
        {("beta5", "alpha1"): "m.m+"},
    ),
    (
        "cancel:beta3,alpha1",
        {
            ("gamma2", "alpha3"): "g0=I fr1 [beta5(p,p)--beta5(p.m.m,p)]",
            ("gamma3", "alpha3"): "g1=I fr1 [beta5(p,m.m)--beta5(p.m.m,m.m)]; g2=C fr0",
        },
        {("beta5", "alpha3"): "p+ p.m.m-"},
    ),
    (
        "whitney:beta5,alpha3:p,p.m.m",
        {
            ("gamma2", "alpha3"): "g1=C fr1",
            ("gamma3", "alpha3"): "g2=C fr0; g3=C fr1",
        },
        None,
    ),
    ("rmcircle:gamma2,alpha3:g1", {("gamma2", "alpha3"): ""}, None),
    ("rmcircle:gamma3,alpha3:g3", {("gamma3", "alpha3"): "g2=C fr0"}, None),
    ("cancel:gamma2,beta5", {("gamma3", "alpha3"): "g2=C fr0"}, None),
]


# -- auxiliary two-trefoil category ----------------------------------------------

AUX_DATASET = "two_trefoils_aux"
AUX_H = {4: (0, ()), 5: (0, (2,)), 6: (0, (2,))}
AUX_FINAL = "RP2^RP2@4"
AUX_NOTE = "RP2^RP2@4 = Susp(2) RP2^RP2"

AUX_SCRIPT = [
    (
        None,
        {
            ("gamma", "alpha"): (
                "e0=I fr0 [beta1(p0,P0)--beta2(q0,Q0)];"
                " e1=I fr0 [beta1(p0,P1)--beta2(q1,Q0)];"
                " e2=I fr0 [beta1(p1,P0)--beta2(q0,Q1)];"
                " e3=I fr0 [beta1(p1,P1)--beta2(q1,Q1)]"
            ),
            ("tau", "alpha"): (
                "e0=I fr0 [beta1(p0,m)--beta2(q1,p)];"
                " e1=I fr0 [beta1(p1,m)--beta2(q0,p)]"
            ),
        },
        {
            ("beta1", "alpha"): "p0+ p1+",
            ("beta2", "alpha"): "q0+ q1+",
            ("gamma", "beta1"): "P0+ P1+",
            ("gamma", "beta2"): "Q0- Q1-",
            ("tau", "beta1"): "m-",
            ("tau", "beta2"): "p+",
            ("tau", "sigma"): "p+",
        },
    ),
    (
        "cancel:tau,beta2:p",
        {
            ("gamma", "alpha"): (
                "g0=I fr0 [beta1(p0,P0)--beta1(p1,m.Q0)];"
                " g1=I fr0 [beta1(p0,P1)--beta1(p0,m.Q0)];"
                " g2=I fr0 [beta1(p1,P0)--beta1(p1,m.Q1)];"
                " g3=I fr0 [beta1(p0,m.Q1)--beta1(p1,P1)]"
            ),
        },
        {
            # the glued-in partners land negative, the side pair positive
            ("gamma", "beta1"): "P0+ P1+ m.Q0- m.Q1-",
            ("gamma", "sigma"): "p.Q0+ p.Q1+",
        },
    ),
    (
        "whitney:gamma,beta1:P0,m.Q0",
        {
            ("gamma", "alpha"): (
                "g3=I fr0 [beta1(p0,m.Q1)--beta1(p1,P1)];"
                " g4=I fr0 [beta1(p0,P1)--beta1(p1,m.Q1)]"
            ),
        },
        {("gamma", "beta1"): "P1+ m.Q1-"},
    ),
    (
        "whitney:gamma,beta1:P1,m.Q1",
        {
            ("gamma", "alpha"): "g0=C fr0",
            ("gamma", "beta1"): "",
        },
        {("gamma", "sigma"): "p.Q0+ p.Q1+"},
    ),
]
