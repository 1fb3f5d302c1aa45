"""Shared builders for small hand-made categories."""

from __future__ import annotations

import pytest

from flowcat.model import NEGATIVE, POSITIVE, Category, End


def moore_category(k: int = 2, degree: int = 2, sign: int = POSITIVE) -> Category:
    """Two objects one degree apart joined by ``k`` same-sign points."""
    cat = Category()
    cat.add_object("lo", degree)
    cat.add_object("hi", degree + 1)
    for i in range(k):
        cat.add_point("hi", "lo", f"s{i}", sign)
    return cat


def whitney_a_side(p_sign: int, framing: int = 0) -> Category:
    """M(x,y) holds an opposite pair; one point of M(a,x) sits above it.

    The interval of M(a,y) runs between the two composite ends through the
    pair, so a Whitney trick turns it into a single circle.
    """
    cat = Category()
    cat.add_object("y", 0)
    cat.add_object("x", 1)
    cat.add_object("a", 2)
    cat.add_point("x", "y", "P", POSITIVE)
    cat.add_point("x", "y", "M", NEGATIVE)
    cat.add_point("a", "x", "p", p_sign)
    cat.add_interval("a", "y", "e0", framing, End("x", "P", "p"), End("x", "M", "p"))
    return cat


def whitney_b_side(q_sign: int, framing: int = 0) -> Category:
    """Mirror image: the pair sits in M(x,y), one point of M(y,b) below it."""
    cat = Category()
    cat.add_object("b", 0)
    cat.add_object("y", 1)
    cat.add_object("x", 2)
    cat.add_point("x", "y", "P", POSITIVE)
    cat.add_point("x", "y", "M", NEGATIVE)
    cat.add_point("y", "b", "q", q_sign)
    cat.add_interval("x", "b", "e0", framing, End("y", "q", "P"), End("y", "q", "M"))
    return cat


def cancel_product(e_b: int, e_star: int, e_a: int) -> Category:
    """Four objects, no gap-two pairs: cancelling (x,y) mints one point."""
    cat = Category()
    cat.add_object("y", 0)
    cat.add_object("v", 0)
    cat.add_object("x", 1)
    cat.add_object("u", 1)
    cat.add_point("x", "y", "star", e_star)
    cat.add_point("x", "v", "B", e_b)
    cat.add_point("u", "y", "A", e_a)
    return cat


@pytest.fixture
def torus():
    import flowcat

    return flowcat.datasets.load("torus_3_4_q11")


@pytest.fixture
def pretzel():
    import flowcat

    return flowcat.datasets.load("pretzel_m2_2_2_q-6")
