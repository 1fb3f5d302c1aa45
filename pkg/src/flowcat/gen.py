"""Seeded random categories for property testing.

The signed point counts of a valid category must square to zero, and that
turns out to be the only obstruction in dimension one: whenever the counts
square to zero, the composite ends of each degree-two gap split evenly by
product sign, so they can be paired off into intervals (each interval takes
one end of each sign), and any number of circles can be thrown in.  The
generator exploits this: sample sparse signed points until the counts
square to zero (rejection sampling), then randomly mate the composite ends
into intervals and sprinkle random circles.
"""

from __future__ import annotations

import random

from .model import Category, InvalidCategory, validate


def random_category(
    seed: int,
    max_tries: int = 200_000,
    rng: random.Random | None = None,
) -> Category:
    """A small random valid category, deterministic in ``seed``."""
    if rng is None:
        rng = random.Random(seed)

    for _ in range(max_tries):
        cat = Category()
        n_deg = rng.randint(2, 4)
        base = rng.randint(-2, 4)
        degrees = list(range(base, base + n_deg))
        counts = [rng.randint(1, 3) for _ in degrees]
        while sum(counts) > 8:
            counts[counts.index(max(counts))] -= 1
        oid = 0
        for deg, count in zip(degrees, counts):
            for _ in range(count):
                cat.add_object(f"o{oid}", deg)
                oid += 1
        pid = 0
        for deg in degrees[:-1]:
            for frm in cat.objects_at(deg + 1):
                for to in cat.objects_at(deg):
                    if rng.random() < 0.5:
                        continue
                    for _ in range(rng.randint(1, 3)):
                        cat.add_point(frm, to, f"p{pid}", rng.randint(0, 1))
                        pid += 1
        if all(
            sum(
                cat.signed_count(frm, mid) * cat.signed_count(mid, to)
                for mid in cat.objects_at(cat.objects[to].degree + 1)
            )
            == 0
            for frm, to in cat.gap2_pairs()
        ):
            break
    else:
        raise RuntimeError(f"no valid point pattern found in {max_tries} tries")

    # Pair composite ends of each gap into intervals: one even-sign end and
    # one odd-sign end each (their counts agree because the signed counts
    # square to zero).  Then scatter a few circles.
    cid = 0
    for frm, to in cat.gap2_pairs():
        ends = cat.composite_ends(frm, to)
        even = [e for e in ends if cat.end_sign(frm, to, e) == 0]
        odd = [e for e in ends if cat.end_sign(frm, to, e) == 1]
        rng.shuffle(even)
        rng.shuffle(odd)
        for e1, e2 in zip(even, odd):
            cat.add_interval(frm, to, f"e{cid}", rng.randint(0, 1), e1, e2)
            cid += 1
        for _ in range(rng.randint(0, 2)):
            if rng.random() < 0.5:
                cat.add_circle(frm, to, f"c{cid}", rng.randint(0, 1))
                cid += 1

    errors = validate(cat)
    if errors:  # construction guarantees validity; fail loudly if not
        raise InvalidCategory(errors)
    return cat
