"""Recognition of stable homotopy types from simplified categories.

Each connected component is matched against a small catalog of shapes.
Matching is purely combinatorial: it looks at object degrees, the signed
points remaining, and the parity of framing-0 circles.  Framing-1 circles
over a terminal source are removable without changing the stable type, so
they are ignored; a framing-0 circle pair is likewise removable, which is
why only the *parity* ``r mod 2`` of the framing-0 circle count matters.

Catalog entries, for a component with bottom degree ``n``:

* one lone object — the sphere ``S{n}``;
* two objects one degree apart joined by ``k >= 2`` same-sign points — the
  Moore space ``Moore(Z/k,{n})``;
* two objects two degrees apart with circles between them — ``CP2@{n}``
  when the framing-0 count is odd, ``S{n} v S{n+2}`` when even;
* three objects spanning degrees ``n..n+2`` with one double same-sign bond
  at the top — ``RP4/RP1@{n}`` (odd) or ``S{n} v Moore(Z/2,{n+1})`` (even);
* the same with the double bond at the bottom — ``RP5/RP2@{n}`` (odd) or
  ``S{n+2} v Moore(Z/2,{n})`` (even);
* four objects with both double bonds — ``RP2^RP2@{n}`` (odd) or
  ``Moore(Z/2,{n}) v Moore(Z/2,{n+1})`` (even).

Anything else is reported verbatim as ``residue(...)`` over its object ids.
Projective-family names carry a natural bottom degree; when a match sits at
a different degree, a suspension note records the shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Category, Circle

# Bottom degree at which each named complex occurs unsuspended.
NATURAL_BOTTOM = {"CP2": 2, "RP4/RP1": 2, "RP5/RP2": 3, "RP2^RP2": 2}


@dataclass(frozen=True)
class Recognition:
    """Result of recognition: one summand string per connected component
    (in component order) plus human-readable notes."""

    summands: tuple[str, ...]
    notes: tuple[str, ...]

    @property
    def wedge(self) -> str:
        return " v ".join(self.summands) if self.summands else "*"


def _named(base: str, bottom: int, notes: list[str]) -> str:
    summand = f"{base}@{bottom}"
    natural = NATURAL_BOTTOM[base]
    if bottom != natural:
        notes.append(f"{summand} = Susp({bottom - natural}) {base}")
    return summand


def _circles_only(sub: Category, key: tuple[str, str]) -> bool:
    """True when the component's one-dimensional data is confined to ``key``
    and consists of circles alone."""
    for space_key, space in sub.moduli1.items():
        if space_key != key:
            return False
        if not all(isinstance(c, Circle) for c in space.values()):
            return False
    return True


def _fr0_parity_odd(sub: Category, key: tuple[str, str]) -> bool:
    count = sum(
        1
        for c in sub.components(*key).values()
        if isinstance(c, Circle) and c.framing == 0
    )
    return count % 2 == 1


def _same_sign_pair(points: dict[str, int]) -> bool:
    return len(points) == 2 and len(set(points.values())) == 1


def _match_component(sub: Category, notes: list[str]) -> str:
    objs = sorted(sub.objects)
    degrees = sorted(o.degree for o in sub.objects.values())
    n = degrees[0]

    if len(objs) == 1 and not sub.moduli0 and not sub.moduli1:
        return f"S{n}"

    if len(objs) == 2 and degrees[1] == n + 1 and not sub.moduli1:
        (hi,) = sub.objects_at(n + 1)
        (lo,) = sub.objects_at(n)
        points = sub.points(hi, lo)
        if set(sub.moduli0) == {(hi, lo)} and len(points) >= 2:
            if len(set(points.values())) == 1:
                return f"Moore(Z/{len(points)},{n})"

    if len(objs) == 2 and degrees[1] == n + 2 and not sub.moduli0:
        (z,) = sub.objects_at(n + 2)
        (w,) = sub.objects_at(n)
        if _circles_only(sub, (z, w)):
            if _fr0_parity_odd(sub, (z, w)):
                return _named("CP2", n, notes)
            return f"S{n} v S{n+2}"

    if len(objs) == 3 and degrees == [n, n + 1, n + 2]:
        (z,) = sub.objects_at(n + 2)
        (m,) = sub.objects_at(n + 1)
        (w,) = sub.objects_at(n)
        if _circles_only(sub, (z, w)):
            top = sub.points(z, m)
            bottom = sub.points(m, w)
            if (
                set(sub.moduli0) == {(z, m)}
                and _same_sign_pair(top)
                and not bottom
            ):
                if _fr0_parity_odd(sub, (z, w)):
                    return _named("RP4/RP1", n, notes)
                return f"S{n} v Moore(Z/2,{n+1})"
            if (
                set(sub.moduli0) == {(m, w)}
                and _same_sign_pair(bottom)
                and not top
            ):
                if _fr0_parity_odd(sub, (z, w)):
                    return _named("RP5/RP2", n, notes)
                return f"S{n+2} v Moore(Z/2,{n})"

    if len(objs) == 4 and degrees == [n, n + 1, n + 1, n + 2]:
        (z,) = sub.objects_at(n + 2)
        (w,) = sub.objects_at(n)
        mids = sub.objects_at(n + 1)
        if _circles_only(sub, (z, w)):
            for m2 in mids:
                (m1,) = [m for m in mids if m != m2]
                if (
                    set(sub.moduli0) == {(z, m2), (m1, w)}
                    and _same_sign_pair(sub.points(z, m2))
                    and _same_sign_pair(sub.points(m1, w))
                ):
                    if _fr0_parity_odd(sub, (z, w)):
                        return _named("RP2^RP2", n, notes)
                    return f"Moore(Z/2,{n}) v Moore(Z/2,{n+1})"

    return f"residue({','.join(objs)})"


def recognize(cat: Category) -> Recognition:
    """Match each connected component against the catalog."""
    summands: list[str] = []
    notes: list[str] = []
    for group in cat.connected_components():
        sub = cat.restrict(group)
        summands.append(_match_component(sub, notes))
    return Recognition(tuple(summands), tuple(notes))
