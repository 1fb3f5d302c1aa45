"""Core data model for framed flow categories truncated at dimension one.

A category here consists of:

* finitely many objects, each with an integer (cohomological) degree and
  optionally a quantum grading and a display label;
* zero-dimensional moduli spaces ``M(x, y)`` for pairs of objects whose
  degrees differ by exactly one (``deg x - deg y == 1``): finite sets of
  signed points (sign ``+`` or ``-``);
* one-dimensional moduli spaces ``M(a, b)`` for pairs whose degrees differ
  by exactly two: disjoint unions of framed compact 1-manifolds, i.e.
  intervals and circles, each carrying a framing bit in ``{0, 1}``.

An interval end is a *composite point*: a pair of points ``(lower, upper)``
with ``lower`` in ``M(c, b)`` and ``upper`` in ``M(a, c)`` for some
intermediate object ``c``.  The boundary-matching invariant says that the
ends of the intervals of ``M(a, b)``, taken together, enumerate every
composite point exactly once; the end-sign invariant says the two ends of
any single interval carry opposite product signs.  Together these force the
signed point counts to square to zero, so every category carries a cochain
complex over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

POSITIVE = 0
NEGATIVE = 1

SIGN_CHAR = {POSITIVE: "+", NEGATIVE: "-"}
CHAR_SIGN = {"+": POSITIVE, "-": NEGATIVE}


@dataclass(frozen=True)
class Obj:
    """An object of the category."""

    id: str
    degree: int
    quantum: Optional[int] = None
    label: Optional[str] = None


class End(NamedTuple):
    """One end of an interval: the composite point ``(lower, upper)`` broken
    over the intermediate object ``mid``.

    ``lower`` names a point of ``M(mid, b)`` and ``upper`` a point of
    ``M(a, mid)`` when the interval lives in ``M(a, b)``.
    """

    mid: str
    lower: str
    upper: str


@dataclass(frozen=True)
class Interval:
    """A framed interval component of a one-dimensional moduli space."""

    id: str
    framing: int
    start: End
    end: End

    def ends(self) -> tuple[End, End]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Circle:
    """A framed circle component of a one-dimensional moduli space."""

    id: str
    framing: int


Component = Union[Interval, Circle]


def make_interval(cid: str, framing: int, e1: End, e2: End) -> Interval:
    """Build an interval with its two ends in canonical order."""
    if tuple(e2) < tuple(e1):
        e1, e2 = e2, e1
    return Interval(cid, framing, e1, e2)


class Category:
    """A framed flow category with moduli data up to dimension one.

    ``objects`` maps object id to :class:`Obj`.  ``moduli0`` maps an ordered
    pair ``(from_id, to_id)`` (degree gap one) to ``{point_id: sign}``.
    ``moduli1`` maps a pair with degree gap two to ``{component_id:
    Interval | Circle}``.  Empty spaces are never stored.
    """

    def __init__(self) -> None:
        self.objects: dict[str, Obj] = {}
        self.moduli0: dict[tuple[str, str], dict[str, int]] = {}
        self.moduli1: dict[tuple[str, str], dict[str, Component]] = {}

    # -- construction -----------------------------------------------------

    def add_object(
        self,
        oid: str,
        degree: int,
        quantum: Optional[int] = None,
        label: Optional[str] = None,
    ) -> Obj:
        if oid in self.objects:
            raise ValueError(f"duplicate object id {oid!r}")
        obj = Obj(oid, degree, quantum, label)
        self.objects[oid] = obj
        return obj

    def add_point(self, frm: str, to: str, pid: str, sign: int) -> None:
        space = self.moduli0.setdefault((frm, to), {})
        if pid in space:
            raise ValueError(f"duplicate point id {pid!r} in M({frm},{to})")
        space[pid] = sign

    def add_points(self, frm: str, to: str, *points: tuple[str, int]) -> None:
        for pid, sign in points:
            self.add_point(frm, to, pid, sign)

    def add_interval(
        self, frm: str, to: str, cid: str, framing: int, e1: End, e2: End
    ) -> None:
        space = self.moduli1.setdefault((frm, to), {})
        if cid in space:
            raise ValueError(f"duplicate component id {cid!r} in M({frm},{to})")
        space[cid] = make_interval(cid, framing, e1, e2)

    def add_circle(self, frm: str, to: str, cid: str, framing: int) -> None:
        space = self.moduli1.setdefault((frm, to), {})
        if cid in space:
            raise ValueError(f"duplicate component id {cid!r} in M({frm},{to})")
        space[cid] = Circle(cid, framing)

    # -- access ------------------------------------------------------------

    def points(self, frm: str, to: str) -> dict[str, int]:
        return self.moduli0.get((frm, to), {})

    def components(self, frm: str, to: str) -> dict[str, Component]:
        return self.moduli1.get((frm, to), {})

    def signed_count(self, frm: str, to: str) -> int:
        """Number of positive minus number of negative points of M(frm, to)."""
        total = 0
        for sign in self.points(frm, to).values():
            total += 1 if sign == POSITIVE else -1
        return total

    def degrees(self) -> list[int]:
        return sorted({o.degree for o in self.objects.values()})

    def objects_at(self, degree: int) -> list[str]:
        return sorted(o.id for o in self.objects.values() if o.degree == degree)

    def clone(self) -> "Category":
        other = Category()
        other.objects = dict(self.objects)
        other.moduli0 = {key: dict(space) for key, space in self.moduli0.items()}
        other.moduli1 = {key: dict(space) for key, space in self.moduli1.items()}
        return other

    def stats(self) -> tuple[int, int, int]:
        """(object count, total point count, total 1-dimensional components)."""
        npts = sum(len(s) for s in self.moduli0.values())
        ncomp = sum(len(s) for s in self.moduli1.values())
        return (len(self.objects), npts, ncomp)

    def is_terminal(self, oid: str) -> bool:
        """True when no moduli space flows *into* ``oid`` from above."""
        for (frm, to) in self.moduli0:
            if to == oid and self.moduli0[(frm, to)]:
                return False
        for (frm, to) in self.moduli1:
            if to == oid and self.moduli1[(frm, to)]:
                return False
        return True

    # -- composite points ---------------------------------------------------

    def composite_ends(self, frm: str, to: str) -> list[End]:
        """All composite points of the degree-gap-two pair ``(frm, to)``.

        These are exactly the ends the intervals of ``M(frm, to)`` must
        enumerate once each.
        """
        da = self.objects[frm].degree
        out: list[End] = []
        for mid in sorted(self.objects):
            if self.objects[mid].degree != da - 1:
                continue
            lowers = self.points(mid, to)
            uppers = self.points(frm, mid)
            for lower in sorted(lowers):
                for upper in sorted(uppers):
                    out.append(End(mid, lower, upper))
        return out

    def end_sign(self, frm: str, to: str, end: End) -> int:
        """Product sign of a composite end (sum of factor signs mod 2)."""
        lower_sign = self.points(end.mid, to)[end.lower]
        upper_sign = self.points(frm, end.mid)[end.upper]
        return (lower_sign + upper_sign) % 2

    def gap2_pairs(self) -> Iterator[tuple[str, str]]:
        """All object pairs with degree gap two, sorted."""
        by_degree: dict[int, list[str]] = {}
        for o in self.objects.values():
            by_degree.setdefault(o.degree, []).append(o.id)
        for deg in sorted(by_degree):
            uppers = by_degree.get(deg + 2)
            if not uppers:
                continue
            for frm in sorted(uppers):
                for to in sorted(by_degree[deg]):
                    yield (frm, to)

    # -- components of the category itself ----------------------------------

    def connected_components(self) -> list[list[str]]:
        """Objects grouped by connectivity through nonempty moduli spaces.

        Returned as sorted id lists, ordered by (minimum degree, minimum id).
        """
        parent = {oid: oid for oid in self.objects}

        def find(u: str) -> str:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u: str, v: str) -> None:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        for (frm, to), space in self.moduli0.items():
            if space:
                union(frm, to)
        for (frm, to), space in self.moduli1.items():
            if space:
                union(frm, to)
        groups: dict[str, list[str]] = {}
        for oid in self.objects:
            groups.setdefault(find(oid), []).append(oid)
        comps = [sorted(g) for g in groups.values()]
        comps.sort(key=lambda g: (min(self.objects[o].degree for o in g), g[0]))
        return comps

    def restrict(self, object_ids: list[str]) -> "Category":
        """The full subcategory on the given objects."""
        keep = set(object_ids)
        missing = keep - set(self.objects)
        if missing:
            raise KeyError(f"unknown object ids: {sorted(missing)}")
        sub = Category()
        for oid in sorted(keep):
            sub.objects[oid] = self.objects[oid]
        for key, space in self.moduli0.items():
            if key[0] in keep and key[1] in keep and space:
                sub.moduli0[key] = dict(space)
        for key, space in self.moduli1.items():
            if key[0] in keep and key[1] in keep and space:
                sub.moduli1[key] = dict(space)
        return sub


class InvalidCategory(ValueError):
    """Raised by :func:`check` when a category violates an invariant."""

    def __init__(self, errors: list[str]):
        self.errors = errors
        super().__init__("; ".join(errors))


def _space_name(key: tuple[str, str]) -> str:
    return f"M({key[0]},{key[1]})"


def validate(cat: Category) -> list[str]:
    """Check every structural invariant; return a list of violation messages.

    The checks, in order:

    * ``structure``: spaces connect existing, distinct objects with the
      right degree gap; signs and framings are bits; interval ends name an
      intermediate object of the middle degree and existing points.
    * ``boundary-matching``: the interval ends of each gap-two space
      enumerate each composite point exactly once.
    * ``end-signs``: the two ends of each interval have opposite product
      signs.
    * ``delta-squared``: signed point counts compose to zero across any
      degree-two gap (implied by the two previous checks; reported
      separately because it pins down the numerical failure).
    """
    errors: list[str] = []

    for (frm, to), space in sorted(cat.moduli0.items()):
        name = _space_name((frm, to))
        if frm not in cat.objects or to not in cat.objects:
            errors.append(f"structure: {name}: unknown object")
            continue
        if frm == to:
            errors.append(f"structure: {name}: moduli space on a single object")
            continue
        if not space:
            errors.append(f"structure: {name}: empty space stored")
            continue
        gap = cat.objects[frm].degree - cat.objects[to].degree
        if gap != 1:
            errors.append(
                f"structure: {name}: degree gap is {gap}, expected 1 for points"
            )
        for pid, sign in space.items():
            if sign not in (POSITIVE, NEGATIVE):
                errors.append(f"structure: {name}: point {pid!r} has sign {sign!r}")

    for (frm, to), space in sorted(cat.moduli1.items()):
        name = _space_name((frm, to))
        if frm not in cat.objects or to not in cat.objects:
            errors.append(f"structure: {name}: unknown object")
            continue
        if frm == to:
            errors.append(f"structure: {name}: moduli space on a single object")
            continue
        if not space:
            errors.append(f"structure: {name}: empty space stored")
            continue
        gap = cat.objects[frm].degree - cat.objects[to].degree
        if gap != 2:
            errors.append(
                f"structure: {name}: degree gap is {gap}, expected 2 for"
                " one-dimensional components"
            )
            continue
        mid_degree = cat.objects[to].degree + 1
        for cid, comp in sorted(space.items()):
            if comp.framing not in (0, 1):
                errors.append(
                    f"structure: {name}: component {cid!r} framing {comp.framing!r}"
                )
            if isinstance(comp, Circle):
                continue
            for which, end in (("start", comp.start), ("end", comp.end)):
                mid = end.mid
                if mid not in cat.objects:
                    errors.append(
                        f"structure: {name}: interval {cid!r} {which} has unknown"
                        f" intermediate object {mid!r}"
                    )
                    continue
                if cat.objects[mid].degree != mid_degree:
                    errors.append(
                        f"structure: {name}: interval {cid!r} {which} breaks over"
                        f" {mid!r} of degree {cat.objects[mid].degree},"
                        f" expected {mid_degree}"
                    )
                    continue
                if end.lower not in cat.points(mid, to):
                    errors.append(
                        f"structure: {name}: interval {cid!r} {which} lower point"
                        f" {end.lower!r} not in {_space_name((mid, to))}"
                    )
                if end.upper not in cat.points(frm, mid):
                    errors.append(
                        f"structure: {name}: interval {cid!r} {which} upper point"
                        f" {end.upper!r} not in {_space_name((frm, mid))}"
                    )

    if errors:
        # Reference errors make the remaining checks unreliable; stop here.
        return errors

    # boundary-matching: interval ends of every gap-two pair enumerate the
    # composite points exactly once (pairs with no stored space included).
    for frm, to in cat.gap2_pairs():
        name = _space_name((frm, to))
        expected = cat.composite_ends(frm, to)
        seen: dict[End, int] = {}
        for comp in cat.components(frm, to).values():
            if isinstance(comp, Interval):
                for end in comp.ends():
                    seen[end] = seen.get(end, 0) + 1
        for end in expected:
            count = seen.pop(end, 0)
            if count != 1:
                errors.append(
                    f"boundary-matching: {name}: composite end (mid={end.mid},"
                    f" lower={end.lower}, upper={end.upper}) appears {count}"
                    " times, expected exactly once"
                )
        for end, count in sorted(seen.items()):
            errors.append(
                f"boundary-matching: {name}: interval end (mid={end.mid},"
                f" lower={end.lower}, upper={end.upper}) matches no composite"
                " point"
            )

    # end-signs: the two ends of an interval carry opposite product signs.
    for (frm, to), space in sorted(cat.moduli1.items()):
        name = _space_name((frm, to))
        for cid, comp in sorted(space.items()):
            if not isinstance(comp, Interval):
                continue
            try:
                s1 = cat.end_sign(frm, to, comp.start)
                s2 = cat.end_sign(frm, to, comp.end)
            except KeyError:
                continue  # already reported as a structure error
            if (s1 + s2) % 2 != 1:
                errors.append(
                    f"end-signs: {name}: interval {cid!r} has ends of equal"
                    f" product sign {SIGN_CHAR[s1]}"
                )

    # delta-squared: signed counts compose to zero.
    for frm, to in cat.gap2_pairs():
        total = 0
        mid_degree = cat.objects[to].degree + 1
        for mid in cat.objects_at(mid_degree):
            total += cat.signed_count(frm, mid) * cat.signed_count(mid, to)
        if total != 0:
            errors.append(
                f"delta-squared: {_space_name((frm, to))}: signed counts"
                f" compose to {total}, expected 0"
            )

    return errors


def check(cat: Category) -> None:
    """Raise :class:`InvalidCategory` if any invariant fails."""
    errors = validate(cat)
    if errors:
        raise InvalidCategory(errors)
