"""Morse moves on framed flow categories.

Four families of moves preserve the stable invariants of a category:

* **Whitney trick** — delete a pair of opposite-sign points of one
  zero-dimensional moduli space and resew the one-dimensional spaces whose
  interval ends factored through the deleted points;
* **handle cancellation** — delete a pair of objects joined by a single
  point, replacing broken flow lines with composite points and resewn
  one-dimensional components (the signed counts change by a Gauss
  elimination step);
* **circle removal** — delete a single framing-1 circle, or a pair of
  framing-0 circles, from a moduli space whose source object is terminal;
* **summand splitting** — restrict to one connected component.

Every move is described by a :class:`Move` value, is validated before it
runs, and returns a brand-new :class:`~flowcat.model.Category`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .model import (
    NEGATIVE,
    POSITIVE,
    Category,
    Circle,
    Component,
    End,
    make_interval,
)

KIND_ORDER = {
    "whitney": 0,
    "cancel": 1,
    "remove_circle_fr1": 2,
    "remove_circle_fr0_pair": 3,
    "split_summand": 4,
}


class MoveError(ValueError):
    """A move descriptor that is malformed or does not apply."""


@dataclass(frozen=True)
class Move:
    """A move descriptor.

    Only the fields relevant to ``kind`` are set: ``whitney`` uses
    ``source``/``target``/``positive``/``negative``; ``cancel`` uses
    ``source``/``target`` and optionally ``point``; the circle removals use
    ``source``/``target``/``circles``; ``split_summand`` uses ``objects``.
    """

    kind: str
    source: Optional[str] = None
    target: Optional[str] = None
    positive: Optional[str] = None
    negative: Optional[str] = None
    point: Optional[str] = None
    circles: tuple[str, ...] = ()
    objects: tuple[str, ...] = ()

    def sort_key(self) -> tuple:
        return (
            KIND_ORDER.get(self.kind, len(KIND_ORDER)),
            self.source or "",
            self.target or "",
            self.positive or "",
            self.negative or "",
            self.point or "",
            self.circles,
            self.objects,
        )

    # -- wire formats -------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.kind == "whitney":
            out["from"] = self.source
            out["to"] = self.target
            out["positive"] = self.positive
            out["negative"] = self.negative
        elif self.kind == "cancel":
            out["from"] = self.source
            out["to"] = self.target
            if self.point is not None:
                out["point"] = self.point
        elif self.kind in ("remove_circle_fr1", "remove_circle_fr0_pair"):
            out["from"] = self.source
            out["to"] = self.target
            out["circles"] = list(self.circles)
        elif self.kind == "split_summand":
            out["objects"] = list(self.objects)
        return out

    @staticmethod
    def from_dict(data: Any) -> "Move":
        if not isinstance(data, dict):
            raise MoveError("move descriptor must be a JSON object")
        allowed = {
            "kind",
            "from",
            "to",
            "positive",
            "negative",
            "point",
            "circles",
            "objects",
            "digest",  # present in traces; carries no move content
        }
        unknown = sorted(set(data) - allowed)
        if unknown:
            raise MoveError(f"unknown move fields: {unknown}")
        kind = data.get("kind")
        if kind not in KIND_ORDER:
            raise MoveError(f"unknown move kind {kind!r}")

        def get_str(key: str, required: bool = False) -> Optional[str]:
            value = data.get(key)
            if value is None:
                if required:
                    raise MoveError(f"move field {key!r} is required for {kind}")
                return None
            if not isinstance(value, str):
                raise MoveError(f"move field {key!r} must be a string")
            return value

        if kind == "whitney":
            return Move(
                kind,
                source=get_str("from", True),
                target=get_str("to", True),
                positive=get_str("positive", True),
                negative=get_str("negative", True),
            )
        if kind == "cancel":
            return Move(
                kind,
                source=get_str("from", True),
                target=get_str("to", True),
                point=get_str("point"),
            )
        if kind in ("remove_circle_fr1", "remove_circle_fr0_pair"):
            circles = data.get("circles")
            if not isinstance(circles, list) or not all(
                isinstance(c, str) for c in circles
            ):
                raise MoveError("move field 'circles' must be a list of strings")
            want = 1 if kind == "remove_circle_fr1" else 2
            if len(circles) != want:
                raise MoveError(f"{kind} names exactly {want} circle id(s)")
            return Move(
                kind,
                source=get_str("from", True),
                target=get_str("to", True),
                circles=tuple(circles),
            )
        objects = data.get("objects")
        if (
            not isinstance(objects, list)
            or not objects
            or not all(isinstance(o, str) for o in objects)
        ):
            raise MoveError("move field 'objects' must be a nonempty list of strings")
        return Move(kind, objects=tuple(objects))

    def to_spec(self) -> str:
        """Compact one-line form, e.g. ``whitney:x,y:P,M``."""
        if self.kind == "whitney":
            return f"whitney:{self.source},{self.target}:{self.positive},{self.negative}"
        if self.kind == "cancel":
            if self.point is None:
                return f"cancel:{self.source},{self.target}"
            return f"cancel:{self.source},{self.target}:{self.point}"
        if self.kind in ("remove_circle_fr1", "remove_circle_fr0_pair"):
            return f"rmcircle:{self.source},{self.target}:{','.join(self.circles)}"
        return f"split:{','.join(self.objects)}"

    @staticmethod
    def from_spec(text: str) -> "Move":
        """Parse a compact spec.

        Forms: ``whitney:x,y:P,M`` — ``cancel:x,y[:point]`` —
        ``rmcircle:a,b:circle[,circle2]`` — ``split:obj1,obj2,...``.
        """
        parts = text.split(":")
        head = parts[0]
        try:
            if head == "whitney" and len(parts) == 3:
                x, y = parts[1].split(",")
                pos, neg = parts[2].split(",")
                return Move("whitney", source=x, target=y, positive=pos, negative=neg)
            if head == "cancel" and len(parts) in (2, 3):
                x, y = parts[1].split(",")
                point = parts[2] if len(parts) == 3 else None
                return Move("cancel", source=x, target=y, point=point)
            if head == "rmcircle" and len(parts) == 3:
                a, b = parts[1].split(",")
                circles = tuple(parts[2].split(","))
                if len(circles) == 1:
                    return Move("remove_circle_fr1", source=a, target=b, circles=circles)
                if len(circles) == 2:
                    return Move(
                        "remove_circle_fr0_pair", source=a, target=b, circles=circles
                    )
            if head == "split" and len(parts) == 2:
                objects = tuple(o for o in parts[1].split(",") if o)
                if objects:
                    return Move("split_summand", objects=objects)
        except ValueError:
            pass
        raise MoveError(
            f"bad move spec {text!r}; expected whitney:x,y:P,M | cancel:x,y[:pt]"
            " | rmcircle:a,b:id[,id2] | split:o1,o2,..."
        )

    def describe(self) -> str:
        if self.kind == "whitney":
            return (
                f"Whitney trick in M({self.source},{self.target}):"
                f" cancel {self.positive} (+) against {self.negative} (-)"
            )
        if self.kind == "cancel":
            via = f" through {self.point}" if self.point else ""
            return f"cancel {self.source} with {self.target}{via}"
        if self.kind == "remove_circle_fr1":
            return (
                f"remove framing-1 circle {self.circles[0]}"
                f" from M({self.source},{self.target})"
            )
        if self.kind == "remove_circle_fr0_pair":
            return (
                f"remove framing-0 circles {self.circles[0]} and {self.circles[1]}"
                f" from M({self.source},{self.target})"
            )
        return f"split off the summand on {', '.join(self.objects)}"


# -- enumeration -------------------------------------------------------------


def list_moves(cat: Category) -> list[Move]:
    """Every move applicable to ``cat``, in deterministic order.

    Whitney descriptors pair the lexicographically first positive point of a
    mixed-sign space with its first negative point (applying one such move
    can enable or reshuffle the rest, so enumerating all pairs would be
    noise).  Splits are listed only when there are at least two components.
    """
    moves: list[Move] = []
    for (x, y) in sorted(cat.moduli0):
        points = cat.moduli0[(x, y)]
        pos = sorted(p for p, s in points.items() if s == POSITIVE)
        neg = sorted(p for p, s in points.items() if s == NEGATIVE)
        if pos and neg:
            moves.append(
                Move("whitney", source=x, target=y, positive=pos[0], negative=neg[0])
            )
        if len(points) == 1:
            (pid,) = points
            moves.append(Move("cancel", source=x, target=y, point=pid))
    for (a, b) in sorted(cat.moduli1):
        if not cat.is_terminal(a):
            continue
        space = cat.moduli1[(a, b)]
        fr1 = sorted(
            cid
            for cid, comp in space.items()
            if isinstance(comp, Circle) and comp.framing == 1
        )
        fr0 = sorted(
            cid
            for cid, comp in space.items()
            if isinstance(comp, Circle) and comp.framing == 0
        )
        for cid in fr1:
            moves.append(Move("remove_circle_fr1", source=a, target=b, circles=(cid,)))
        for i in range(len(fr0)):
            for j in range(i + 1, len(fr0)):
                moves.append(
                    Move(
                        "remove_circle_fr0_pair",
                        source=a,
                        target=b,
                        circles=(fr0[i], fr0[j]),
                    )
                )
    components = cat.connected_components()
    if len(components) >= 2:
        for group in components:
            moves.append(Move("split_summand", objects=tuple(group)))
    moves.sort(key=lambda m: (m.sort_key()[0], _fill_in(cat, m)) + m.sort_key()[1:])
    return moves


def _fill_in(cat: Category, move: Move) -> int:
    """Number of composite points the move would mint.

    Cancelling (x, y) replaces broken flow lines by products
    M(x, v) x M(u, y), so it fills in one new point per such pair — the
    Markowitz cost of the pivot, in sparse-elimination terms.  Listing
    cheap cancellations first keeps the differential sparse and, just as
    importantly, spends objects whose only remaining neighbour is the
    cancellation partner before that partner is consumed by someone else;
    otherwise their one-dimensional moduli can end up stranded on an
    isolated pair of objects where no further move reaches them.  Moves
    other than cancellation never mint points and cost 0.
    """
    if move.kind != "cancel":
        return 0
    x, y = move.source, move.target
    cols = sum(
        len(pts) for (s, t), pts in cat.moduli0.items() if s == x and t != y
    )
    rows = sum(
        len(pts) for (s, t), pts in cat.moduli0.items() if t == y and s != x
    )
    return rows * cols


# -- sewing machinery ---------------------------------------------------------
#
# Both the Whitney trick and handle cancellation rewrite one-dimensional
# moduli spaces the same way: the space's components are cut into *pieces*
# (old components, plus freshly minted pieces for cancellation), certain
# interval ends become *junction slots*, and each junction identifies the
# two slots carrying the same label, adding its own weight to the framing of
# the glued result.  Pieces chained by junctions merge; a closed chain
# becomes a circle, an open one an interval with the surviving free ends.


@dataclass
class _Piece:
    order: tuple
    weight: int
    slots: list = field(default_factory=list)
    free: list = field(default_factory=list)
    keep: Optional[Component] = None  # original component, reusable if untouched


class _Minter:
    """Mints ``g0, g1, ...`` ids; one counter for the whole move."""

    def __init__(self) -> None:
        self.n = 0

    def mint(self, avoid: set[str]) -> str:
        while True:
            cid = f"g{self.n}"
            self.n += 1
            if cid not in avoid:
                return cid


def _sew(
    pieces: list[_Piece],
    junction_weights: dict[Any, int],
    old_ids: set[str],
    minter: _Minter,
) -> dict[str, Component]:
    """Glue pieces along matching junction slots into a new space."""
    owners: dict[Any, list[int]] = {}
    for idx, piece in enumerate(pieces):
        for label in piece.slots:
            owners.setdefault(label, []).append(idx)
    for label in junction_weights:
        count = len(owners.get(label, []))
        if count != 2:
            raise MoveError(
                f"junction {label!r} matches {count} interval end(s), expected 2;"
                " the category's boundary structure does not support this move"
            )
    for label in owners:
        if label not in junction_weights:
            raise MoveError(f"interval end slot {label!r} has no junction")

    parent = list(range(len(pieces)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for pair in owners.values():
        ra, rb = find(pair[0]), find(pair[1])
        if ra != rb:
            parent[ra] = rb

    clusters: dict[int, list[int]] = {}
    for idx in range(len(pieces)):
        clusters.setdefault(find(idx), []).append(idx)
    junction_total: dict[int, int] = {}
    for label, pair in owners.items():
        root = find(pair[0])
        junction_total[root] = junction_total.get(root, 0) + junction_weights[label]

    out: dict[str, Component] = {}
    ordered = sorted(clusters.items(), key=lambda kv: min(pieces[i].order for i in kv[1]))
    for root, members in ordered:
        if len(members) == 1:
            piece = pieces[members[0]]
            if piece.keep is not None and not piece.slots:
                out[piece.keep.id] = piece.keep
                continue
        weight = sum(pieces[i].weight for i in members) + junction_total.get(root, 0)
        weight %= 2
        free = [end for i in members for end in pieces[i].free]
        cid = minter.mint(old_ids | set(out))
        if not free:
            out[cid] = Circle(cid, weight)
        elif len(free) == 2:
            out[cid] = make_interval(cid, weight, free[0], free[1])
        else:
            raise MoveError(
                f"sewing produced a component with {len(free)} loose ends;"
                " the category's boundary structure does not support this move"
            )
    return out


# -- the Whitney trick --------------------------------------------------------


def _apply_whitney(cat: Category, move: Move) -> Category:
    x, y = move.source, move.target
    pos, neg = move.positive, move.negative
    points = cat.points(x, y)
    if x not in cat.objects or y not in cat.objects:
        raise MoveError(f"unknown object in whitney move: M({x},{y})")
    if pos not in points or points[pos] != POSITIVE:
        raise MoveError(f"M({x},{y}) has no positive point {pos!r}")
    if neg not in points or points[neg] != NEGATIVE:
        raise MoveError(f"M({x},{y}) has no negative point {neg!r}")

    out = cat.clone()
    del out.moduli0[(x, y)][pos]
    del out.moduli0[(x, y)][neg]
    if not out.moduli0[(x, y)]:
        del out.moduli0[(x, y)]

    # Spaces to resew: M(a, y) for a flowing into x (one junction per point
    # of M(a, x)), and M(x, b) for b receiving y (one junction per point of
    # M(y, b)).  Junction framing weights: on the a-side a junction counts 1
    # exactly when its point of M(a, x) is negative; on the b-side exactly
    # when its point of M(y, b) is positive.
    jobs: list[tuple[tuple[str, str], str, dict[Any, int]]] = []
    deg_x = cat.objects[x].degree
    deg_y = cat.objects[y].degree
    for a in cat.objects_at(deg_x + 1):
        upstream = cat.points(a, x)
        if upstream:
            weights = {
                ("a", p): (1 if sign == NEGATIVE else 0)
                for p, sign in upstream.items()
            }
            jobs.append(((a, y), "a", weights))
    for b in cat.objects_at(deg_y - 1):
        downstream = cat.points(y, b)
        if downstream:
            weights = {
                ("b", q): (1 if sign == POSITIVE else 0)
                for q, sign in downstream.items()
            }
            jobs.append(((x, b), "b", weights))

    minter = _Minter()
    for key, side, weights in sorted(jobs, key=lambda job: job[0]):
        space = cat.components(*key)
        pieces: list[_Piece] = []
        for cid in sorted(space):
            comp = space[cid]
            if isinstance(comp, Circle):
                pieces.append(_Piece(order=(0, cid), weight=comp.framing, keep=comp))
                continue
            slots = []
            free = []
            for end in comp.ends():
                if side == "a" and end.mid == x and end.lower in (pos, neg):
                    slots.append(("a", end.upper))
                elif side == "b" and end.mid == y and end.upper in (pos, neg):
                    slots.append(("b", end.lower))
                else:
                    free.append(end)
            pieces.append(
                _Piece(
                    order=(0, cid), weight=comp.framing, slots=slots, free=free, keep=comp
                )
            )
        sewn = _sew(pieces, weights, set(space), minter)
        if sewn:
            out.moduli1[key] = sewn
        elif key in out.moduli1:
            del out.moduli1[key]
    return out


# -- handle cancellation ------------------------------------------------------


def _apply_cancel(cat: Category, move: Move) -> Category:
    x, y = move.source, move.target
    if x not in cat.objects or y not in cat.objects:
        raise MoveError(f"unknown object in cancel move: ({x},{y})")
    points = cat.points(x, y)
    if move.point is not None:
        if move.point not in points:
            raise MoveError(f"M({x},{y}) has no point {move.point!r}")
        if len(points) != 1:
            raise MoveError(
                f"cancel needs M({x},{y}) to be a single point;"
                f" it has {len(points)}"
            )
        star = move.point
    else:
        if len(points) != 1:
            raise MoveError(
                f"cancel needs M({x},{y}) to be a single point; it has {len(points)}"
            )
        (star,) = points
    e_star = points[star]
    deg_x = cat.objects[x].degree
    deg_y = cat.objects[y].degree
    if deg_x - deg_y != 1:
        raise MoveError(
            f"cancel needs adjacent degrees; {x} has {deg_x}, {y} has {deg_y}"
        )

    out = cat.clone()

    # Composite points: for u of degree |x| and v of degree |y|, each pair
    # (B, A) in M(x,v) x M(u,y) mints a point "B.A" of M(u,v) with sign
    # 1 + e(B) + e(*) + e(A); on signed counts this is Gauss elimination of
    # the unit entry at (x, y).
    prod: dict[tuple[str, str, str, str], str] = {}
    u_list = [u for u in cat.objects_at(deg_x) if u != x]
    v_list = [v for v in cat.objects_at(deg_y) if v != y]
    for u in u_list:
        a_pts = cat.points(u, y)
        if not a_pts:
            continue
        for v in v_list:
            b_pts = cat.points(x, v)
            if not b_pts:
                continue
            space = out.moduli0.setdefault((u, v), {})
            for b_id in sorted(b_pts):
                for a_id in sorted(a_pts):
                    pid = _mint_point_id(space, f"{b_id}.{a_id}")
                    space[pid] = (1 + b_pts[b_id] + e_star + a_pts[a_id]) % 2
                    prod[(u, v, b_id, a_id)] = pid

    # One-dimensional resewing, two disjoint families of spaces:
    #   (i)  M(a, b) for deg a = |x|+1, deg b = |y|, b != y: glue in a copy
    #        of M(a, y) for every point B of M(x, b);
    #   (ii) M(a, b) for deg a = |x|, a != x, deg b = |y|-1: glue in a copy
    #        of M(x, b) for every point A of M(a, y).
    jobs: list[tuple[tuple[str, str], list[_Piece], dict[Any, int], set[str]]] = []

    for a in cat.objects_at(deg_x + 1):
        j_comps = cat.components(a, y)
        for b in v_list:
            b_pts = cat.points(x, b)
            old = cat.components(a, b)
            if not (b_pts and j_comps):
                continue
            weights: dict[Any, int] = {}
            pieces: list[_Piece] = []
            for cid in sorted(old):
                comp = old[cid]
                if isinstance(comp, Circle):
                    pieces.append(_Piece(order=(0, cid), weight=comp.framing, keep=comp))
                    continue
                slots = []
                free = []
                for end in comp.ends():
                    if end.mid == x:
                        lab = ("i", end.lower, end.upper)
                        slots.append(lab)
                        weights[lab] = b_pts[end.lower]
                    else:
                        free.append(end)
                pieces.append(
                    _Piece(
                        order=(0, cid),
                        weight=comp.framing,
                        slots=slots,
                        free=free,
                        keep=comp,
                    )
                )
            for b_id in sorted(b_pts):
                e_b = b_pts[b_id]
                for jid in sorted(j_comps):
                    comp = j_comps[jid]
                    if isinstance(comp, Circle):
                        pieces.append(
                            _Piece(order=(1, b_id, jid), weight=comp.framing)
                        )
                        continue
                    weight = (comp.framing + 1 + e_star + e_b) % 2
                    slots = []
                    free = []
                    for end in comp.ends():
                        if end.mid == x:
                            lab = ("i", b_id, end.upper)
                            slots.append(lab)
                            weights[lab] = e_b
                        else:
                            free.append(
                                End(
                                    end.mid,
                                    prod[(end.mid, b, b_id, end.lower)],
                                    end.upper,
                                )
                            )
                    pieces.append(
                        _Piece(
                            order=(1, b_id, jid), weight=weight, slots=slots, free=free
                        )
                    )
            jobs.append(((a, b), pieces, weights, set(old)))

    for a in u_list:
        a_pts = cat.points(a, y)
        if not a_pts:
            continue
        for b in cat.objects_at(deg_y - 1):
            j_comps = cat.components(x, b)
            old = cat.components(a, b)
            if not j_comps:
                continue
            y_pts = cat.points(y, b)
            weights = {}
            pieces = []
            for cid in sorted(old):
                comp = old[cid]
                if isinstance(comp, Circle):
                    pieces.append(_Piece(order=(0, cid), weight=comp.framing, keep=comp))
                    continue
                slots = []
                free = []
                for end in comp.ends():
                    if end.mid == y:
                        lab = ("ii", end.lower, end.upper)
                        slots.append(lab)
                        weights[lab] = (e_star + y_pts[end.lower]) % 2
                    else:
                        free.append(end)
                pieces.append(
                    _Piece(
                        order=(0, cid),
                        weight=comp.framing,
                        slots=slots,
                        free=free,
                        keep=comp,
                    )
                )
            for jid in sorted(j_comps):
                comp = j_comps[jid]
                for a_id in sorted(a_pts):
                    if isinstance(comp, Circle):
                        pieces.append(_Piece(order=(1, jid, a_id), weight=comp.framing))
                        continue
                    slots = []
                    free = []
                    for end in comp.ends():
                        if end.mid == y:
                            lab = ("ii", end.lower, a_id)
                            slots.append(lab)
                            weights[lab] = (e_star + y_pts[end.lower]) % 2
                        else:
                            free.append(
                                End(
                                    end.mid,
                                    end.lower,
                                    prod[(a, end.mid, end.upper, a_id)],
                                )
                            )
                    pieces.append(
                        _Piece(
                            order=(1, jid, a_id),
                            weight=comp.framing,
                            slots=slots,
                            free=free,
                        )
                    )
            jobs.append(((a, b), pieces, weights, set(old)))

    minter = _Minter()
    for key, pieces, weights, old_ids in sorted(jobs, key=lambda j: j[0]):
        sewn = _sew(pieces, weights, old_ids, minter)
        if sewn:
            out.moduli1[key] = sewn
        elif key in out.moduli1:
            del out.moduli1[key]

    del out.objects[x]
    del out.objects[y]
    out.moduli0 = {
        key: space for key, space in out.moduli0.items() if x not in key and y not in key
    }
    out.moduli1 = {
        key: space for key, space in out.moduli1.items() if x not in key and y not in key
    }
    return out


def _mint_point_id(space: dict[str, int], base: str) -> str:
    if base not in space:
        return base
    n = 2
    while f"{base}:{n}" in space:
        n += 1
    return f"{base}:{n}"


# -- circle removal -----------------------------------------------------------


def _get_circle(cat: Category, a: str, b: str, cid: str) -> Circle:
    comp = cat.components(a, b).get(cid)
    if comp is None:
        raise MoveError(f"M({a},{b}) has no component {cid!r}")
    if not isinstance(comp, Circle):
        raise MoveError(f"component {cid!r} of M({a},{b}) is not a circle")
    return comp


def _require_terminal(cat: Category, a: str) -> None:
    if a not in cat.objects:
        raise MoveError(f"unknown object {a!r}")
    if not cat.is_terminal(a):
        raise MoveError(
            f"circle removal needs a terminal source; {a!r} has incoming flows"
        )


def _apply_remove_fr1(cat: Category, move: Move) -> Category:
    a, b = move.source, move.target
    _require_terminal(cat, a)
    circle = _get_circle(cat, a, b, move.circles[0])
    if circle.framing != 1:
        raise MoveError(f"circle {circle.id!r} in M({a},{b}) has framing 0, expected 1")
    out = cat.clone()
    del out.moduli1[(a, b)][circle.id]
    if not out.moduli1[(a, b)]:
        del out.moduli1[(a, b)]
    return out


def _apply_remove_fr0_pair(cat: Category, move: Move) -> Category:
    a, b = move.source, move.target
    _require_terminal(cat, a)
    c1, c2 = move.circles
    if c1 == c2:
        raise MoveError("framing-0 removal needs two distinct circles")
    first = _get_circle(cat, a, b, c1)
    second = _get_circle(cat, a, b, c2)
    for circle in (first, second):
        if circle.framing != 0:
            raise MoveError(
                f"circle {circle.id!r} in M({a},{b}) has framing 1, expected 0"
            )
    out = cat.clone()
    del out.moduli1[(a, b)][c1]
    del out.moduli1[(a, b)][c2]
    if not out.moduli1[(a, b)]:
        del out.moduli1[(a, b)]
    return out


# -- summand splitting ---------------------------------------------------------


def _apply_split(cat: Category, move: Move) -> Category:
    wanted = sorted(move.objects)
    if len(set(wanted)) != len(wanted):
        raise MoveError("split names a repeated object")
    for group in cat.connected_components():
        if group == wanted:
            return cat.restrict(wanted)
    raise MoveError(
        f"objects {','.join(wanted)} are not exactly one connected component"
    )


# -- dispatch -------------------------------------------------------------------


_APPLY = {
    "whitney": _apply_whitney,
    "cancel": _apply_cancel,
    "remove_circle_fr1": _apply_remove_fr1,
    "remove_circle_fr0_pair": _apply_remove_fr0_pair,
    "split_summand": _apply_split,
}


def apply_move(cat: Category, move: Move) -> Category:
    """Apply one move, returning a new category (the input is untouched)."""
    handler = _APPLY.get(move.kind)
    if handler is None:
        raise MoveError(f"unknown move kind {move.kind!r}")
    return handler(cat, move)
