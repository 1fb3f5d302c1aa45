"""Canonical JSON serialization for framed flow categories.

The on-disk format (``.ffc``) is a single JSON object::

    {
      "objects": [{"id": "a", "degree": 2, "quantum": 11, "label": "+"}, ...],
      "moduli0": [{"from": "b", "to": "a",
                   "points": [{"id": "p", "sign": "+"}, ...]}, ...],
      "moduli1": [{"from": "c", "to": "a",
                   "components": [
                     {"kind": "interval", "id": "e0", "framing": 0,
                      "start": {"mid": "b", "lower": "p", "upper": "P"},
                      "end":   {"mid": "b'", "lower": "q", "upper": "Q"}},
                     {"kind": "circle", "id": "c0", "framing": 1}]}, ...]
    }

``quantum`` and ``label`` are optional.  Encoding is canonical — objects
sorted by id, spaces by (from, to), points and components by id, interval
ends ordered, keys sorted, two-space indent, trailing newline — so equal
categories produce byte-identical files and a stable SHA-256 digest.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .model import CHAR_SIGN, SIGN_CHAR, Category, Circle, End, Interval, make_interval


class DecodeError(ValueError):
    """Raised when input JSON does not describe a category.

    ``path`` locates the offending element, e.g. ``moduli0[3].points[1].sign``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _end_dict(end: End) -> dict[str, str]:
    return {"mid": end.mid, "lower": end.lower, "upper": end.upper}


def to_jsonable(cat: Category) -> dict[str, Any]:
    """The canonical plain-dict form of a category."""
    objects = []
    for oid in sorted(cat.objects):
        obj = cat.objects[oid]
        entry: dict[str, Any] = {"id": obj.id, "degree": obj.degree}
        if obj.quantum is not None:
            entry["quantum"] = obj.quantum
        if obj.label is not None:
            entry["label"] = obj.label
        objects.append(entry)

    moduli0 = []
    for (frm, to) in sorted(cat.moduli0):
        space = cat.moduli0[(frm, to)]
        if not space:
            continue
        moduli0.append(
            {
                "from": frm,
                "to": to,
                "points": [
                    {"id": pid, "sign": SIGN_CHAR[space[pid]]}
                    for pid in sorted(space)
                ],
            }
        )

    moduli1 = []
    for (frm, to) in sorted(cat.moduli1):
        space = cat.moduli1[(frm, to)]
        if not space:
            continue
        comps: list[dict[str, Any]] = []
        for cid in sorted(space):
            comp = space[cid]
            if isinstance(comp, Interval):
                comps.append(
                    {
                        "kind": "interval",
                        "id": comp.id,
                        "framing": comp.framing,
                        "start": _end_dict(comp.start),
                        "end": _end_dict(comp.end),
                    }
                )
            else:
                comps.append(
                    {"kind": "circle", "id": comp.id, "framing": comp.framing}
                )
        moduli1.append({"from": frm, "to": to, "components": comps})

    return {"objects": objects, "moduli0": moduli0, "moduli1": moduli1}


def encode(cat: Category) -> str:
    """Canonical JSON text for a category (deterministic, newline-terminated)."""
    return json.dumps(to_jsonable(cat), sort_keys=True, indent=2) + "\n"


def digest(cat: Category) -> str:
    """SHA-256 hex digest of the canonical encoding."""
    return hashlib.sha256(encode(cat).encode("utf-8")).hexdigest()


def _expect_dict(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise DecodeError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise DecodeError(path, f"expected an array, got {type(value).__name__}")
    return value


def _expect_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise DecodeError(path, f"expected a string, got {type(value).__name__}")
    return value


def _expect_int(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DecodeError(path, f"expected an integer, got {type(value).__name__}")
    return value


def _check_keys(entry: dict, allowed: set[str], required: set[str], path: str) -> None:
    for key in entry:
        if key not in allowed:
            raise DecodeError(path, f"unknown field {key!r}")
    for key in required:
        if key not in entry:
            raise DecodeError(path, f"missing field {key!r}")


def _decode_end(value: Any, cat: Category, path: str) -> End:
    entry = _expect_dict(value, path)
    _check_keys(entry, {"mid", "lower", "upper"}, {"mid", "lower", "upper"}, path)
    mid = _expect_str(entry["mid"], f"{path}.mid")
    lower = _expect_str(entry["lower"], f"{path}.lower")
    upper = _expect_str(entry["upper"], f"{path}.upper")
    if mid not in cat.objects:
        raise DecodeError(f"{path}.mid", f"unknown object {mid!r}")
    return End(mid, lower, upper)


def from_jsonable(data: Any) -> Category:
    """Decode a plain-dict category, rejecting malformed input with paths."""
    root = _expect_dict(data, "")
    _check_keys(root, {"objects", "moduli0", "moduli1"}, {"objects"}, "")

    cat = Category()
    for i, raw in enumerate(_expect_list(root["objects"], "objects")):
        path = f"objects[{i}]"
        entry = _expect_dict(raw, path)
        _check_keys(entry, {"id", "degree", "quantum", "label"}, {"id", "degree"}, path)
        oid = _expect_str(entry["id"], f"{path}.id")
        degree = _expect_int(entry["degree"], f"{path}.degree")
        quantum = (
            _expect_int(entry["quantum"], f"{path}.quantum")
            if "quantum" in entry
            else None
        )
        label = (
            _expect_str(entry["label"], f"{path}.label") if "label" in entry else None
        )
        if oid in cat.objects:
            raise DecodeError(f"{path}.id", f"duplicate object id {oid!r}")
        cat.add_object(oid, degree, quantum, label)

    for i, raw in enumerate(_expect_list(root.get("moduli0", []), "moduli0")):
        path = f"moduli0[{i}]"
        entry = _expect_dict(raw, path)
        _check_keys(entry, {"from", "to", "points"}, {"from", "to", "points"}, path)
        frm = _expect_str(entry["from"], f"{path}.from")
        to = _expect_str(entry["to"], f"{path}.to")
        for which, oid in (("from", frm), ("to", to)):
            if oid not in cat.objects:
                raise DecodeError(f"{path}.{which}", f"unknown object {oid!r}")
        if (frm, to) in cat.moduli0:
            raise DecodeError(path, f"duplicate space M({frm},{to})")
        points = _expect_list(entry["points"], f"{path}.points")
        if not points:
            continue  # tolerated and dropped: empty spaces are never stored
        cat.moduli0[(frm, to)] = {}
        for j, rawpt in enumerate(points):
            ppath = f"{path}.points[{j}]"
            pt = _expect_dict(rawpt, ppath)
            _check_keys(pt, {"id", "sign"}, {"id", "sign"}, ppath)
            pid = _expect_str(pt["id"], f"{ppath}.id")
            sign = _expect_str(pt["sign"], f"{ppath}.sign")
            if sign not in CHAR_SIGN:
                raise DecodeError(f"{ppath}.sign", f"expected '+' or '-', got {sign!r}")
            if pid in cat.moduli0[(frm, to)]:
                raise DecodeError(f"{ppath}.id", f"duplicate point id {pid!r}")
            cat.moduli0[(frm, to)][pid] = CHAR_SIGN[sign]

    for i, raw in enumerate(_expect_list(root.get("moduli1", []), "moduli1")):
        path = f"moduli1[{i}]"
        entry = _expect_dict(raw, path)
        _check_keys(
            entry, {"from", "to", "components"}, {"from", "to", "components"}, path
        )
        frm = _expect_str(entry["from"], f"{path}.from")
        to = _expect_str(entry["to"], f"{path}.to")
        for which, oid in (("from", frm), ("to", to)):
            if oid not in cat.objects:
                raise DecodeError(f"{path}.{which}", f"unknown object {oid!r}")
        if (frm, to) in cat.moduli1:
            raise DecodeError(path, f"duplicate space M({frm},{to})")
        comps = _expect_list(entry["components"], f"{path}.components")
        if not comps:
            continue
        cat.moduli1[(frm, to)] = {}
        for j, rawcomp in enumerate(comps):
            cpath = f"{path}.components[{j}]"
            comp = _expect_dict(rawcomp, cpath)
            kind = _expect_str(comp.get("kind", ""), f"{cpath}.kind")
            if kind == "interval":
                _check_keys(
                    comp,
                    {"kind", "id", "framing", "start", "end"},
                    {"kind", "id", "framing", "start", "end"},
                    cpath,
                )
                cid = _expect_str(comp["id"], f"{cpath}.id")
                framing = _expect_int(comp["framing"], f"{cpath}.framing")
                if framing not in (0, 1):
                    raise DecodeError(
                        f"{cpath}.framing", f"expected 0 or 1, got {framing!r}"
                    )
                start = _decode_end(comp["start"], cat, f"{cpath}.start")
                end = _decode_end(comp["end"], cat, f"{cpath}.end")
                if cid in cat.moduli1[(frm, to)]:
                    raise DecodeError(f"{cpath}.id", f"duplicate component id {cid!r}")
                cat.moduli1[(frm, to)][cid] = make_interval(cid, framing, start, end)
            elif kind == "circle":
                _check_keys(
                    comp, {"kind", "id", "framing"}, {"kind", "id", "framing"}, cpath
                )
                cid = _expect_str(comp["id"], f"{cpath}.id")
                framing = _expect_int(comp["framing"], f"{cpath}.framing")
                if framing not in (0, 1):
                    raise DecodeError(
                        f"{cpath}.framing", f"expected 0 or 1, got {framing!r}"
                    )
                if cid in cat.moduli1[(frm, to)]:
                    raise DecodeError(f"{cpath}.id", f"duplicate component id {cid!r}")
                cat.moduli1[(frm, to)][cid] = Circle(cid, framing)
            else:
                raise DecodeError(
                    f"{cpath}.kind", f"expected 'interval' or 'circle', got {kind!r}"
                )

    return cat


def decode(text: str) -> Category:
    """Parse canonical (or any conforming) JSON text into a category."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError("", f"invalid JSON: {exc}") from exc
    return from_jsonable(data)


def load(path: str) -> Category:
    with open(path, "r", encoding="utf-8") as fh:
        return decode(fh.read())


def save(cat: Category, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(encode(cat))
