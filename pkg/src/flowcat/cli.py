"""Command-line interface.

``flowcat CMD FILE ...`` where FILE is a path to a ``.ffc`` file or the
name of a bundled dataset.  Exit codes: 0 on success, 1 on a domain failure
(invalid category, malformed file, inapplicable move), 2 on usage errors.
Set ``FFC_COLOR=1`` for colored ok/error markers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import datasets
from .algebra import (
    group_string,
    integral_cohomology,
    mod2_cohomology,
    mod2_string,
)
from .ffc_io import DecodeError, decode, encode
from .model import Category, validate
from .moves import Move, MoveError, apply_move, list_moves
from .recognizer import recognize
from .strategy import TraceError, build_trace

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


def _color() -> bool:
    return os.environ.get("FFC_COLOR") == "1"


def _print_ok(text: str = "ok") -> None:
    if _color():
        print(f"{_GREEN}{text}{_RESET}")
    else:
        print(text)


def _fail(message: str) -> int:
    prefix = f"{_RED}error:{_RESET}" if _color() else "error:"
    print(f"{prefix} {message}", file=sys.stderr)
    return 1


def _load_input(spec: str) -> Category:
    """Read a category from a path, or from a bundled dataset by name."""
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return decode(fh.read())
    if spec in datasets.NAMES:
        return datasets.load(spec)
    raise FileNotFoundError(
        f"{spec!r} is neither a file nor a bundled dataset"
        f" (datasets: {', '.join(datasets.NAMES)})"
    )


def _write_category(cat: Category, out: Optional[str]) -> None:
    text = encode(cat)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_validate(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    errors = validate(cat)
    if errors:
        for line in errors:
            _fail(line)
        return 1
    _print_ok()
    return 0


def _cmd_moves(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    for move in list_moves(cat):
        print(move.to_spec())
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    move = Move.from_spec(args.move)
    result = apply_move(cat, move)
    _write_category(result, args.output)
    return 0


def _cmd_simplify(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    final, trace = build_trace(cat)
    for step in trace["moves"]:
        print(f"applied: {Move.from_dict(step).to_spec()}")
    result = recognize(final)
    print(f"result: {result.wedge}")
    for note in result.notes:
        print(f"note: {note}")
    if args.output:
        _write_category(final, args.output)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(trace, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def _cmd_homology(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    errors = validate(cat)
    if errors:
        return _fail(f"category is invalid: {errors[0]}")
    if args.coeff == "Z":
        for deg, (rank, torsion) in sorted(integral_cohomology(cat).items()):
            print(f"H^{deg} = {group_string(rank, torsion)}")
    else:
        for deg, dim in sorted(mod2_cohomology(cat).items()):
            print(f"H^{deg} = {mod2_string(dim)}")
    return 0


def _cmd_recognize(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    result = recognize(cat)
    print(result.wedge)
    for note in result.notes:
        print(f"note: {note}")
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    cat = _load_input(args.file)
    groups = cat.connected_components()
    if args.outdir is None:
        for group in groups:
            print(",".join(group))
        return 0
    os.makedirs(args.outdir, exist_ok=True)
    for i, group in enumerate(groups, start=1):
        path = os.path.join(args.outdir, f"summand-{i}.ffc")
        _write_category(cat.restrict(group), path)
        print(path)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server

    static = args.static
    if static is None and os.path.isdir(os.path.join(os.curdir, "frontend", "dist")):
        static = os.path.join(os.curdir, "frontend", "dist")
    run_server(host=args.host, port=args.port, static_dir=static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowcat",
        description="Framed flow categories: moves, cohomology, recognition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, helptext: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(func=func)
        return p

    p = add("validate", "check every structural invariant", _cmd_validate)
    p.add_argument("file", help="path to a .ffc file, or a bundled dataset name")

    p = add("moves", "list applicable moves, one spec per line", _cmd_moves)
    p.add_argument("file")

    p = add("apply", "apply one move and emit the result", _cmd_apply)
    p.add_argument("file")
    p.add_argument(
        "move",
        help="move spec: whitney:x,y:P,M | cancel:x,y[:pt]"
        " | rmcircle:a,b:id[,id2] | split:o1,o2,...",
    )
    p.add_argument("-o", "--output", help="write the result here instead of stdout")

    p = add("simplify", "greedily apply moves until none remain", _cmd_simplify)
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the final category here")
    p.add_argument("--trace", help="write a replayable trace (JSON) here")

    p = add("homology", "print cohomology groups, one degree per line", _cmd_homology)
    p.add_argument("file")
    p.add_argument(
        "--coeff", choices=("Z", "Z2"), default="Z", help="coefficients (default Z)"
    )

    p = add("recognize", "match components against the stable-type catalog", _cmd_recognize)
    p.add_argument("file")

    p = add("split", "list connected components, or write one file each", _cmd_split)
    p.add_argument("file")
    p.add_argument("-o", "--outdir", help="write summand-N.ffc files into this directory")

    p = add("serve", "run the local HTTP session service", _cmd_serve)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7814)
    p.add_argument("--static", help="directory of static files to serve at /")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DecodeError, MoveError, TraceError) as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(str(exc))
    except KeyError as exc:
        return _fail(str(exc.args[0]) if exc.args else str(exc))


if __name__ == "__main__":
    sys.exit(main())
