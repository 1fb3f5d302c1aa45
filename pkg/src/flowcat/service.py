"""Loopback HTTP session service.

Runs on the standard library's threading HTTP server; no third-party web
framework and no CORS story, because the browser UI is served as static
files from the same origin.

Endpoints (all JSON):

* ``POST /sessions`` with ``{"category": {...}}`` or ``{"dataset": name}``
  creates a session; responds ``{"id", "digest", "category"}``.
* ``GET /sessions/{id}`` — current state, same shape as creation.
* ``GET /sessions/{id}/moves`` — ``{"moves": [descriptor, ...]}``.
* ``POST /sessions/{id}/apply`` with a move descriptor body applies it;
  responds ``{"category", "move", "digest"}``.
* ``POST /sessions/{id}/undo`` — pops one move; 422 when nothing to undo.
* ``GET /sessions/{id}/homology?coeff=Z|Z2`` — ``{"coeff", "groups"}``.
* ``GET /sessions/{id}/recognize`` — ``{"summands", "notes"}``.
* ``GET /sessions/{id}/trace`` — replayable trace of the session so far.

Errors come back as ``{"error": status, "detail": text}``: 400 for
malformed requests, 404 for unknown sessions or paths, 422 for categories
or moves that parse but do not apply.
"""

from __future__ import annotations

import json
import mimetypes
import os
import posixpath
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any, Optional
from urllib.parse import parse_qs, urlsplit

from . import datasets
from .algebra import (
    group_string,
    integral_cohomology,
    mod2_cohomology,
    mod2_string,
)
from .ffc_io import DecodeError, digest, from_jsonable, to_jsonable
from .model import Category, validate
from .moves import Move, MoveError, apply_move, list_moves
from .recognizer import recognize


class _Session:
    def __init__(self, cat: Category):
        self.initial = cat
        self.history: list[tuple[Move, Category]] = []
        self.lock = threading.Lock()

    @property
    def current(self) -> Category:
        return self.history[-1][1] if self.history else self.initial


class _ServiceError(Exception):
    def __init__(self, status: int, detail: str):
        self.status = status
        self.detail = detail
        super().__init__(detail)


class Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "flowcat"

    # -- plumbing ----------------------------------------------------------

    def log_message(self, format: str, *args: Any) -> None:
        if getattr(self.server, "verbose", False):
            super().log_message(format, *args)

    def _send_json(self, status: int, payload: Any) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, detail: str) -> None:
        self._send_json(status, {"error": status, "detail": detail})

    def _read_body(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise _ServiceError(400, "request body must be JSON")
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise _ServiceError(400, f"invalid JSON body: {exc}") from exc

    def _session(self, sid: str) -> _Session:
        sessions: dict[str, _Session] = self.server.sessions
        session = sessions.get(sid)
        if session is None:
            raise _ServiceError(404, f"unknown session {sid!r}")
        return session

    @staticmethod
    def _state_payload(sid: str, cat: Category) -> dict[str, Any]:
        return {"id": sid, "digest": digest(cat), "category": to_jsonable(cat)}

    # -- dispatch ------------------------------------------------------------

    def do_GET(self) -> None:  # noqa: N802 (http.server naming)
        try:
            self._route("GET")
        except _ServiceError as exc:
            self._send_error_json(exc.status, exc.detail)

    def do_POST(self) -> None:  # noqa: N802
        try:
            self._route("POST")
        except _ServiceError as exc:
            self._send_error_json(exc.status, exc.detail)

    def _route(self, method: str) -> None:
        url = urlsplit(self.path)
        parts = [p for p in url.path.split("/") if p]
        if parts and parts[0] == "sessions":
            self._route_sessions(method, parts[1:], url.query)
            return
        if method == "GET":
            self._serve_static(url.path)
            return
        raise _ServiceError(404, f"no such endpoint: {method} {url.path}")

    def _route_sessions(self, method: str, rest: list[str], query: str) -> None:
        if not rest:
            if method != "POST":
                raise _ServiceError(404, "POST /sessions creates a session")
            self._create_session()
            return
        sid = rest[0]
        tail = rest[1:]
        session = self._session(sid)
        if not tail:
            if method != "GET":
                raise _ServiceError(404, f"GET /sessions/{sid} reads a session")
            with session.lock:
                self._send_json(200, self._state_payload(sid, session.current))
            return
        if len(tail) != 1:
            raise _ServiceError(404, f"no such endpoint under /sessions/{sid}")
        action = tail[0]
        if method == "GET" and action == "moves":
            with session.lock:
                moves = [m.to_dict() for m in list_moves(session.current)]
            self._send_json(200, {"moves": moves})
        elif method == "POST" and action == "apply":
            body = self._read_body()
            try:
                move = Move.from_dict(body)
            except MoveError as exc:
                raise _ServiceError(400, str(exc)) from exc
            with session.lock:
                try:
                    result = apply_move(session.current, move)
                except MoveError as exc:
                    raise _ServiceError(422, str(exc)) from exc
                session.history.append((move, result))
                payload = {
                    "category": to_jsonable(result),
                    "move": move.to_dict(),
                    "digest": digest(result),
                }
            self._send_json(200, payload)
        elif method == "POST" and action == "undo":
            with session.lock:
                if not session.history:
                    raise _ServiceError(422, "nothing to undo")
                session.history.pop()
                payload = self._state_payload(sid, session.current)
            self._send_json(200, payload)
        elif method == "GET" and action == "homology":
            params = parse_qs(query)
            coeff = params.get("coeff", ["Z"])[0]
            if coeff not in ("Z", "Z2"):
                raise _ServiceError(400, f"coeff must be Z or Z2, got {coeff!r}")
            with session.lock:
                cat = session.current
                if coeff == "Z":
                    groups = {
                        str(deg): group_string(rank, torsion)
                        for deg, (rank, torsion) in integral_cohomology(cat).items()
                    }
                else:
                    groups = {
                        str(deg): mod2_string(dim)
                        for deg, dim in mod2_cohomology(cat).items()
                    }
            self._send_json(200, {"coeff": coeff, "groups": groups})
        elif method == "GET" and action == "recognize":
            with session.lock:
                result = recognize(session.current)
            self._send_json(
                200, {"summands": list(result.summands), "notes": list(result.notes)}
            )
        elif method == "GET" and action == "trace":
            with session.lock:
                steps = []
                for move, cat in session.history:
                    entry = move.to_dict()
                    entry["digest"] = digest(cat)
                    steps.append(entry)
                payload = {
                    "initial": digest(session.initial),
                    "moves": steps,
                    "result": list(recognize(session.current).summands),
                }
            self._send_json(200, payload)
        else:
            raise _ServiceError(404, f"no such endpoint: {method} .../{action}")

    def _create_session(self) -> None:
        body = self._read_body()
        if not isinstance(body, dict):
            raise _ServiceError(400, "body must be a JSON object")
        keys = set(body)
        if keys == {"category"}:
            try:
                cat = from_jsonable(body["category"])
            except DecodeError as exc:
                raise _ServiceError(400, str(exc)) from exc
        elif keys == {"dataset"}:
            name = body["dataset"]
            if not isinstance(name, str) or name not in datasets.NAMES:
                raise _ServiceError(
                    404, f"unknown dataset {name!r}; known: {', '.join(datasets.NAMES)}"
                )
            cat = datasets.load(name)
        else:
            raise _ServiceError(
                400, "body must have exactly one of 'category' or 'dataset'"
            )
        errors = validate(cat)
        if errors:
            raise _ServiceError(422, f"category is invalid: {errors[0]}")
        sid = uuid.uuid4().hex[:12]
        self.server.sessions[sid] = _Session(cat)
        self._send_json(200, self._state_payload(sid, cat))

    # -- static files ----------------------------------------------------------

    def _serve_static(self, path: str) -> None:
        root: Optional[str] = getattr(self.server, "static_dir", None)
        if root is None:
            raise _ServiceError(404, f"no such endpoint: GET {path}")
        clean = posixpath.normpath(path.lstrip("/")) if path != "/" else "index.html"
        if clean in ("", "."):
            clean = "index.html"
        if clean.startswith("..") or os.path.isabs(clean):
            raise _ServiceError(404, "not found")
        full = os.path.join(root, *clean.split("/"))
        if os.path.isdir(full):
            full = os.path.join(full, "index.html")
        if not os.path.isfile(full):
            raise _ServiceError(404, f"not found: {path}")
        ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
        with open(full, "rb") as fh:
            body = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def make_server(
    host: str = "127.0.0.1",
    port: int = 7814,
    static_dir: Optional[str] = None,
    verbose: bool = False,
) -> ThreadingHTTPServer:
    """Build (but do not start) the service; port 0 picks a free port."""
    server = ThreadingHTTPServer((host, port), Handler)
    server.sessions = {}
    server.static_dir = static_dir
    server.verbose = verbose
    return server


def run_server(
    host: str = "127.0.0.1", port: int = 7814, static_dir: Optional[str] = None
) -> None:
    server = make_server(host, port, static_dir, verbose=True)
    where = f"http://{host}:{server.server_address[1]}/"
    print(f"flowcat service listening on {where}")
    if static_dir:
        print(f"serving static files from {static_dir}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
