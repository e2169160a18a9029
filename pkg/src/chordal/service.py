"""Stateless JSON-over-HTTP service around the construction and solver.

Built on the stdlib threading HTTP server: every handler is a pure
function over immutable data, so concurrent requests need no locking and
any interleaving returns the same bodies as serial execution.

Endpoints (all GET):

* ``/api/construction?n=N&d=D`` - canonical-frame geometry payload
* ``/api/solve?n=N&m=M[&tol=T]`` - side distance realizing ratio M
* ``/api/catalog[?verify=1]`` - the published triple list
* ``/api/render?n=N&d=D[&depth=K]`` - SVG document

Domain violations come back as ``400 {"error": reason}``. Responses carry
``Access-Control-Allow-Origin: *`` so a browser client served from
anywhere can call them. An optional static directory is served for
non-API paths, which is how the explorer page is hosted.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlsplit

from .errors import ChordalError
from .rendering import RenderOptions, render_svg
from .wire import catalog_payload, construction_payload, solve_payload

DEFAULT_PORT = 8037

log = logging.getLogger("chordal.service")


class ChordalServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], static_dir: Path | None = None):
        super().__init__(address, _Handler)
        self.static_dir = static_dir


def make_server(port: int = DEFAULT_PORT, static_dir: str | Path | None = None) -> ChordalServer:
    """Bound but not yet running server; port 0 picks a free port."""
    root = Path(static_dir).resolve() if static_dir is not None else None
    if root is not None and not root.is_dir():
        raise NotADirectoryError(f"static directory {root} does not exist")
    return ChordalServer(("127.0.0.1", port), static_dir=root)


def serve(port: int = DEFAULT_PORT, static_dir: str | Path | None = None) -> None:
    """Run the service until interrupted, announcing the bound address."""
    server = make_server(port, static_dir)
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: ChordalServer

    def do_GET(self) -> None:  # noqa: N802 (stdlib handler naming)
        parsed = urlsplit(self.path)
        if parsed.path.startswith("/api/"):
            self._dispatch_api(parsed.path, parse_qs(parsed.query))
        else:
            self._serve_static(parsed.path)

    def _dispatch_api(self, path: str, query: dict[str, list[str]]) -> None:
        try:
            if path == "/api/construction":
                body = construction_payload(_int_arg(query, "n"), _float_arg(query, "d"))
            elif path == "/api/solve":
                tol = _float_arg(query, "tol") if "tol" in query else 1e-9
                body = solve_payload(_int_arg(query, "n"), _float_arg(query, "m"), tol=tol)
            elif path == "/api/catalog":
                body = catalog_payload(verify=_flag_arg(query, "verify"))
            elif path == "/api/render":
                depth = _int_arg(query, "depth") if "depth" in query else 1
                text = render_svg(
                    _int_arg(query, "n"), _float_arg(query, "d"), RenderOptions(depth=depth)
                )
                self._send_bytes(200, text.encode(), "image/svg+xml; charset=utf-8")
                return
            else:
                self._send_json(404, {"error": f"unknown endpoint {path}"})
                return
        except (ChordalError, ValueError) as exc:
            self._send_json(400, {"error": str(exc)})
            return
        self._send_json(200, body)

    def _serve_static(self, path: str) -> None:
        root = self.server.static_dir
        if root is None:
            self._send_json(404, {"error": "no static content; use /api/*"})
            return
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        # refuse paths that escape the static root
        if not target.is_relative_to(root) or not target.is_file():
            self._send_json(404, {"error": f"not found: {path}"})
            return
        ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self._send_bytes(200, target.read_bytes(), ctype)

    def _send_json(self, status: int, obj: dict) -> None:
        self._send_bytes(status, json.dumps(obj).encode(), "application/json; charset=utf-8")

    def _send_bytes(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, format: str, *args) -> None:
        log.debug("%s %s", self.address_string(), format % args)


def _one(query: dict[str, list[str]], name: str) -> str:
    values = query.get(name, [])
    if len(values) != 1:
        raise ValueError(f"query parameter {name!r} must appear exactly once")
    return values[0]


def _int_arg(query: dict[str, list[str]], name: str) -> int:
    raw = _one(query, name)
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"query parameter {name!r} must be an integer, got {raw!r}") from None


def _float_arg(query: dict[str, list[str]], name: str) -> float:
    raw = _one(query, name)
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"query parameter {name!r} must be a number, got {raw!r}") from None


def _flag_arg(query: dict[str, list[str]], name: str) -> bool:
    if name not in query:
        return False
    return _one(query, name).lower() in ("1", "true", "yes", "on")
