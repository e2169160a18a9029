"""Command-line front end.

Subcommands mirror the library surface: ratio, solve, verify, catalog,
replicate, render, serve. Every numeric subcommand takes ``--json`` to
emit the same payloads the HTTP service returns.

Exit codes: 0 success, 2 usage error (argparse), 3 domain or math error.
A failed ``verify`` also exits 3: the command asserts a claim, and a
mismatch is a math-level failure, not a usage problem.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .catalog import verify_catalog
from .construction import area_ratio
from .errors import ChordalError
from .rendering import RenderOptions, render_svg
from .service import DEFAULT_PORT, serve
from .solver import solve_d
from .wire import (
    catalog_payload,
    construction_payload,
    replicate_payload,
    solve_payload,
    verify_payload,
)

PORT_ENV_VAR = "CHORDAL_PORT"


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout_payload: str


def run_cli(argv: list[str] | None = None) -> CommandResult:
    """Parse and execute one invocation; never raises on bad input."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(exit_code=code, stdout_payload="")
    try:
        return args.handler(args)
    except ChordalError as exc:
        return CommandResult(exit_code=3, stdout_payload=f"error: {exc}")


def main(argv: list[str] | None = None) -> int:
    result = run_cli(argv if argv is not None else sys.argv[1:])
    if result.stdout_payload:
        stream = sys.stdout if result.exit_code == 0 else sys.stderr
        print(result.stdout_payload, file=stream)
    return result.exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal",
        description="Rotated chord systems on regular polygons and their area ratios.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ratio", help="area ratio m for a given side distance d")
    p.add_argument("--n", type=int, required=True, help="number of polygon sides")
    p.add_argument("--d", type=float, required=True, help="side distance, in (1, n-1)")
    p.add_argument("--json", action="store_true", help="emit the full construction payload")
    p.set_defaults(handler=_cmd_ratio)

    p = sub.add_parser("solve", help="side distance d realizing a target ratio m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=float, required=True, help="target area ratio, > 1")
    p.add_argument("--tol", type=float, default=1e-9, help="ratio residual tolerance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="check that (n, d) produces ratio m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("catalog", help="the published list of integer-ratio systems")
    p.add_argument("--verify", action="store_true", help="re-derive every entry")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("replicate", help="chain of systems realizing m^2..m^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True, help="base side distance")
    p.add_argument("--k", type=int, required=True, help="highest power of the base ratio")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_replicate)

    p = sub.add_parser("render", help="write an SVG drawing of the construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--depth", type=int, default=1, help="replication levels to draw")
    p.add_argument("--width", type=int, default=640, help="document width in px")
    p.add_argument("--labels", action="store_true", help="draw vertex labels and a caption")
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument(
        "--port",
        type=int,
        default=None,
        help=f"listen port (default ${PORT_ENV_VAR} or {DEFAULT_PORT}; 0 picks a free port)",
    )
    p.add_argument("--ui", default=None, help="directory of static explorer files to host")
    p.set_defaults(handler=_cmd_serve)

    return parser


def _cmd_ratio(args: argparse.Namespace) -> CommandResult:
    if args.json:
        return CommandResult(0, json.dumps(construction_payload(args.n, args.d)))
    m = area_ratio(args.n, args.d)
    return CommandResult(0, f"m = {m:.9f}")


def _cmd_solve(args: argparse.Namespace) -> CommandResult:
    if args.json:
        return CommandResult(0, json.dumps(solve_payload(args.n, args.m, tol=args.tol)))
    out = solve_d(args.n, args.m, tol=args.tol)
    text = f"d = {out.d:.12f}\nresidual = {out.residual:.3e}\niterations = {out.iterations}"
    return CommandResult(0, text)


def _cmd_verify(args: argparse.Namespace) -> CommandResult:
    payload = verify_payload(args.n, args.d, args.m, tol=args.tol)
    if args.json:
        return CommandResult(0 if payload["passed"] else 3, json.dumps(payload))
    if payload["passed"]:
        text = (
            f"PASS: observed m = {payload['observed']:.9f} "
            f"(deviation {payload['deviation']:.3e} <= {args.tol:g})"
        )
        return CommandResult(0, text)
    if payload["observed"] is None:
        return CommandResult(3, f"FAIL: {payload['reason']}")
    text = (
        f"FAIL: observed m = {payload['observed']:.9f} "
        f"(deviation {payload['deviation']:.3e} > {args.tol:g})"
    )
    return CommandResult(3, text)


def _cmd_catalog(args: argparse.Namespace) -> CommandResult:
    if args.json:
        return CommandResult(0, json.dumps(catalog_payload(verify=args.verify)))
    lines = []
    if args.verify:
        checks = verify_catalog()
        for c in checks:
            t = c.entry.triple
            status = "ok " if c.passed else "FAIL"
            lines.append(
                f"{status} n={t.n} d={t.d:<13.10g} m={t.m:<5g} {c.entry.provenance}"
            )
        passed = sum(c.passed for c in checks)
        lines.append(f"{passed}/{len(checks)} entries verified")
    else:
        for entry in catalog_payload()["entries"]:
            lines.append(
                f"n={entry['n']} d={entry['d']:<13.10g} m={entry['m']:<5g} {entry['provenance']}"
            )
    return CommandResult(0, "\n".join(lines))


def _cmd_replicate(args: argparse.Namespace) -> CommandResult:
    payload = replicate_payload(args.n, args.d, args.k)
    if args.json:
        return CommandResult(0, json.dumps(payload))
    base = payload["base"]
    lines = [f"base: n={base['n']} d={base['d']:.12g} m={base['m']:.12g}"]
    for level in payload["levels"]:
        lines.append(f"      n={level['n']} d={level['d']:.12f} m={level['m']:.12g}")
    return CommandResult(0, "\n".join(lines))


def _cmd_render(args: argparse.Namespace) -> CommandResult:
    opts = RenderOptions(width_px=args.width, depth=args.depth, show_labels=args.labels)
    text = render_svg(args.n, args.d, opts)
    if args.out == "-":
        return CommandResult(0, text)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    return CommandResult(0, f"wrote {args.out}")


def resolve_port(flag_port: int | None, env: dict[str, str] | None = None) -> int:
    """Listen port precedence: --port flag, then $CHORDAL_PORT, then the default."""
    if flag_port is not None:
        return flag_port
    env = os.environ if env is None else env
    return int(env.get(PORT_ENV_VAR, DEFAULT_PORT))


def _cmd_serve(args: argparse.Namespace) -> CommandResult:
    serve(resolve_port(args.port), static_dir=args.ui)
    return CommandResult(0, "")


if __name__ == "__main__":
    sys.exit(main())
