"""Canonical JSON payload builders shared by the CLI and the HTTP service.

Both front ends call these functions, so a ``--json`` dump and a service
response for the same query carry identical floats. Geometry is always in
the canonical frame: unit side, center at the origin, phase zero. Floats
are serialized by ``json.dumps`` as shortest round-trip decimals, which
keeps 17 significant digits where needed.
"""

from __future__ import annotations

from .catalog import known_triples, verify_catalog
from .construction import area_ratio, build_chordal_system, sub_polygon, unit_spec
from .geometry import regular_polygon
from .solver import ChordalTriple, replicate, solve_d, verify_triple

# snap a measured base ratio to an integer within this relative window
REPLICATE_SNAP_RTOL = 1e-9


def construction_payload(n: int, d: float) -> dict:
    """Everything a client needs to draw the system (n, d): outline, chords,
    inner polygon, side length t, and the ratio m."""
    system = build_chordal_system(unit_spec(n), d)
    result = sub_polygon(system)
    outer = regular_polygon(system.spec)
    return {
        "n": n,
        "d": d,
        "outer": [[v.x, v.y] for v in outer.vertices],
        "chords": [[[c.start.x, c.start.y], [c.end.x, c.end.y]] for c in system.chords],
        "inner": [[v.x, v.y] for v in result.inner.vertices],
        "t": result.t,
        "ratio": result.ratio,
    }


def solve_payload(n: int, m: float, tol: float = 1e-9) -> dict:
    out = solve_d(n, m, tol=tol)
    return {
        "n": n,
        "m": m,
        "d": out.d,
        "residual": out.residual,
        "iterations": out.iterations,
    }


def catalog_payload(verify: bool = False) -> dict:
    entries = []
    checks = verify_catalog() if verify else None
    for i, entry in enumerate(known_triples()):
        record: dict = {
            "n": entry.triple.n,
            "d": entry.triple.d,
            "m": entry.triple.m,
            "d_is_exact": entry.triple.d_is_exact,
            "d_printed_digits": entry.d_printed_digits,
            "provenance": entry.provenance,
        }
        if checks is not None:
            check = checks[i]
            record["verified"] = check.passed
            record["observed"] = check.observed
            record["deviation"] = check.deviation
        entries.append(record)
    return {"entries": entries}


def replicate_payload(n: int, d: float, k: int) -> dict:
    """Replication chain payload for a base system given by (n, d).

    The base ratio is measured from the construction; when it sits within
    1e-9 relative of an integer it snaps to that integer so the chain
    targets m**j exactly.
    """
    base_m = area_ratio(n, d)
    snapped = round(base_m)
    if snapped >= 2 and abs(base_m - snapped) <= REPLICATE_SNAP_RTOL * max(1.0, abs(base_m)):
        base_m = float(snapped)
    base = ChordalTriple(n=n, d=d, m=base_m, d_is_exact=False)
    chain = replicate(base, k)
    return {
        "base": {"n": n, "d": d, "m": base_m},
        "levels": [{"n": t.n, "d": t.d, "m": t.m} for t in chain],
    }


def verify_payload(n: int, d: float, m: float, tol: float) -> dict:
    report = verify_triple(ChordalTriple(n=n, d=d, m=m, d_is_exact=False), tol=tol)
    return {
        "n": n,
        "d": d,
        "m": m,
        "tol": tol,
        "observed": report.observed,
        "deviation": report.deviation,
        "passed": report.passed,
        "reason": report.reason,
    }
