"""Inverting the construction: find the side distance for a target ratio.

The area ratio is continuous in the side distance, heading to 1 as d
approaches 1 and diverging as d approaches n/2, so any ratio above the
left guard value is realized somewhere in between. Bisection on
``area_ratio(n, d) - m`` over a fixed bracket needs only that sign change,
not monotonicity, which keeps the solver robust for every n.

Also here: verification of (n, d, m) triples against the geometric engine,
algebraic replication (solve for m**2, m**3, ...), and the geometric
nesting that applies the same chord system inside each successive inner
polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .construction import (
    ChordalSystem,
    SubPolygonResult,
    area_ratio,
    build_chordal_system,
    sub_polygon,
    unit_spec,
)
from .errors import (
    BracketError,
    ChordalError,
    ConvergenceError,
    DegenerateResultError,
    DomainError,
    InvalidSpecError,
)
from .geometry import RegularPolygonSpec

# Offsets from the domain endpoints for the initial bisection bracket.
BRACKET_GUARD = 1e-6

# Bisection stops once the d-interval shrinks below this.
INTERVAL_FLOOR = 1e-13

# Geometric nesting is capped at this depth.
MAX_NESTING_DEPTH = 8


@dataclass(frozen=True)
class ChordalTriple:
    """A named construction instance: n-gon, side distance, area ratio.

    ``d_is_exact`` records whether ``d`` is a closed-form rational rather
    than a numerically solved value.
    """

    n: int
    d: float
    m: float
    d_is_exact: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise InvalidSpecError(f"triple needs n >= 3, got {self.n}")
        if not (1.0 < self.d < self.n - 1.0) or self.d == self.n / 2.0:
            raise InvalidSpecError(
                f"triple side distance must lie in (1, {self.n - 1}) away from n/2, got {self.d}"
            )
        if not (math.isfinite(self.m) and self.m > 1.0):
            raise InvalidSpecError(f"triple ratio must exceed 1, got {self.m}")


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a ratio inversion: the distance found and how it was found."""

    d: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one triple against the geometric engine."""

    triple: ChordalTriple
    observed: float | None
    deviation: float | None
    passed: bool
    reason: str | None = None


def _ratio_excess(n: int, d: float, m: float) -> float:
    """area_ratio(n, d) - m, treating a vanished inner polygon as +infinity.

    Near the n/2 guard band the inner area can drop below the degeneracy
    floor; for root bracketing that simply means the ratio exceeds any
    finite target.
    """
    try:
        return area_ratio(n, d) - m
    except DegenerateResultError:
        return math.inf


def solve_d(n: int, m: float, tol: float = 1e-9) -> SolveOutcome:
    """Find d in (1, n/2) with ``|area_ratio(n, d) - m| <= tol`` by bisection.

    The initial bracket is [1 + 1e-6, n/2 - 1e-6]; its endpoints must
    straddle the target (ratio below m on the left, above m on the right)
    or BracketError is raised. Bisection keeps the best midpoint seen, so
    the recorded residual never increases with iteration count, and stops
    once the residual meets ``tol`` or the interval is below 1e-13.
    Deterministic for fixed inputs.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidSpecError(f"solve needs n >= 3, got {n}")
    if not (math.isfinite(m) and m > 1.0):
        raise DomainError(f"target ratio must exceed 1, got {m}")
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol}")

    lo = 1.0 + BRACKET_GUARD
    hi = n / 2.0 - BRACKET_GUARD
    g_lo = _ratio_excess(n, lo, m)
    g_hi = _ratio_excess(n, hi, m)
    if not (g_lo < 0.0 < g_hi):
        raise BracketError(
            f"target ratio {m} is outside the attainable range on n={n}: "
            f"the ratio spans ({g_lo + m:.6g}, {g_hi + m if math.isfinite(g_hi) else math.inf:.6g}) "
            f"over d in [{lo}, {hi}]"
        )

    bracket = (lo, hi)
    best_d = lo
    best_residual = math.inf
    iterations = 0
    while hi - lo >= INTERVAL_FLOOR:
        mid = 0.5 * (lo + hi)
        g_mid = _ratio_excess(n, mid, m)
        iterations += 1
        if abs(g_mid) < best_residual:
            best_d, best_residual = mid, abs(g_mid)
        if best_residual <= tol:
            break
        if g_mid < 0.0:
            lo = mid
        else:
            hi = mid

    if best_residual > tol:
        raise ConvergenceError(
            f"bisection bottomed out at interval {hi - lo:.3g} with residual "
            f"{best_residual:.3g} > tol {tol:.3g}"
        )
    return SolveOutcome(d=best_d, residual=best_residual, iterations=iterations, bracket=bracket)


def verify_triple(triple: ChordalTriple, tol: float = 1e-6) -> VerificationReport:
    """Check that the triple's d really produces its ratio m, within tol."""
    try:
        observed = area_ratio(triple.n, triple.d)
    except ChordalError as exc:
        return VerificationReport(
            triple=triple, observed=None, deviation=None, passed=False, reason=str(exc)
        )
    deviation = abs(observed - triple.m)
    return VerificationReport(
        triple=triple, observed=observed, deviation=deviation, passed=deviation <= tol
    )


def replicate(base: ChordalTriple, k: int) -> list[ChordalTriple]:
    """Triples realizing m**2 .. m**k on the same n-gon as ``base``.

    Each power is inverted independently with solve_d at tolerance 1e-9,
    mirroring the effect of repeating the base construction inside each
    successive inner polygon.
    """
    if k < 2:
        raise DomainError(f"replication needs k >= 2, got {k}")
    report = verify_triple(base, tol=1e-6)
    if not report.passed:
        raise DomainError(
            f"base triple ({base.n}, <{base.d}>, {base.m}) does not verify: "
            + (report.reason or f"observed ratio {report.observed}")
        )
    out: list[ChordalTriple] = []
    for j in range(2, k + 1):
        target = base.m**j
        outcome = solve_d(base.n, target, tol=1e-9)
        out.append(ChordalTriple(n=base.n, d=outcome.d, m=target, d_is_exact=False))
    return out


def construction_levels(
    n: int, d: float, depth: int, spec: RegularPolygonSpec | None = None
) -> list[tuple[ChordalSystem, SubPolygonResult]]:
    """Chord system and inner polygon at each nesting level, outermost first.

    Level j+1 applies the same side distance to level j's inner polygon,
    so areas shrink by the ratio m at every step.
    """
    if depth < 1:
        raise DomainError(f"nesting depth must be at least 1, got {depth}")
    if depth > MAX_NESTING_DEPTH:
        raise DomainError(f"nesting depth is capped at {MAX_NESTING_DEPTH}, got {depth}")
    current = unit_spec(n) if spec is None else spec
    if current.n != n:
        raise InvalidSpecError(f"spec has n={current.n} but the construction asked for n={n}")

    levels: list[tuple[ChordalSystem, SubPolygonResult]] = []
    for _ in range(depth):
        system = build_chordal_system(current, d)
        result = sub_polygon(system)
        levels.append((system, result))
        current = _inner_polygon_spec(current, result)
    return levels


def nested_construction(
    n: int, d: float, k: int, spec: RegularPolygonSpec | None = None
) -> list[SubPolygonResult]:
    """The chain of inner polygons T_1, T_2, ..., T_k for side distance d."""
    return [result for _, result in construction_levels(n, d, k, spec)]


def _inner_polygon_spec(spec: RegularPolygonSpec, result: SubPolygonResult) -> RegularPolygonSpec:
    v0 = result.inner.vertices[0]
    phase = math.atan2(v0.y - spec.center.y, v0.x - spec.center.x)
    return RegularPolygonSpec(n=spec.n, side=result.t, center=spec.center, phase=phase)
