"""Chord systems in regular polygons and the induced sub-polygon ratio.

The construction: pick a side distance ``d`` (measured counterclockwise
along the perimeter, in units of the side length), draw the chord from
vertex 0 to the perimeter point at distance ``d``, and copy that chord to
every other vertex by rotating it about the center in steps of 2*pi/n.
The n chords cut out a central region which is again a regular n-gon; the
interesting quantity is the area ratio m = outer/inner.

``d`` is legal on (1, n-1) except for a guard band around n/2, where every
chord passes through the center and the inner polygon vanishes. Values
above n/2 mirror the values below it (the clockwise-wound systems), so
``area_ratio(n, d) == area_ratio(n, n - d)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CenterChordError, DegenerateResultError, DomainError
from .geometry import (
    Line,
    Point,
    Polygon,
    RegularPolygonSpec,
    clip_by_halfplane,
    line_intersection,
    polygon_area,
    regular_polygon,
)

# Side distances closer than this to n/2 are rejected as diameter chords.
CENTER_GUARD = 1e-9

# Relative tolerance for the sub-polygon regularity self-check.
REGULARITY_RTOL = 1e-9

# The inner polygon must keep at least this fraction of the outer area.
MIN_AREA_FRACTION = 1e-12


def unit_spec(n: int) -> RegularPolygonSpec:
    """The canonical frame: unit side, origin center, vertex 0 at angle 0."""
    return RegularPolygonSpec(n=n, side=1.0)


@dataclass(frozen=True)
class Chord:
    """One chord of the system: from a polygon vertex to a perimeter point.

    ``d`` is the side distance from the start vertex to ``end``, walking
    the perimeter counterclockwise.
    """

    vertex_index: int
    start: Point
    end: Point
    d: float

    @property
    def carrier(self) -> Line:
        return Line(self.start, self.end)


@dataclass(frozen=True)
class ChordalSystem:
    """All n rotated copies of the base chord on one regular polygon."""

    spec: RegularPolygonSpec
    d: float
    chords: tuple[Chord, ...]


@dataclass(frozen=True)
class SubPolygonResult:
    """The inner polygon cut out by a chord system, with its measurements.

    ``ratio`` is the outer-to-inner area ratio m, and ``t`` the inner side
    length; the two are linked by m = (s/t)**2.
    """

    inner: Polygon
    t: float
    area_outer: float
    area_inner: float
    ratio: float


def perimeter_point(spec: RegularPolygonSpec, d: float) -> Point:
    """The point at arc length ``d * side`` counterclockwise from vertex 0.

    Integer ``d`` lands exactly on vertex ``d mod n``.
    """
    if not (0.0 <= d <= spec.n):
        raise DomainError(f"perimeter distance must lie in [0, {spec.n}], got {d}")
    return _point_along_perimeter(regular_polygon(spec).vertices, spec.n, d)


def _point_along_perimeter(verts: tuple[Point, ...], n: int, d: float) -> Point:
    k = int(math.floor(d))
    frac = d - k
    if k >= n:  # d == n wraps back to vertex 0
        k, frac = 0, 0.0
    if frac == 0.0:
        return verts[k]
    a, b = verts[k], verts[(k + 1) % n]
    return Point(a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y))


def build_chordal_system(spec: RegularPolygonSpec, d: float) -> ChordalSystem:
    """Construct the n-chord system with side distance ``d``.

    Chord k runs from vertex k to the perimeter point at side distance
    ``k + d``, which is exactly chord 0 rotated by 2*pi*k/n about the
    center.
    """
    n = spec.n
    if not (1.0 < d < n - 1.0):
        raise DomainError(f"side distance must lie strictly inside (1, {n - 1}), got {d}")
    if abs(d - n / 2.0) <= CENTER_GUARD:
        raise CenterChordError(
            f"side distance {d} puts the chords through the center (d = n/2); no sub-polygon exists"
        )
    verts = regular_polygon(spec).vertices
    chords = tuple(
        Chord(
            vertex_index=k,
            start=verts[k],
            end=_point_along_perimeter(verts, n, (k + d) % n),
            d=d,
        )
        for k in range(n)
    )
    return ChordalSystem(spec=spec, d=d, chords=chords)


def sub_polygon(system: ChordalSystem) -> SubPolygonResult:
    """Extract the inner polygon bounded by all chords of ``system``.

    The outer polygon is clipped successively by each chord's carrier
    line, keeping the side containing the center. The result is checked to
    be a regular n-gon (within REGULARITY_RTOL of the inner side length);
    the check doubles as a self-test of the whole construction.
    """
    spec = system.spec
    outer = regular_polygon(spec)
    poly = outer
    for chord in system.chords:
        poly = clip_by_halfplane(poly, chord.carrier, spec.center)

    n = spec.n
    if len(poly) != n:
        raise DegenerateResultError(
            f"chord clipping produced {len(poly)} vertices where {n} were expected"
        )

    area_outer = polygon_area(outer)
    area_inner = polygon_area(poly)
    if area_inner < MIN_AREA_FRACTION * area_outer:
        raise DegenerateResultError("inner polygon area vanished (side distance too close to n/2)")

    inner = _rotate_ring_to_leading_vertex(poly, system)
    edges = inner.edge_lengths()
    t = sum(edges) / n
    radii = [v.distance_to(spec.center) for v in inner.vertices]
    mean_radius = sum(radii) / n
    tol = REGULARITY_RTOL * t
    if any(abs(e - t) > tol for e in edges) or any(abs(r - mean_radius) > tol for r in radii):
        raise DegenerateResultError("inner polygon failed the regularity self-check")

    ratio = area_outer / area_inner
    side_sq_ratio = (spec.side / t) ** 2
    if abs(ratio - side_sq_ratio) > REGULARITY_RTOL * ratio:
        raise DegenerateResultError("area ratio disagrees with the squared side ratio")

    return SubPolygonResult(
        inner=inner, t=t, area_outer=area_outer, area_inner=area_inner, ratio=ratio
    )


def _rotate_ring_to_leading_vertex(poly: Polygon, system: ChordalSystem) -> Polygon:
    """Cycle the vertex ring so the intersection of chords 0 and 1 comes first."""
    lead = line_intersection(system.chords[0].carrier, system.chords[1].carrier)
    verts = poly.vertices
    start = min(range(len(verts)), key=lambda i: verts[i].distance_to(lead))
    if start == 0:
        return poly
    return Polygon(verts[start:] + verts[:start])


def area_ratio(n: int, d: float) -> float:
    """The outer-to-inner area ratio m for side distance ``d`` on an n-gon.

    Scale free: computed in the canonical unit frame, and identical for
    any side length, center, or orientation.
    """
    result = sub_polygon(build_chordal_system(unit_spec(n), d))
    return result.ratio


def square_t_closed(a: float) -> float:
    """Inner side length for a unit square, from the offset ``a`` of the
    chord endpoint along the far side: t = (1 - a) / sqrt(a**2 + 1)."""
    if not (0.0 <= a < 1.0):
        raise DomainError(f"side offset must lie in [0, 1), got {a}")
    return (1.0 - a) / math.sqrt(a * a + 1.0)


def square_ratio_closed(a: float) -> float:
    """Area ratio for a unit square with side offset ``a``.

    Combines m = (s/t)**2 with the closed form for t, giving
    m = (a**2 + 1) / (1 - a)**2. Equals ``area_ratio(4, 1 + a)``.
    """
    if not (0.0 <= a < 1.0):
        raise DomainError(f"side offset must lie in [0, 1), got {a}")
    return (a * a + 1.0) / ((1.0 - a) * (1.0 - a))


def square_d_for_m(m: float) -> float:
    """Side distance realizing ratio ``m`` on a square, in closed form.

    Inverts the square ratio formula: the offset past the first vertex is
    (m - sqrt(2m - 1)) / (m - 1), so d = 1 + that.
    """
    if not (math.isfinite(m) and m > 1.0):
        raise DomainError(f"target ratio must exceed 1, got {m}")
    return 1.0 + (m - math.sqrt(2.0 * m - 1.0)) / (m - 1.0)
