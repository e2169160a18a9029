"""Planar geometry substrate: regular polygons, areas, lines, convex clipping.

Conventions used throughout the package:

* polygons are simple, convex, and wound counterclockwise (positive
  shoelace area);
* all arithmetic is double precision, with tolerances stated per operation
  and scaled by the polygon size where relevant;
* values are immutable after construction, so everything here is safe for
  unrestricted concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateResultError,
    DomainError,
    InvalidSpecError,
    ParallelLinesError,
)

# Two lines count as parallel when the normalized direction cross product
# falls below this; well inside double precision at desk-scale coordinates.
PARALLEL_EPS = 1e-12

# Consecutive polygon vertices closer than this fraction of the polygon
# scale are treated as coincident.
COINCIDENT_EPS = 1e-12

# Clipping weld band, relative to the bounding scale. Vertices this close to
# the clip line count as on it, and output points this close together collapse
# to one. Three orders of magnitude below the shortest edge any surviving
# inner polygon can have, so distinct vertices never merge.
CLIP_WELD_EPS = 1e-9


@dataclass(frozen=True)
class Point:
    """A planar point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidSpecError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Line:
    """An infinite line through two distinct points."""

    p: Point
    q: Point

    def __post_init__(self) -> None:
        if self.p.x == self.q.x and self.p.y == self.q.y:
            raise InvalidSpecError("line requires two distinct points")

    @property
    def direction(self) -> tuple[float, float]:
        return (self.q.x - self.p.x, self.q.y - self.p.y)


@dataclass(frozen=True)
class Polygon:
    """A convex, simple polygon with counterclockwise vertices.

    Construction validates winding, convexity, and that no two consecutive
    vertices coincide (within COINCIDENT_EPS of the bounding-box diagonal).
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise InvalidSpecError(f"polygon needs at least 3 vertices, got {n}")

        scale = self.bbox_diagonal()
        if scale <= 0.0:
            raise InvalidSpecError("polygon vertices are all coincident")
        for i in range(n):
            if verts[i].distance_to(verts[(i + 1) % n]) <= COINCIDENT_EPS * scale:
                raise InvalidSpecError(f"consecutive vertices {i} and {(i + 1) % n} coincide")

        if self.signed_area() <= 0.0:
            raise InvalidSpecError("polygon vertices must wind counterclockwise")

        cross_floor = -COINCIDENT_EPS * scale * scale
        strictly_convex = 0
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if cross < cross_floor:
                raise InvalidSpecError(f"polygon is not convex at vertex {i}")
            if cross > -cross_floor:
                strictly_convex += 1
        if strictly_convex < 3:
            raise InvalidSpecError("polygon is degenerate (fewer than 3 proper corners)")

    def __len__(self) -> int:
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        """Vertices as an (n, 2) float array."""
        return np.array([(v.x, v.y) for v in self.vertices], dtype=float)

    def signed_area(self) -> float:
        total = 0.0
        verts = self.vertices
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            total += a.x * b.y - b.x * a.y
        return 0.5 * total

    def bounds(self) -> tuple[float, float, float, float]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def bbox_diagonal(self) -> float:
        """Bounding-box diagonal, the size scale used for tolerances."""
        minx, miny, maxx, maxy = self.bounds()
        return math.hypot(maxx - minx, maxy - miny)

    def edge_lengths(self) -> list[float]:
        verts = self.vertices
        return [verts[i].distance_to(verts[(i + 1) % len(verts)]) for i in range(len(verts))]


@dataclass(frozen=True)
class RegularPolygonSpec:
    """A regular n-gon: side count, side length, center, and orientation.

    ``phase`` is the angle (radians) of vertex 0 as seen from the center.
    """

    n: int
    side: float
    center: Point = Point(0.0, 0.0)
    phase: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise InvalidSpecError(f"regular polygon needs n >= 3 sides, got {self.n}")
        if not (math.isfinite(self.side) and self.side > 0.0):
            raise InvalidSpecError(f"side length must be positive and finite, got {self.side}")
        if not math.isfinite(self.phase):
            raise InvalidSpecError("phase must be finite")

    @property
    def circumradius(self) -> float:
        return self.side / (2.0 * math.sin(math.pi / self.n))


def regular_polygon(spec: RegularPolygonSpec) -> Polygon:
    """Vertices of the regular n-gon described by ``spec``, counterclockwise.

    Vertex k sits at angle ``phase + 2*pi*k/n`` on the circumcircle.
    """
    n = spec.n
    radius = spec.circumradius
    angles = spec.phase + 2.0 * math.pi * np.arange(n) / n
    xs = spec.center.x + radius * np.cos(angles)
    ys = spec.center.y + radius * np.sin(angles)
    return Polygon(tuple(Point(float(x), float(y)) for x, y in zip(xs, ys)))


def polygon_area(poly: Polygon) -> float:
    """Shoelace area of a polygon (always positive)."""
    arr = poly.as_array()
    x, y = arr[:, 0], arr[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def apothem(n: int, side: float) -> float:
    """Distance from the center of a regular n-gon to a side midpoint."""
    if not isinstance(n, int) or n < 3:
        raise InvalidSpecError(f"apothem needs n >= 3, got {n}")
    if not (math.isfinite(side) and side > 0.0):
        raise InvalidSpecError(f"apothem needs side > 0, got {side}")
    return side / (2.0 * math.tan(math.pi / n))


def regular_area(n: int, side: float) -> float:
    """Area of a regular n-gon: apothem times half the perimeter."""
    return apothem(n, side) * (n * side) / 2.0


def line_intersection(l1: Line, l2: Line) -> Point:
    """The unique point on both carrier lines.

    Raises ParallelLinesError when the normalized direction cross product
    magnitude is below PARALLEL_EPS, which signals a degenerate chord
    configuration further up the stack.
    """
    d1x, d1y = l1.direction
    d2x, d2y = l2.direction
    denom = d1x * d2y - d1y * d2x
    norm = math.hypot(d1x, d1y) * math.hypot(d2x, d2y)
    if abs(denom) <= PARALLEL_EPS * norm:
        raise ParallelLinesError("lines are parallel or nearly so; no unique intersection")
    rx = l2.p.x - l1.p.x
    ry = l2.p.y - l1.p.y
    t = (rx * d2y - ry * d2x) / denom
    return Point(l1.p.x + t * d1x, l1.p.y + t * d1y)


def clip_by_halfplane(poly: Polygon, boundary: Line, keep: Point) -> Polygon:
    """Intersect ``poly`` with the closed half-plane of ``boundary`` containing ``keep``.

    Standard convex clipping against a single line: walk the edges, keep
    inside vertices, and insert the crossing point on each edge that
    straddles the boundary. A line that misses the polygon entirely returns
    the polygon unchanged.

    Raises DomainError when ``keep`` lies on the boundary (no side to pick)
    and DegenerateResultError when the intersection has fewer than three
    vertices.
    """
    scale = poly.bbox_diagonal()
    dx, dy = boundary.direction
    length = math.hypot(dx, dy)

    def signed_distance(px: float, py: float) -> float:
        return (dx * (py - boundary.p.y) - dy * (px - boundary.p.x)) / length

    keep_dist = signed_distance(keep.x, keep.y)
    if abs(keep_dist) <= COINCIDENT_EPS * scale:
        raise DomainError("keep point lies on the clip boundary")
    orient = 1.0 if keep_dist > 0.0 else -1.0

    verts = poly.vertices
    dists = [orient * signed_distance(v.x, v.y) for v in verts]
    # band vertices count as inside; a crossing is emitted only when an edge
    # straddles the line strictly, which stops near-tangent edges from
    # spawning phantom points a hair away from a kept vertex
    band = CLIP_WELD_EPS * scale
    if all(d >= -band for d in dists):
        return poly

    out: list[Point] = []
    n = len(verts)
    for i in range(n):
        prev, cur = verts[i - 1], verts[i]
        d_prev, d_cur = dists[i - 1], dists[i]
        if (d_prev > band and d_cur < -band) or (d_prev < -band and d_cur > band):
            out.append(_edge_crossing(prev, cur, d_prev, d_cur))
        if d_cur >= -band:
            out.append(cur)

    deduped: list[Point] = []
    for pt in out:
        if not deduped or pt.distance_to(deduped[-1]) > band:
            deduped.append(pt)
    if len(deduped) > 1 and deduped[0].distance_to(deduped[-1]) <= band:
        deduped.pop()

    if len(deduped) < 3:
        raise DegenerateResultError("half-plane clip left fewer than 3 vertices")
    return Polygon(tuple(deduped))


def _edge_crossing(a: Point, b: Point, da: float, db: float) -> Point:
    t = da / (da - db)
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
