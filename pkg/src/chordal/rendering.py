"""Deterministic SVG drawings of chordal constructions.

Output is plain SVG 1.1 text built by string assembly, no drawing
library. Coordinates are printed with nine decimals so a parsed-back
drawing reproduces the computed areas to well under 1e-6, and identical
inputs yield byte-identical documents. The y axis is flipped here, at
the document boundary; everything upstream stays counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .geometry import Point, regular_polygon
from .solver import MAX_NESTING_DEPTH, construction_levels

_SVG_OPEN = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
)


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 640
    margin_px: int = 40
    depth: int = 1
    show_labels: bool = False
    outer_color: str = "#1a1a1a"
    chord_color: str = "#2563b0"
    inner_color: str = "#c03520"
    outer_width: float = 2.0
    chord_width: float = 1.2
    inner_width: float = 1.8

    def __post_init__(self) -> None:
        if self.width_px < 64:
            raise InvalidSpecError(f"width_px must be at least 64, got {self.width_px}")
        if self.margin_px < 0 or 2 * self.margin_px >= self.width_px:
            raise InvalidSpecError(f"margin_px {self.margin_px} leaves no drawing area")
        if not 1 <= self.depth <= MAX_NESTING_DEPTH:
            raise InvalidSpecError(
                f"depth must be between 1 and {MAX_NESTING_DEPTH}, got {self.depth}"
            )
        for name in ("outer_width", "chord_width", "inner_width"):
            if getattr(self, name) <= 0:
                raise InvalidSpecError(f"{name} must be positive")
        for name in ("outer_color", "chord_color", "inner_color"):
            if not getattr(self, name):
                raise InvalidSpecError(f"{name} must be a non-empty color")


def render_svg(n: int, d: float, opts: RenderOptions | None = None) -> str:
    """SVG document for the system (n, d), nested ``opts.depth`` levels deep.

    The document contains exactly one outer polygon, n chord lines per
    level, and one inner polygon per level, drawn in that stacking order.
    """
    opts = opts or RenderOptions()
    levels = construction_levels(n, d, opts.depth)

    outer_poly = None
    chords: list[tuple[Point, Point]] = []
    inners = []
    for system, result in levels:
        if outer_poly is None:
            outer_poly = regular_polygon(system.spec)
        chords.extend((c.start, c.end) for c in system.chords)
        inners.append(result.inner)
    assert outer_poly is not None

    min_x, min_y, max_x, max_y = outer_poly.bounds()
    span_x = max_x - min_x
    span_y = max_y - min_y
    scale = (opts.width_px - 2 * opts.margin_px) / span_x
    height = int(round(span_y * scale)) + 2 * opts.margin_px

    def project(p: Point) -> tuple[float, float]:
        # y flip: world ccw up, screen y down
        return (
            opts.margin_px + (p.x - min_x) * scale,
            height - opts.margin_px - (p.y - min_y) * scale,
        )

    def points_attr(poly) -> str:
        return " ".join("{:.9f},{:.9f}".format(*project(v)) for v in poly.vertices)

    parts = [_SVG_OPEN.format(w=opts.width_px, h=height)]
    parts.append(
        f'<polygon class="outer" points="{points_attr(outer_poly)}" fill="none" '
        f'stroke="{opts.outer_color}" stroke-width="{opts.outer_width:g}"/>\n'
    )
    for start, end in chords:
        x1, y1 = project(start)
        x2, y2 = project(end)
        parts.append(
            f'<line class="chord" x1="{x1:.9f}" y1="{y1:.9f}" '
            f'x2="{x2:.9f}" y2="{y2:.9f}" '
            f'stroke="{opts.chord_color}" stroke-width="{opts.chord_width:g}"/>\n'
        )
    for inner in inners:
        parts.append(
            f'<polygon class="inner" points="{points_attr(inner)}" fill="none" '
            f'stroke="{opts.inner_color}" stroke-width="{opts.inner_width:g}"/>\n'
        )
    if opts.show_labels:
        ratio = levels[0][1].ratio
        parts.append(
            f'<text class="label" x="{opts.margin_px}" y="{height - 10}" '
            f'font-family="sans-serif" font-size="14">'
            f"n={n} d={d:.6g} m={ratio:.6f}</text>\n"
        )
        for i, v in enumerate(outer_poly.vertices):
            # nudge labels outward from the polygon center
            cx = (min_x + max_x) / 2
            cy = (min_y + max_y) / 2
            off = Point(v.x + 0.06 * span_x * _sign(v.x - cx), v.y + 0.06 * span_y * _sign(v.y - cy))
            x, y = project(off)
            parts.append(
                f'<text class="label" x="{x:.1f}" y="{y:.1f}" '
                f'font-family="sans-serif" font-size="12" text-anchor="middle">V{i}</text>\n'
            )
    parts.append("</svg>\n")
    return "".join(parts)


def _sign(v: float) -> float:
    if v > 0:
        return 1.0
    if v < 0:
        return -1.0
    return 0.0
