"""Rotated chord systems on regular polygons.

Draw a chord from each vertex of a regular n-gon to the perimeter point a
fixed arc further along, rotating the same chord n times. The chords cut
out a smaller regular n-gon in the middle whose area divides the outer
area by m = (s/t)**2. This package computes those constructions, inverts
them (find the chord for a target integer ratio), verifies the published
examples, and renders the figures.
"""

from .catalog import CatalogCheck, CatalogEntry, known_triples, verify_catalog
from .construction import (
    Chord,
    ChordalSystem,
    SubPolygonResult,
    area_ratio,
    build_chordal_system,
    perimeter_point,
    square_d_for_m,
    square_ratio_closed,
    square_t_closed,
    sub_polygon,
    unit_spec,
)
from .errors import (
    BracketError,
    CenterChordError,
    ChordalError,
    ConvergenceError,
    DegenerateResultError,
    DomainError,
    InvalidSpecError,
    ParallelLinesError,
)
from .geometry import (
    Line,
    Point,
    Polygon,
    RegularPolygonSpec,
    apothem,
    clip_by_halfplane,
    line_intersection,
    polygon_area,
    regular_area,
    regular_polygon,
)
from .rendering import RenderOptions, render_svg
from .solver import (
    ChordalTriple,
    SolveOutcome,
    VerificationReport,
    construction_levels,
    nested_construction,
    replicate,
    solve_d,
    verify_triple,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "CatalogCheck",
    "CatalogEntry",
    "CenterChordError",
    "Chord",
    "ChordalError",
    "ChordalSystem",
    "ChordalTriple",
    "ConvergenceError",
    "DegenerateResultError",
    "DomainError",
    "InvalidSpecError",
    "Line",
    "ParallelLinesError",
    "Point",
    "Polygon",
    "RegularPolygonSpec",
    "RenderOptions",
    "SolveOutcome",
    "SubPolygonResult",
    "VerificationReport",
    "apothem",
    "area_ratio",
    "build_chordal_system",
    "clip_by_halfplane",
    "construction_levels",
    "known_triples",
    "line_intersection",
    "nested_construction",
    "perimeter_point",
    "polygon_area",
    "regular_area",
    "regular_polygon",
    "render_svg",
    "replicate",
    "solve_d",
    "square_d_for_m",
    "square_ratio_closed",
    "square_t_closed",
    "sub_polygon",
    "unit_spec",
    "verify_catalog",
    "verify_triple",
    "__version__",
]
