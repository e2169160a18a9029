"""
The one-fifth square, step by step
==================================

Draw a chord from each corner of a square to the midpoint of the second
side over, going counterclockwise. The four chords cut out a smaller
tilted square in the middle whose area is exactly one fifth of the
original.
"""

import math

from chordal import (
    Point,
    RegularPolygonSpec,
    build_chordal_system,
    render_svg,
    sub_polygon,
)

# a 2x2 square with corners at (0,0), (2,0), (2,2), (0,2)
spec = RegularPolygonSpec(n=4, side=2.0, center=Point(1.0, 1.0), phase=-3 * math.pi / 4)

# d = 1.5 means: walk one full side past the next corner, then half a side more.
# From (0,0) that lands at (2,1), the midpoint of the right edge.
system = build_chordal_system(spec, 1.5)
for chord in system.chords:
    print(
        f"chord {chord.vertex_index}: "
        f"({chord.start.x:.3f}, {chord.start.y:.3f}) -> ({chord.end.x:.3f}, {chord.end.y:.3f})"
    )

result = sub_polygon(system)
print()
print(f"outer area  = {result.area_outer:.12f}")
print(f"inner area  = {result.area_inner:.12f}")
print(f"ratio m     = {result.ratio:.12f}")
print(f"inner side  = {result.t:.12f}  (2/sqrt(5) = {2 / math.sqrt(5):.12f})")

# the same figure as a drawing; the canonical unit frame is fine for that
svg = render_svg(4, 1.5)
with open("one_fifth_square.svg", "w") as fh:
    fh.write(svg)
print()
print("wrote one_fifth_square.svg")
