"""
Nested constructions as drawings
================================

Applying the chord system inside each successive inner polygon produces a
telescope of similar n-gons, each 1/m the area of the last. Rendered at
depth 3 the figures make the geometric decay visible.
"""

from chordal import RenderOptions, nested_construction, render_svg

for n, d, name in [(4, 1.5, "square"), (6, 7 / 3, "hexagon"), (8, 2.5, "octagon")]:
    results = nested_construction(n, d, 3)
    outer = results[0].area_outer
    print(f"{name}: d = {d:g}")
    for k, r in enumerate(results, start=1):
        print(f"  depth {k}: inner area = {r.area_inner:.10f}  (outer/inner = {outer / r.area_inner:.6f})")

    path = f"nested_{name}.svg"
    with open(path, "w") as fh:
        fh.write(render_svg(n, d, RenderOptions(depth=3, show_labels=True)))
    print(f"  wrote {path}")
    print()
