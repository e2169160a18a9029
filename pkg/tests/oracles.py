"""Independent numeric oracles used by the tests.

Everything here deliberately avoids the library's own clipping and
intersection code: intersections come from a dense 2x2 linear solve,
areas from a raw shoelace sum or a membership grid count.
"""

from __future__ import annotations

import math

import numpy as np


def shoelace(points) -> float:
    area = 0.0
    for i in range(len(points)):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % len(points)]
        area += x1 * y2 - x2 * y1
    return abs(area) / 2.0


def solve_intersection(p1, p2, q1, q2):
    """Intersection of lines p1->p2 and q1->q2 via a dense linear solve."""
    a = np.array(
        [[p2[0] - p1[0], -(q2[0] - q1[0])], [p2[1] - p1[1], -(q2[1] - q1[1])]], dtype=float
    )
    b = np.array([q1[0] - p1[0], q1[1] - p1[1]], dtype=float)
    s, _ = np.linalg.solve(a, b)
    return (p1[0] + s * (p2[0] - p1[0]), p1[1] + s * (p2[1] - p1[1]))


def routh_one_seventh_ratio() -> float:
    """Outer/inner area for the cevian triangle with all side ratios 1:2.

    Classic cevian configuration: each vertex joined to the point one third
    of the way along the opposite side. The central triangle has one
    seventh the area.
    """
    verts = [
        (math.cos(a), math.sin(a))
        for a in (math.pi / 2, math.pi / 2 + 2 * math.pi / 3, math.pi / 2 + 4 * math.pi / 3)
    ]
    cevians = []
    for k in range(3):
        b = verts[(k + 1) % 3]
        c = verts[(k + 2) % 3]
        hit = (b[0] + (c[0] - b[0]) / 3.0, b[1] + (c[1] - b[1]) / 3.0)
        cevians.append((verts[k], hit))
    inner = [
        solve_intersection(*cevians[k], *cevians[(k + 1) % 3])
        for k in range(3)
    ]
    return shoelace(verts) / shoelace(inner)


def membership_grid_ratio(n: int, d: float, grid: int = 2500) -> float:
    """Outer/inner ratio by counting grid points inside the central cell.

    A point belongs to the cell when it sits on the same side of every
    chord line as the center. Accuracy is O(perimeter / grid).
    """
    ang = math.pi / 2 + 2 * np.pi * np.arange(n) / n
    radius = 1.0 / (2 * math.sin(math.pi / n))
    vx, vy = radius * np.cos(ang), radius * np.sin(ang)
    k = np.arange(n)
    whole = int(math.floor(d))
    frac = d - whole
    ex = vx[(k + whole) % n] + frac * (vx[(k + whole + 1) % n] - vx[(k + whole) % n])
    ey = vy[(k + whole) % n] + frac * (vy[(k + whole + 1) % n] - vy[(k + whole) % n])
    dx, dy = ex - vx, ey - vy
    center_side = np.sign(dx * (0.0 - vy) - dy * (0.0 - vx))
    xs = np.linspace(-radius, radius, grid)
    gx, gy = np.meshgrid(xs, xs)
    inside = np.ones_like(gx, dtype=bool)
    for i in range(n):
        s = dx[i] * (gy - vy[i]) - dy[i] * (gx - vx[i])
        inside &= np.sign(s) == center_side[i]
    cell_area = inside.mean() * (2 * radius) ** 2
    outer_area = n / (4 * math.tan(math.pi / n))
    return outer_area / cell_area
