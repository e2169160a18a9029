import math

import pytest

from chordal import Point, RegularPolygonSpec


@pytest.fixture
def labeled_square() -> RegularPolygonSpec:
    """Side-2 square with vertices (0,0), (2,0), (2,2), (0,2), ccw from the origin."""
    return RegularPolygonSpec(n=4, side=2.0, center=Point(1.0, 1.0), phase=-3 * math.pi / 4)
