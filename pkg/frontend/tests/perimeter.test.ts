import { describe, expect, it } from "vitest";

import { CENTER_GUARD, EDGE_GUARD, clampD, projectToPerimeter } from "../src/perimeter.js";
import type { Pair } from "../src/types.js";

// canonical unit-side square as the service reports it: circumradius 1/sqrt(2)
const R = Math.SQRT1_2;
const SQUARE: Pair[] = [
  [R, 0],
  [0, R],
  [-R, 0],
  [0, -R],
];

function edgePoint(outer: Pair[], i: number, t: number): Pair {
  const a = outer[i] as Pair;
  const b = outer[(i + 1) % outer.length] as Pair;
  return [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
}

describe("projectToPerimeter", () => {
  it("maps the midpoint of the second edge to d = 1.5", () => {
    const p = edgePoint(SQUARE, 1, 0.5);
    const proj = projectToPerimeter(SQUARE, p[0], p[1]);
    expect(proj.d).toBe(1.5);
    expect(proj.point[0]).toBeCloseTo(-R / 2, 12);
    expect(proj.point[1]).toBeCloseTo(R / 2, 12);
  });

  it("pulls a point far outside onto the nearest vertex", () => {
    const proj = projectToPerimeter(SQUARE, -3, 0);
    expect(proj.d).toBe(2);
    expect(proj.point[0]).toBeCloseTo(-R, 12);
    expect(proj.point[1]).toBeCloseTo(0, 12);
  });

  it("projects an interior point onto the facing edge", () => {
    const proj = projectToPerimeter(SQUARE, 0.3, 0.3);
    expect(proj.d).toBeGreaterThan(0);
    expect(proj.d).toBeLessThan(1);
    // edge 0 lies on the line x + y = R
    expect(proj.point[0] + proj.point[1]).toBeCloseTo(R, 12);
  });

  it("fractional positions interpolate linearly along an edge", () => {
    for (const t of [0.1, 0.25, 0.8]) {
      const p = edgePoint(SQUARE, 2, t);
      const proj = projectToPerimeter(SQUARE, p[0], p[1]);
      expect(proj.d).toBeCloseTo(2 + t, 12);
    }
  });

  it("a vertex belongs to the lower of its two edge arcs", () => {
    const proj = projectToPerimeter(SQUARE, 0, R);
    expect(proj.d).toBe(1);
  });
});

describe("clampD", () => {
  it("leaves interior values alone", () => {
    expect(clampD(6, 2.5)).toBe(2.5);
    expect(clampD(4, 1.3)).toBe(1.3);
  });

  it("stops a guard band inside the interval ends", () => {
    expect(clampD(4, 0.2)).toBe(1 + EDGE_GUARD);
    expect(clampD(4, 3.97)).toBe(3 - EDGE_GUARD);
    expect(clampD(6, -1)).toBe(1 + EDGE_GUARD);
  });

  it("stops short of the half-perimeter point from either side", () => {
    expect(clampD(4, 2.0)).toBe(2 - CENTER_GUARD);
    expect(clampD(4, 2 - 3e-5)).toBe(2 - CENTER_GUARD);
    expect(clampD(4, 2 + 3e-5)).toBe(2 + CENTER_GUARD);
    expect(clampD(6, 3.0)).toBe(3 - CENTER_GUARD);
  });

  it("keeps values just outside the center band untouched", () => {
    expect(clampD(4, 2 - 2e-4)).toBe(2 - 2e-4);
    expect(clampD(4, 2 + 2e-4)).toBe(2 + 2e-4);
  });
});
