/**
 * Pointer-to-perimeter projection for the drag handle.
 *
 * This is input mapping, not geometry: it turns a pointer position into a
 * side distance d using the outer vertices the service sent. Everything
 * that gets drawn still comes back from /api/construction.
 */

import type { Pair } from "./types.js";

// keep d off the interval ends and outside the degenerate center band;
// the center guard must stop where the service still answers: at
// n/2 - 1e-4 the inner area fraction stays above the degeneracy floor
// for every selectable n, with two orders of magnitude to spare
export const EDGE_GUARD = 1e-6;
export const CENTER_GUARD = 1e-4;

export interface Projection {
  /** nearest point on the perimeter */
  point: Pair;
  /** arc length from vertex 0 in side units, in [0, n) */
  d: number;
}

/**
 * Nearest point on the closed polygon boundary. Vertices are in ccw
 * order with equal edge lengths, so vertex k sits at arc k and the point
 * a fraction t along edge k sits at arc k + t.
 */
export function projectToPerimeter(outer: Pair[], x: number, y: number): Projection {
  let best: Projection = { point: outer[0] as Pair, d: 0 };
  let bestDist = Infinity;
  for (let i = 0; i < outer.length; i += 1) {
    const [ax, ay] = outer[i] as Pair;
    const [bx, by] = outer[(i + 1) % outer.length] as Pair;
    const ex = bx - ax;
    const ey = by - ay;
    const lenSq = ex * ex + ey * ey;
    let t = ((x - ax) * ex + (y - ay) * ey) / lenSq;
    t = Math.min(1, Math.max(0, t));
    const px = ax + t * ex;
    const py = ay + t * ey;
    const dist = (x - px) * (x - px) + (y - py) * (y - py);
    if (dist < bestDist) {
      bestDist = dist;
      best = { point: [px, py], d: i + t };
    }
  }
  return best;
}

/**
 * Clamp a raw arc distance into the legal open interval (1, n-1),
 * stopping a guard band short of each end and of the half-perimeter
 * point n/2 where the chords would meet at the center.
 */
export function clampD(n: number, raw: number): number {
  let d = Math.min(Math.max(raw, 1 + EDGE_GUARD), n - 1 - EDGE_GUARD);
  const half = n / 2;
  if (Math.abs(d - half) < CENTER_GUARD) {
    // landing exactly on the half-perimeter point stops short of it
    d = d <= half ? half - CENTER_GUARD : half + CENTER_GUARD;
  }
  return d;
}
