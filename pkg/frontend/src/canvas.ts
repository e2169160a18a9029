/**
 * Canvas drawing for the explorer. Pure coordinate mapping: every vertex
 * drawn comes from the construction payload, scaled to fit the canvas.
 */

import type { ConstructionPayload, Pair } from "./types.js";

export interface Viewport {
  scale: number;
  offsetX: number;
  offsetY: number;
  minX: number;
  minY: number;
  height: number;
}

const MARGIN = 40;

/** Scale-to-fit transform for the outer polygon, y flipped for screen space. */
export function fitViewport(outer: Pair[], width: number, height: number): Viewport {
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const [x, y] of outer) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  const spanX = maxX - minX;
  const spanY = maxY - minY;
  const scale = Math.min((width - 2 * MARGIN) / spanX, (height - 2 * MARGIN) / spanY);
  return {
    scale,
    offsetX: (width - spanX * scale) / 2,
    offsetY: (height - spanY * scale) / 2,
    minX,
    minY,
    height,
  };
}

export function toScreen(vp: Viewport, p: Pair): Pair {
  return [vp.offsetX + (p[0] - vp.minX) * vp.scale, vp.height - vp.offsetY - (p[1] - vp.minY) * vp.scale];
}

export function toWorld(vp: Viewport, sx: number, sy: number): Pair {
  return [vp.minX + (sx - vp.offsetX) / vp.scale, vp.minY + (vp.height - vp.offsetY - sy) / vp.scale];
}

/** Screen position of the drag handle: the free end of the first chord. */
export function handleScreenPos(vp: Viewport, payload: ConstructionPayload): Pair {
  const [, end] = payload.chords[0] as [Pair, Pair];
  return toScreen(vp, end);
}

export const HANDLE_HIT_RADIUS = 14;

export function hitsHandle(vp: Viewport, payload: ConstructionPayload, sx: number, sy: number): boolean {
  const [hx, hy] = handleScreenPos(vp, payload);
  return (sx - hx) * (sx - hx) + (sy - hy) * (sy - hy) <= HANDLE_HIT_RADIUS * HANDLE_HIT_RADIUS;
}

function tracePath(ctx: CanvasRenderingContext2D, vp: Viewport, points: Pair[]): void {
  ctx.beginPath();
  points.forEach((p, i) => {
    const [sx, sy] = toScreen(vp, p);
    if (i === 0) ctx.moveTo(sx, sy);
    else ctx.lineTo(sx, sy);
  });
  ctx.closePath();
}

export function draw(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  payload: ConstructionPayload | null,
): void {
  ctx.clearRect(0, 0, width, height);
  if (payload === null) return;
  const vp = fitViewport(payload.outer, width, height);

  tracePath(ctx, vp, payload.outer);
  ctx.lineWidth = 2;
  ctx.strokeStyle = "#1f2430";
  ctx.stroke();

  ctx.lineWidth = 1.25;
  ctx.strokeStyle = "#3b6fd4";
  for (const [start, end] of payload.chords) {
    const [ax, ay] = toScreen(vp, start);
    const [bx, by] = toScreen(vp, end);
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.stroke();
  }

  tracePath(ctx, vp, payload.inner);
  ctx.lineWidth = 2;
  ctx.strokeStyle = "#c23b3b";
  ctx.fillStyle = "rgba(194, 59, 59, 0.12)";
  ctx.fill();
  ctx.stroke();

  const [hx, hy] = handleScreenPos(vp, payload);
  ctx.beginPath();
  ctx.arc(hx, hy, 7, 0, 2 * Math.PI);
  ctx.fillStyle = "#3b6fd4";
  ctx.fill();
  ctx.lineWidth = 2;
  ctx.strokeStyle = "#ffffff";
  ctx.stroke();
}
