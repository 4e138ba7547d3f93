// Canvas rendering. prepareDrawList is a pure function from session state
// and a service response to the world-space arrays that get drawn; the
// canvas transform is display-only, so the drawn point array IS the service
// point array.

import type { DesignSession } from "./session.js";

export interface DrawList {
  input: [number, number][];
  refined: [number, number][];
  flagged: [number, number][];
  closed: boolean;
}

export interface Viewport {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function prepareDrawList(
  session: DesignSession,
  refinedPoints: number[][],
  flaggedIndices: number[] = []
): DrawList {
  return {
    input: session.points.map((p) => [p[0], p[1]]),
    refined: refinedPoints.map((p) => [p[0], p[1]] as [number, number]),
    flagged: flaggedIndices
      .filter((i) => i >= 0 && i < refinedPoints.length)
      .map((i) => [refinedPoints[i][0], refinedPoints[i][1]] as [number, number]),
    closed: session.closed,
  };
}

export function fitViewport(
  points: [number, number][],
  width: number,
  height: number,
  padding = 40
): Viewport {
  if (points.length === 0) {
    return { scale: 1, offsetX: width / 2, offsetY: height / 2 };
  }
  let xMin = Infinity, xMax = -Infinity, yMin = Infinity, yMax = -Infinity;
  for (const [x, y] of points) {
    xMin = Math.min(xMin, x);
    xMax = Math.max(xMax, x);
    yMin = Math.min(yMin, y);
    yMax = Math.max(yMax, y);
  }
  const spanX = Math.max(xMax - xMin, 1e-9);
  const spanY = Math.max(yMax - yMin, 1e-9);
  const scale = Math.min((width - 2 * padding) / spanX, (height - 2 * padding) / spanY);
  return {
    scale,
    offsetX: padding - xMin * scale + (width - 2 * padding - spanX * scale) / 2,
    // canvas y is downward; world y is upward
    offsetY: height - padding + yMin * scale + (height - 2 * padding - spanY * scale) / -2,
  };
}

export function toCanvas(view: Viewport, p: [number, number]): [number, number] {
  return [p[0] * view.scale + view.offsetX, view.offsetY - p[1] * view.scale];
}

export function toWorld(view: Viewport, x: number, y: number): [number, number] {
  return [(x - view.offsetX) / view.scale, (view.offsetY - y) / view.scale];
}

export function nearestVertex(
  session: DesignSession,
  view: Viewport,
  x: number,
  y: number,
  radius = 10
): number {
  let best = -1;
  let bestDist = radius * radius;
  session.points.forEach((p, i) => {
    const [cx, cy] = toCanvas(view, p);
    const d = (cx - x) * (cx - x) + (cy - y) * (cy - y);
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}

export function nearestEdge(
  session: DesignSession,
  view: Viewport,
  x: number,
  y: number,
  radius = 10
): number {
  const n = session.points.length;
  const count = session.closed ? n : n - 1;
  let best = -1;
  let bestDist = radius * radius;
  for (let e = 0; e < count; e++) {
    const a = session.points[e];
    const b = session.points[(e + 1) % n];
    const mid: [number, number] = [(a[0] + b[0]) / 2, (a[1] + b[1]) / 2];
    const [cx, cy] = toCanvas(view, mid);
    const d = (cx - x) * (cx - x) + (cy - y) * (cy - y);
    if (d <= bestDist) {
      best = e;
      bestDist = d;
    }
  }
  return best;
}

const INPUT_STROKE = "#888888";
const CURVE_STROKE = "#1f77b4";
const FLAG_FILL = "#d62728";
const VERTEX_FILL = "#444444";

function tracePath(
  ctx: CanvasRenderingContext2D,
  view: Viewport,
  points: [number, number][],
  closed: boolean
): void {
  ctx.beginPath();
  points.forEach((p, i) => {
    const [x, y] = toCanvas(view, p);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  if (closed) ctx.closePath();
}

export function drawScene(
  ctx: CanvasRenderingContext2D,
  list: DrawList,
  view: Viewport,
  selectedVertex = -1,
  selectedEdge = -1
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);

  if (list.input.length > 1) {
    tracePath(ctx, view, list.input, list.closed);
    ctx.setLineDash([6, 5]);
    ctx.strokeStyle = INPUT_STROKE;
    ctx.lineWidth = 1;
    ctx.stroke();
    ctx.setLineDash([]);
  }
  if (selectedEdge >= 0 && list.input.length > 1) {
    const a = list.input[selectedEdge];
    const b = list.input[(selectedEdge + 1) % list.input.length];
    ctx.beginPath();
    const [ax, ay] = toCanvas(view, a);
    const [bx, by] = toCanvas(view, b);
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.strokeStyle = FLAG_FILL;
    ctx.lineWidth = 2.5;
    ctx.stroke();
  }
  if (list.refined.length > 1) {
    tracePath(ctx, view, list.refined, list.closed);
    ctx.strokeStyle = CURVE_STROKE;
    ctx.lineWidth = 1.8;
    ctx.stroke();
  }
  list.input.forEach((p, i) => {
    const [x, y] = toCanvas(view, p);
    ctx.beginPath();
    ctx.arc(x, y, i === selectedVertex ? 6 : 4, 0, 2 * Math.PI);
    ctx.fillStyle = VERTEX_FILL;
    ctx.fill();
  });
  for (const p of list.flagged) {
    const [x, y] = toCanvas(view, p);
    ctx.beginPath();
    ctx.arc(x, y, 5, 0, 2 * Math.PI);
    ctx.fillStyle = FLAG_FILL;
    ctx.fill();
  }
}
