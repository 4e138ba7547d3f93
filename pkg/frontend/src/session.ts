// The editable design session and its (lossless) mapping to scene JSON,
// the document format shared with the command-line tool and the service.

import { canonical, fracEquals, isZero } from "./fractions.js";

export type Family = "relaxed" | "extended" | "interpolatory";

export interface DesignSession {
  points: [number, number][];
  closed: boolean;
  flags: boolean[];
  vertexAlpha: string[];
  edgeParams: [string, string][];
  defaults: [string, string]; // (alpha, beta) for new/updated vertices and edges
  family: Family;
  N: number;
  depth: number;
}

export const MAX_DEPTH = 8;

export class SessionError extends Error {
  constructor(public path: string, message: string) {
    super(`${path}: ${message}`);
  }
}

export function edgeCount(session: DesignSession): number {
  return session.closed ? session.points.length : session.points.length - 1;
}

export function newSession(): DesignSession {
  const points: [number, number][] = [
    [0, 0], [4, 0], [5, 5], [4, 10], [0, 10],
    [0, 8], [1, 8], [2, 5], [1, 2], [0, 2],
  ];
  const n = points.length;
  const defaults: [string, string] = ["1/10", "-49/1152"];
  return {
    points,
    closed: true,
    flags: new Array(n).fill(false),
    vertexAlpha: new Array(n).fill(defaults[0]),
    edgeParams: new Array(n).fill(0).map(() => [...defaults] as [string, string]),
    defaults: [...defaults] as [string, string],
    family: "extended",
    N: 1,
    depth: 5,
  };
}

// flagged vertices must sit exactly on the curve: vertex alpha pinned to 0
export function setFlag(session: DesignSession, index: number, value: boolean): void {
  session.flags[index] = value;
  if (value) {
    session.vertexAlpha[index] = "0";
  } else {
    session.vertexAlpha[index] = session.defaults[0];
  }
}

export function setDefaults(session: DesignSession, alpha: string, beta: string): void {
  const prev = session.defaults;
  session.defaults = [canonical(alpha), canonical(beta)];
  for (let i = 0; i < session.points.length; i++) {
    if (!session.flags[i] && fracEquals(session.vertexAlpha[i], prev[0])) {
      session.vertexAlpha[i] = session.defaults[0];
    }
  }
  for (let e = 0; e < session.edgeParams.length; e++) {
    const [a, b] = session.edgeParams[e];
    if (fracEquals(a, prev[0]) && fracEquals(b, prev[1])) {
      session.edgeParams[e] = [...session.defaults] as [string, string];
    }
  }
}

export function addPoint(session: DesignSession, x: number, y: number): void {
  session.points.push([x, y]);
  session.flags.push(false);
  session.vertexAlpha.push(session.defaults[0]);
  resizeEdges(session);
}

export function removePoint(session: DesignSession, index: number): void {
  session.points.splice(index, 1);
  session.flags.splice(index, 1);
  session.vertexAlpha.splice(index, 1);
  resizeEdges(session);
}

function resizeEdges(session: DesignSession): void {
  const wanted = Math.max(edgeCount(session), 0);
  while (session.edgeParams.length > wanted) session.edgeParams.pop();
  while (session.edgeParams.length < wanted) {
    session.edgeParams.push([...session.defaults] as [string, string]);
  }
}

export function validateSession(session: DesignSession): void {
  if (session.points.length < 3) {
    throw new SessionError("/points", "need at least 3 control points");
  }
  if (session.depth < 0 || session.depth > MAX_DEPTH) {
    throw new SessionError("/depth", `depth must be in 0..${MAX_DEPTH}`);
  }
  if (session.flags.length !== session.points.length) {
    throw new SessionError("/flags", "one flag per vertex");
  }
  if (session.vertexAlpha.length !== session.points.length) {
    throw new SessionError("/vertexAlpha", "one alpha per vertex");
  }
  if (session.edgeParams.length !== edgeCount(session)) {
    throw new SessionError("/edgeParams", "one (alpha, beta) pair per edge");
  }
  session.flags.forEach((flag, i) => {
    if (flag && !isZero(session.vertexAlpha[i])) {
      throw new SessionError(`/vertexAlpha/${i}`, "flagged vertex must have alpha 0");
    }
  });
}

// ---------------------------------------------------------------------------
// scene JSON (schema 1)
// ---------------------------------------------------------------------------

export interface SceneDocument {
  schema: 1;
  scheme: { family: Family; N: number; alpha: string; beta: string };
  steps: number;
  polygons: Array<{
    id: string;
    topology: "closed" | "open";
    points: number[][];
    profile?: {
      vertex_alpha: string[];
      edge_params: [string, string][];
      interpolate: boolean[];
      default_params: [string, string];
    };
  }>;
  exports: Array<{ format: "svg" | "obj"; path: string; ids: string[] }>;
}

export function toScene(session: DesignSession, id = "design"): SceneDocument {
  validateSession(session);
  const doc: SceneDocument = {
    schema: 1,
    scheme: {
      family: session.family,
      N: session.N,
      alpha: canonical(session.defaults[0]),
      beta: canonical(session.defaults[1]),
    },
    steps: session.depth,
    polygons: [
      {
        id,
        topology: session.closed ? "closed" : "open",
        points: session.points.map((p) => [p[0], p[1]]),
      },
    ],
    exports: [{ format: "svg", path: `${id}.svg`, ids: [id] }],
  };
  if (session.family === "extended") {
    doc.polygons[0].profile = {
      vertex_alpha: session.vertexAlpha.map(canonical),
      edge_params: session.edgeParams.map(
        ([a, b]) => [canonical(a), canonical(b)] as [string, string]
      ),
      interpolate: [...session.flags],
      default_params: [canonical(session.defaults[0]), canonical(session.defaults[1])],
    };
  }
  return doc;
}

export function fromScene(doc: unknown): DesignSession {
  const scene = doc as Partial<SceneDocument>;
  if (!scene || scene.schema !== 1) {
    throw new SessionError("/schema", "expected a schema-1 scene document");
  }
  if (!scene.scheme || typeof scene.scheme.N !== "number") {
    throw new SessionError("/scheme", "missing scheme");
  }
  const polygons = scene.polygons ?? [];
  if (polygons.length === 0) {
    throw new SessionError("/polygons", "scene has no polygon to edit");
  }
  const polygon = polygons[0];
  if (!Array.isArray(polygon.points) || polygon.points.length < 3) {
    throw new SessionError("/polygons/0/points", "need at least 3 control points");
  }
  const n = polygon.points.length;
  const family = (scene.scheme.family ?? "extended") as Family;
  const defaults: [string, string] = [
    canonical(scene.scheme.alpha ?? "0"),
    canonical(scene.scheme.beta ?? "0"),
  ];
  const closed = polygon.topology !== "open";
  const session: DesignSession = {
    points: polygon.points.map((p, i) => {
      if (!Array.isArray(p) || p.length < 2) {
        throw new SessionError(`/polygons/0/points/${i}`, "expected [x, y]");
      }
      return [Number(p[0]), Number(p[1])];
    }),
    closed,
    flags: new Array(n).fill(false),
    vertexAlpha: new Array(n).fill(defaults[0]),
    edgeParams: [],
    defaults,
    family,
    N: scene.scheme.N,
    depth: Math.min(scene.steps ?? 5, MAX_DEPTH),
  };
  resizeEdges(session);
  const profile = polygon.profile;
  if (profile) {
    if (profile.vertex_alpha.length !== n) {
      throw new SessionError("/polygons/0/profile/vertex_alpha", "length mismatch");
    }
    if (profile.interpolate.length !== n) {
      throw new SessionError("/polygons/0/profile/interpolate", "length mismatch");
    }
    if (profile.edge_params.length !== edgeCount(session)) {
      throw new SessionError("/polygons/0/profile/edge_params", "length mismatch");
    }
    session.vertexAlpha = profile.vertex_alpha.map(canonical);
    session.edgeParams = profile.edge_params.map(
      ([a, b]) => [canonical(a), canonical(b)] as [string, string]
    );
    session.flags = [...profile.interpolate];
    session.defaults = [
      canonical(profile.default_params[0]),
      canonical(profile.default_params[1]),
    ];
  }
  validateSession(session);
  return session;
}
