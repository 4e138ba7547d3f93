// Service client. The UI never refines anything itself: every curve shown
// comes back from these endpoints. At most one request is in flight per
// edit stream; a newer request aborts the older one (latest wins).

import type { DesignSession } from "./session.js";
import { edgeCount } from "./session.js";

export interface InterproximateResponse {
  points: number[][];
  sizes: number[];
  flagged_indices: number[][];
}

export interface RefineResponse {
  points: number[][];
}

export class ServiceError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ServiceClient {
  private inflight: AbortController | null = null;

  constructor(private baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
    if (!response.ok) {
      const text = await response.text();
      throw new ServiceError(response.status, text || response.statusText);
    }
    return (await response.json()) as T;
  }

  interproximate(session: DesignSession): Promise<InterproximateResponse> {
    return this.post<InterproximateResponse>("/interproximate", {
      polygon: {
        points: session.points,
        topology: session.closed ? "closed" : "open",
      },
      profile: {
        vertex_alpha: session.vertexAlpha,
        edge_params: session.edgeParams.slice(0, edgeCount(session)),
        interpolate: session.flags,
        default_params: session.defaults,
      },
      N: session.N,
      steps: session.depth,
    });
  }

  refine(session: DesignSession): Promise<RefineResponse> {
    return this.post<RefineResponse>("/refine", {
      scheme: {
        family: session.family,
        N: session.N,
        alpha: session.defaults[0],
        beta: session.family === "relaxed" ? "0" : session.defaults[1],
      },
      steps: session.depth,
      polygon: {
        points: session.points,
        topology: session.closed ? "closed" : "open",
      },
    });
  }
}

// interproximate profiles only exist for the extended family; anything else
// goes through plain refinement
export function usesProfile(session: DesignSession): boolean {
  return session.family === "extended";
}
