// The UI never computes refinement; every drawn curve is a service
// response. These tests pin the equivalence chain on committed fixtures:
// the session fixture exports to exactly the scene the command-line tool
// consumes, and the point array handed to the renderer is the refined
// array coordinate-for-coordinate. The Python suite regenerates the same
// fixtures from the core package, so drift on either side fails a test.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { prepareDrawList } from "../src/render.js";
import { DesignSession, fromScene, toScene } from "../src/session.js";

const here = dirname(fileURLToPath(import.meta.url));

function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

const session = fixture<DesignSession>("session.json");
const scene = fixture<Record<string, unknown>>("scene.json");
const refined = fixture<{ points: number[][]; flagged_indices: number[][] }>(
  "refined.json"
);

describe("session/scene equivalence", () => {
  it("the exported scene equals the committed scene document", () => {
    expect(JSON.parse(JSON.stringify(toScene(session)))).toEqual(scene);
  });

  it("the committed scene imports back to the session", () => {
    expect(fromScene(scene)).toEqual(session);
  });
});

describe("rendered point array equals the refined output", () => {
  const finalFlags = refined.flagged_indices[refined.flagged_indices.length - 1];
  const drawList = prepareDrawList(session, refined.points, finalFlags);

  it("coordinate-for-coordinate", () => {
    expect(drawList.refined).toEqual(refined.points);
  });

  it("flag glyphs sit on the curve at the pinned originals", () => {
    expect(drawList.flagged.length).toBe(3);
    const flaggedSources = [6, 7, 8].map((v) => session.points[v]);
    expect(drawList.flagged).toEqual(flaggedSources);
    for (const p of drawList.flagged) {
      expect(drawList.refined).toContainEqual(p);
    }
  });

  it("input layer is the session polygon itself", () => {
    expect(drawList.input).toEqual(session.points);
    expect(drawList.closed).toBe(true);
  });
});
