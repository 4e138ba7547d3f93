// Designer wiring: canvas editing, tension controls, live service calls.

import { ServiceClient, ServiceError, usesProfile } from "./client.js";
import { canonical } from "./fractions.js";
import {
  drawScene,
  fitViewport,
  nearestEdge,
  nearestVertex,
  prepareDrawList,
  toWorld,
  Viewport,
} from "./render.js";
import {
  DesignSession,
  MAX_DEPTH,
  SessionError,
  addPoint,
  fromScene,
  newSession,
  removePoint,
  setDefaults,
  setFlag,
  toScene,
  validateSession,
} from "./session.js";

const DEBOUNCE_MS = 60;
const DRAG_DEPTH = 4;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("canvas");
const ctx = canvas.getContext("2d")!;
const client = new ServiceClient("");

let session = newSession();
let view: Viewport = fitViewport(session.points, canvas.width, canvas.height);
let refined: number[][] = [];
let flaggedIndices: number[] = [];
let selectedVertex = -1;
let selectedEdge = -1;
let dragging = -1;
let debounceTimer: number | undefined;

const banner = el<HTMLDivElement>("banner");
const alphaInput = el<HTMLInputElement>("alpha");
const betaInput = el<HTMLInputElement>("beta");
const alphaSlider = el<HTMLInputElement>("alpha-slider");
const betaSlider = el<HTMLInputElement>("beta-slider");
const nSelect = el<HTMLSelectElement>("n-select");
const familySelect = el<HTMLSelectElement>("family-select");
const depthSlider = el<HTMLInputElement>("depth");
const depthLabel = el<HTMLSpanElement>("depth-label");
const closedBox = el<HTMLInputElement>("closed");
const selectionPanel = el<HTMLDivElement>("selection");

depthSlider.max = String(MAX_DEPTH);

function showBanner(text: string) {
  banner.textContent = text;
  banner.classList.add("visible");
}

function hideBanner() {
  banner.classList.remove("visible");
}

function redraw() {
  view = fitViewport(session.points, canvas.width, canvas.height);
  drawScene(
    ctx,
    prepareDrawList(session, refined, flaggedIndices),
    view,
    selectedVertex,
    selectedEdge
  );
}

async function requestCurve(depth: number) {
  const working: DesignSession = { ...session, depth };
  try {
    validateSession(working);
    if (usesProfile(working)) {
      const result = await client.interproximate(working);
      refined = result.points;
      flaggedIndices = result.flagged_indices[result.flagged_indices.length - 1] ?? [];
    } else {
      const result = await client.refine(working);
      refined = result.points;
      flaggedIndices = [];
    }
    hideBanner();
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    if (err instanceof SessionError) {
      showBanner(`invalid session at ${err.path}: ${err.message}`);
      return;
    }
    if (err instanceof ServiceError) {
      showBanner(`service error ${err.status}: ${err.message}`);
      return;
    }
    showBanner("service unreachable; is `subdivkit serve` running? retrying on next edit");
    return;
  }
  redraw();
}

function scheduleUpdate(depth = session.depth) {
  window.clearTimeout(debounceTimer);
  debounceTimer = window.setTimeout(() => void requestCurve(depth), DEBOUNCE_MS);
}

function describeSelection(): string {
  if (selectedVertex >= 0) {
    const flag = session.flags[selectedVertex] ? "interpolated" : "approximated";
    return (
      `vertex ${selectedVertex} (${flag}), alpha = ${session.vertexAlpha[selectedVertex]}` +
      " - double-click toggles the flag, shift-click deletes"
    );
  }
  if (selectedEdge >= 0) {
    const [a, b] = session.edgeParams[selectedEdge];
    return `edge ${selectedEdge}: alpha = ${a}, beta = ${b} (edit below to override)`;
  }
  return "click a vertex or edge midpoint to select; click empty space to add a point";
}

function syncControls() {
  alphaInput.value = session.defaults[0];
  betaInput.value = session.defaults[1];
  nSelect.value = String(session.N);
  familySelect.value = session.family;
  depthSlider.value = String(session.depth);
  depthLabel.textContent = String(session.depth);
  closedBox.checked = session.closed;
  selectionPanel.textContent = describeSelection();
}

// -- canvas interaction ------------------------------------------------------

canvas.addEventListener("mousedown", (event) => {
  const rect = canvas.getBoundingClientRect();
  const x = event.clientX - rect.left;
  const y = event.clientY - rect.top;
  const vertex = nearestVertex(session, view, x, y);
  if (vertex >= 0 && event.shiftKey) {
    if (session.points.length > 3) {
      removePoint(session, vertex);
      selectedVertex = selectedEdge = -1;
      syncControls();
      redraw();
      scheduleUpdate();
    }
    return;
  }
  if (vertex >= 0) {
    dragging = vertex;
    selectedVertex = vertex;
    selectedEdge = -1;
    syncControls();
    redraw();
    return;
  }
  const edge = nearestEdge(session, view, x, y);
  if (edge >= 0) {
    selectedEdge = edge;
    selectedVertex = -1;
    syncControls();
    redraw();
    return;
  }
  addPoint(session, ...toWorld(view, x, y));
  selectedVertex = session.points.length - 1;
  selectedEdge = -1;
  syncControls();
  redraw();
  scheduleUpdate();
});

canvas.addEventListener("mousemove", (event) => {
  if (dragging < 0) return;
  const rect = canvas.getBoundingClientRect();
  const world = toWorld(view, event.clientX - rect.left, event.clientY - rect.top);
  session.points[dragging] = world;
  redraw();
  scheduleUpdate(Math.min(session.depth, DRAG_DEPTH));
});

window.addEventListener("mouseup", () => {
  if (dragging >= 0) {
    dragging = -1;
    scheduleUpdate(session.depth); // exact-depth render on release
  }
});

canvas.addEventListener("dblclick", (event) => {
  const rect = canvas.getBoundingClientRect();
  const vertex = nearestVertex(
    session,
    view,
    event.clientX - rect.left,
    event.clientY - rect.top
  );
  if (vertex >= 0) {
    setFlag(session, vertex, !session.flags[vertex]);
    selectedVertex = vertex;
    syncControls();
    scheduleUpdate();
  }
});

// -- parameter controls ------------------------------------------------------

function applyDefaults() {
  try {
    setDefaults(session, alphaInput.value, betaInput.value);
    hideBanner();
    syncControls();
    scheduleUpdate();
  } catch (err) {
    showBanner(`invalid tension value: ${(err as Error).message}`);
  }
}

alphaInput.addEventListener("change", applyDefaults);
betaInput.addEventListener("change", applyDefaults);

// sliders move in 1/256 steps and write exact fraction strings
alphaSlider.addEventListener("input", () => {
  alphaInput.value = canonical(`${alphaSlider.value}/256`);
  applyDefaults();
});
betaSlider.addEventListener("input", () => {
  betaInput.value = canonical(`${betaSlider.value}/1024`);
  applyDefaults();
});

nSelect.addEventListener("change", () => {
  session.N = Number(nSelect.value);
  scheduleUpdate();
});

familySelect.addEventListener("change", () => {
  session.family = familySelect.value as DesignSession["family"];
  syncControls();
  scheduleUpdate();
});

depthSlider.addEventListener("input", () => {
  session.depth = Number(depthSlider.value);
  depthLabel.textContent = depthSlider.value;
  scheduleUpdate();
});

closedBox.addEventListener("change", () => {
  session.closed = closedBox.checked;
  const wanted = session.closed ? session.points.length : session.points.length - 1;
  while (session.edgeParams.length > wanted) session.edgeParams.pop();
  while (session.edgeParams.length < wanted) {
    session.edgeParams.push([...session.defaults] as [string, string]);
  }
  scheduleUpdate();
});

el<HTMLButtonElement>("edge-apply").addEventListener("click", () => {
  if (selectedEdge < 0) return;
  try {
    session.edgeParams[selectedEdge] = [
      canonical(el<HTMLInputElement>("edge-alpha").value),
      canonical(el<HTMLInputElement>("edge-beta").value),
    ];
    hideBanner();
    syncControls();
    scheduleUpdate();
  } catch (err) {
    showBanner(`invalid edge value: ${(err as Error).message}`);
  }
});

// -- session import/export ---------------------------------------------------

el<HTMLButtonElement>("export").addEventListener("click", () => {
  const blob = new Blob([JSON.stringify(toScene(session), null, 2)], {
    type: "application/json",
  });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = "design.json";
  link.click();
  URL.revokeObjectURL(url);
});

el<HTMLInputElement>("import").addEventListener("change", async (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  try {
    session = fromScene(JSON.parse(await file.text()));
    selectedVertex = selectedEdge = -1;
    hideBanner();
    syncControls();
    redraw();
    scheduleUpdate();
  } catch (err) {
    if (err instanceof SessionError) {
      showBanner(`import failed at ${err.path}: ${err.message}`);
    } else {
      showBanner(`import failed: ${(err as Error).message}`);
    }
  } finally {
    input.value = "";
  }
});

el<HTMLButtonElement>("reset").addEventListener("click", () => {
  session = newSession();
  selectedVertex = selectedEdge = -1;
  syncControls();
  redraw();
  scheduleUpdate();
});

syncControls();
redraw();
scheduleUpdate();
