"""Deterministic SVG 1.1 and Wavefront OBJ writers.

Identical geometry in, identical bytes out: numbers are formatted through
one canonical function and attribute order is fixed.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .geometry import ControlMesh, ControlPolygon

INPUT_STROKE = "#888888"
CURVE_STROKE = "#1f77b4"
FLAG_FILL = "#d62728"


def fmt(value) -> str:
    """Canonical fixed-point rendering with 6 decimals, trimmed."""
    text = f"{float(value):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _bounds(point_sets: Iterable[Sequence[Tuple[float, float]]]):
    xs, ys = [], []
    for points in point_sets:
        for p in points:
            xs.append(float(p[0]))
            ys.append(float(p[1]))
    if not xs:
        return 0.0, 0.0, 1.0, 1.0
    return min(xs), min(ys), max(xs), max(ys)


def _flip(points, y_min, y_max):
    # SVG y grows downward; mirror inside the data's own bounding band
    return [(float(p[0]), y_min + y_max - float(p[1])) for p in points]


def _points_attr(points) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)


def curve_svg(layers: List[dict]) -> str:
    """Render curve layers.

    Each layer: {"id": str, "input": [...], "refined": [...],
                 "closed": bool, "flags": [...points...] (optional)}.
    Input polygons are dashed, refined curves solid, flagged vertices are
    filled circles sitting on the curve.
    """
    all_sets = []
    for layer in layers:
        all_sets.append(layer["input"])
        all_sets.append(layer["refined"])
    x_min, y_min, x_max, y_max = _bounds(all_sets)
    extent = max(x_max - x_min, y_max - y_min, 1e-9)
    margin = 0.05 * extent
    stroke = 0.006 * extent
    radius = 0.012 * extent

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{fmt(x_min - margin)} {fmt(y_min - margin)} '
        f'{fmt(x_max - x_min + 2 * margin)} {fmt(y_max - y_min + 2 * margin)}">',
    ]
    for layer in layers:
        tag = "polygon" if layer.get("closed", True) else "polyline"
        input_pts = _flip(layer["input"], y_min, y_max)
        refined_pts = _flip(layer["refined"], y_min, y_max)
        lines.append(f'  <g id="{layer["id"]}">')
        lines.append(
            f'    <{tag} points="{_points_attr(input_pts)}" fill="none" '
            f'stroke="{INPUT_STROKE}" stroke-width="{fmt(stroke)}" '
            f'stroke-dasharray="{fmt(4 * stroke)} {fmt(3 * stroke)}"/>'
        )
        lines.append(
            f'    <{tag} points="{_points_attr(refined_pts)}" fill="none" '
            f'stroke="{CURVE_STROKE}" stroke-width="{fmt(stroke)}"/>'
        )
        for x, y in _flip(layer.get("flags", []), y_min, y_max):
            lines.append(
                f'    <circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(radius)}" '
                f'fill="{FLAG_FILL}"/>'
            )
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def function_svg(xs, ys, support_radius=None) -> str:
    """Plot a sampled function (used for basic limit functions)."""
    points = list(zip((float(x) for x in xs), (float(y) for y in ys)))
    layer = {
        "id": "basis",
        "input": [(points[0][0], 0.0), (points[-1][0], 0.0)],
        "refined": points,
        "closed": False,
    }
    if support_radius is not None:
        layer["flags"] = [(-float(support_radius), 0.0), (float(support_radius), 0.0)]
    return curve_svg([layer])


def mesh_obj(mesh: ControlMesh) -> str:
    """Vertices plus quad faces; closed directions wrap around."""
    rows, cols = mesh.rows, mesh.cols
    lines = [f"# subdivkit grid {rows}x{cols}"]
    for row in mesh.grid:
        for p in row:
            x, y = float(p[0]), float(p[1])
            z = float(p[2]) if len(p) > 2 else 0.0
            lines.append(f"v {fmt(x)} {fmt(y)} {fmt(z)}")

    def vid(r, c):
        return 1 + (r % rows) * cols + (c % cols)

    row_count = rows if mesh.col_topology == "closed" else rows - 1
    col_count = cols if mesh.row_topology == "closed" else cols - 1
    for r in range(row_count):
        for c in range(col_count):
            lines.append(
                f"f {vid(r, c)} {vid(r, c + 1)} {vid(r + 1, c + 1)} {vid(r + 1, c)}"
            )
    return "\n".join(lines) + "\n"


def polygon_layer(
    item_id: str,
    source: ControlPolygon,
    refined: ControlPolygon,
    flagged_points=None,
) -> dict:
    return {
        "id": item_id,
        "input": [tuple(map(float, p[:2])) for p in source.points],
        "refined": [tuple(map(float, p[:2])) for p in refined.points],
        "closed": source.closed,
        "flags": [tuple(map(float, p[:2])) for p in (flagged_points or [])],
    }
