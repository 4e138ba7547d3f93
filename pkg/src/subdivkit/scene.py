"""Scene documents: the JSON format shared by the CLI, the service and the UI.

Schema (version 1):

    {
      "schema": 1,
      "scheme": {"family": "relaxed|extended|interpolatory", "N": 0,
                  "alpha": "1/8", "beta": "0"},
      "steps": 5,
      "polygons": [
        {"id": "square", "topology": "closed",
         "points": [[0, 0], [1, 0], [1, 1], [0, 1]],
         "profile": {                       # optional; requires family "extended"
            "vertex_alpha": ["0", "1/10", ...],
            "edge_params": [["1/10", "-49/1152"], ...],
            "interpolate": [true, false, ...],
            "default_params": ["1/10", "-49/1152"]}}
      ],
      "meshes": [
        {"id": "grid", "row_topology": "open", "col_topology": "open",
         "points": [[[0, 0, 0], ...], ...]}
      ],
      "exports": [
        {"format": "svg", "path": "square.svg", "ids": ["square"]},
        {"format": "obj", "path": "grid.obj", "ids": ["grid"]}
      ]
    }

All tension parameters are strings parsed to exact rationals. Point
coordinates are plain JSON numbers (geometry is double precision).
Validation failures raise SceneError carrying a JSON-pointer-style path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import ParameterError, SceneError
from .geometry import ControlMesh, ControlPolygon, TensionProfile
from .masks import FAMILY_LABELS, FAMILY_NAMES, Family
from .rationals import format_rational, parse_rational

SCHEMA_VERSION = 1


@dataclass
class SchemeSelection:
    family: Family
    N: int
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)


@dataclass
class PolygonItem:
    id: str
    polygon: ControlPolygon
    profile: Optional[TensionProfile] = None


@dataclass
class MeshItem:
    id: str
    mesh: ControlMesh


@dataclass
class ExportSpec:
    format: str  # "svg" | "obj"
    path: str
    ids: List[str] = field(default_factory=list)


@dataclass
class Scene:
    scheme: SchemeSelection
    steps: int
    polygons: List[PolygonItem] = field(default_factory=list)
    meshes: List[MeshItem] = field(default_factory=list)
    exports: List[ExportSpec] = field(default_factory=list)


def _require(condition: bool, path: str, message: str):
    if not condition:
        raise SceneError(path, message)


def _get(mapping, key, path, required=True, default=None):
    if key not in mapping:
        _require(not required, f"{path}/{key}", "missing required field")
        return default
    return mapping[key]


def _parse_param(value, path) -> Fraction:
    try:
        return parse_rational(value)
    except ParameterError as exc:
        raise SceneError(path, str(exc)) from None


def _parse_point(value, path, dims):
    _require(isinstance(value, (list, tuple)), path, "point must be an array of numbers")
    _require(len(value) in dims, path, f"point must have {sorted(dims)} coordinates")
    for k, coord in enumerate(value):
        _require(
            isinstance(coord, (int, float)) and not isinstance(coord, bool),
            f"{path}/{k}",
            "coordinate must be a number",
        )
    return tuple(float(c) for c in value)


def _parse_scheme(data, path) -> SchemeSelection:
    _require(isinstance(data, dict), path, "scheme must be an object")
    family_name = _get(data, "family", path)
    _require(
        family_name in FAMILY_NAMES,
        f"{path}/family",
        f"unknown family {family_name!r}; expected one of {sorted(FAMILY_NAMES)}",
    )
    family = FAMILY_NAMES[family_name]
    n_value = _get(data, "N", path)
    _require(
        isinstance(n_value, int) and not isinstance(n_value, bool) and n_value >= 0,
        f"{path}/N",
        "N must be a non-negative integer",
    )
    alpha = _parse_param(data.get("alpha", "0"), f"{path}/alpha")
    beta = _parse_param(data.get("beta", "0"), f"{path}/beta")
    if family is Family.RELAXED_2N2 and beta != 0:
        raise SceneError(f"{path}/beta", "the relaxed family takes no beta parameter")
    return SchemeSelection(family=family, N=n_value, alpha=alpha, beta=beta)


def _parse_profile(data, path, polygon: ControlPolygon) -> TensionProfile:
    _require(isinstance(data, dict), path, "profile must be an object")
    vertex_alpha = _get(data, "vertex_alpha", path)
    _require(isinstance(vertex_alpha, list), f"{path}/vertex_alpha", "must be an array")
    edges = _get(data, "edge_params", path)
    _require(isinstance(edges, list), f"{path}/edge_params", "must be an array")
    flags = _get(data, "interpolate", path)
    _require(isinstance(flags, list), f"{path}/interpolate", "must be an array")
    default = _get(data, "default_params", path)
    _require(
        isinstance(default, (list, tuple)) and len(default) == 2,
        f"{path}/default_params",
        "must be a [alpha, beta] pair",
    )
    parsed_edges = []
    for k, pair in enumerate(edges):
        _require(
            isinstance(pair, (list, tuple)) and len(pair) == 2,
            f"{path}/edge_params/{k}",
            "must be a [alpha, beta] pair",
        )
        parsed_edges.append(
            (
                _parse_param(pair[0], f"{path}/edge_params/{k}/0"),
                _parse_param(pair[1], f"{path}/edge_params/{k}/1"),
            )
        )
    for k, flag in enumerate(flags):
        _require(isinstance(flag, bool), f"{path}/interpolate/{k}", "must be a boolean")
    profile = TensionProfile(
        vertex_alpha=[
            _parse_param(v, f"{path}/vertex_alpha/{k}") for k, v in enumerate(vertex_alpha)
        ],
        edge_params=parsed_edges,
        interpolate=list(flags),
        default_params=(
            _parse_param(default[0], f"{path}/default_params/0"),
            _parse_param(default[1], f"{path}/default_params/1"),
        ),
    )
    try:
        profile.validate_for(polygon)
    except (ValueError, ParameterError) as exc:
        raise SceneError(path, str(exc)) from None
    return profile


def parse_scene(data) -> Scene:
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SceneError("/", f"invalid JSON: {exc}") from None
    _require(isinstance(data, dict), "/", "scene must be a JSON object")
    _require(data.get("schema") == SCHEMA_VERSION, "/schema", f"expected schema {SCHEMA_VERSION}")
    scheme = _parse_scheme(_get(data, "scheme", ""), "/scheme")
    steps = _get(data, "steps", "")
    _require(
        isinstance(steps, int) and not isinstance(steps, bool) and steps >= 0,
        "/steps",
        "steps must be a non-negative integer",
    )

    polygons: List[PolygonItem] = []
    seen_ids = set()
    for idx, entry in enumerate(data.get("polygons", [])):
        path = f"/polygons/{idx}"
        _require(isinstance(entry, dict), path, "polygon must be an object")
        pid = _get(entry, "id", path)
        _require(isinstance(pid, str) and pid, f"{path}/id", "id must be a non-empty string")
        _require(pid not in seen_ids, f"{path}/id", f"duplicate id {pid!r}")
        seen_ids.add(pid)
        topology = entry.get("topology", "closed")
        _require(
            topology in ("closed", "open"),
            f"{path}/topology",
            "topology must be 'closed' or 'open'",
        )
        raw_points = _get(entry, "points", path)
        _require(
            isinstance(raw_points, list) and len(raw_points) >= 2,
            f"{path}/points",
            "points must be an array of at least 2 points",
        )
        points = [
            _parse_point(p, f"{path}/points/{k}", dims={2, 3}) for k, p in enumerate(raw_points)
        ]
        dims = {len(p) for p in points}
        _require(len(dims) == 1, f"{path}/points", "points must share one dimension")
        polygon = ControlPolygon(points, topology=topology)
        profile = None
        if "profile" in entry and entry["profile"] is not None:
            _require(
                scheme.family is Family.RELAXED_2N3,
                f"{path}/profile",
                "interproximate profiles require the extended family",
            )
            profile = _parse_profile(entry["profile"], f"{path}/profile", polygon)
        polygons.append(PolygonItem(id=pid, polygon=polygon, profile=profile))

    meshes: List[MeshItem] = []
    for idx, entry in enumerate(data.get("meshes", [])):
        path = f"/meshes/{idx}"
        _require(isinstance(entry, dict), path, "mesh must be an object")
        mid = _get(entry, "id", path)
        _require(isinstance(mid, str) and mid, f"{path}/id", "id must be a non-empty string")
        _require(mid not in seen_ids, f"{path}/id", f"duplicate id {mid!r}")
        seen_ids.add(mid)
        raw_grid = _get(entry, "points", path)
        _require(
            isinstance(raw_grid, list) and raw_grid,
            f"{path}/points",
            "points must be a non-empty array of rows",
        )
        grid = []
        for r, raw_row in enumerate(raw_grid):
            _require(isinstance(raw_row, list), f"{path}/points/{r}", "row must be an array")
            grid.append(
                [
                    _parse_point(p, f"{path}/points/{r}/{k}", dims={3})
                    for k, p in enumerate(raw_row)
                ]
            )
        widths = {len(row) for row in grid}
        _require(len(widths) == 1, f"{path}/points", "rows must have equal length")
        mesh = ControlMesh(
            grid,
            row_topology=entry.get("row_topology", "open"),
            col_topology=entry.get("col_topology", "open"),
        )
        meshes.append(MeshItem(id=mid, mesh=mesh))

    exports: List[ExportSpec] = []
    for idx, entry in enumerate(data.get("exports", [])):
        path = f"/exports/{idx}"
        _require(isinstance(entry, dict), path, "export must be an object")
        fmt = _get(entry, "format", path)
        _require(fmt in ("svg", "obj"), f"{path}/format", "format must be 'svg' or 'obj'")
        out_path = _get(entry, "path", path)
        _require(isinstance(out_path, str) and out_path, f"{path}/path", "path must be a string")
        ids = entry.get("ids")
        if ids is None:
            ids = [p.id for p in polygons] if fmt == "svg" else [m.id for m in meshes]
        _require(isinstance(ids, list), f"{path}/ids", "ids must be an array")
        for k, ref in enumerate(ids):
            _require(ref in seen_ids, f"{path}/ids/{k}", f"unknown id {ref!r}")
            if fmt == "svg":
                _require(
                    any(p.id == ref for p in polygons),
                    f"{path}/ids/{k}",
                    "svg exports take polygon ids",
                )
            else:
                _require(
                    any(m.id == ref for m in meshes),
                    f"{path}/ids/{k}",
                    "obj exports take mesh ids",
                )
        exports.append(ExportSpec(format=fmt, path=out_path, ids=list(ids)))

    return Scene(scheme=scheme, steps=steps, polygons=polygons, meshes=meshes, exports=exports)


def scene_to_dict(scene: Scene) -> dict:
    """Serialize back to the schema-1 document (lossless for parameters)."""
    doc = {
        "schema": SCHEMA_VERSION,
        "scheme": {
            "family": FAMILY_LABELS[scene.scheme.family],
            "N": scene.scheme.N,
            "alpha": format_rational(scene.scheme.alpha),
            "beta": format_rational(scene.scheme.beta),
        },
        "steps": scene.steps,
        "polygons": [],
        "meshes": [],
        "exports": [
            {"format": e.format, "path": e.path, "ids": list(e.ids)} for e in scene.exports
        ],
    }
    for item in scene.polygons:
        entry = {
            "id": item.id,
            "topology": item.polygon.topology,
            "points": [list(p) for p in item.polygon.points],
        }
        if item.profile is not None:
            entry["profile"] = {
                "vertex_alpha": [format_rational(v) for v in item.profile.vertex_alpha],
                "edge_params": [
                    [format_rational(a), format_rational(b)] for a, b in item.profile.edge_params
                ],
                "interpolate": list(item.profile.interpolate),
                "default_params": [
                    format_rational(item.profile.default_params[0]),
                    format_rational(item.profile.default_params[1]),
                ],
            }
        doc["polygons"].append(entry)
    for item in scene.meshes:
        doc["meshes"].append(
            {
                "id": item.id,
                "row_topology": item.mesh.row_topology,
                "col_topology": item.mesh.col_topology,
                "points": [[list(p) for p in row] for row in item.mesh.grid],
            }
        )
    return doc
