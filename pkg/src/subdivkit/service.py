"""Local JSON-over-HTTP service backing the designer UI.

Stateless request/response wrappers over :mod:`subdivkit.ops`. All numeric
parameters travel as strings ("1/8" or "0.125"). Malformed requests come
back as 400 with the failing field path; an analysis that blows its time
budget comes back as 422 with the partial report.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

import os

from . import ops
from .errors import AnalysisTimeout, SceneError, SubdivisionError
from .geometry import ControlMesh, ControlPolygon, TensionProfile
from .masks import FAMILY_NAMES, Family
from .rationals import parse_rational

Number = float
PointModel = List[Number]


class SchemeModel(BaseModel):
    family: str = Field(description="relaxed | extended | interpolatory")
    N: int = Field(ge=0)
    alpha: str = "0"
    beta: str = "0"

    def family_enum(self) -> Family:
        if self.family not in FAMILY_NAMES:
            raise SubdivisionError(f"unknown family {self.family!r}")
        return FAMILY_NAMES[self.family]


class MaskRequest(SchemeModel):
    symbolic_only: bool = False


class AnalyzeRequest(SchemeModel):
    max_n: int = Field(default=6, ge=0, le=12)
    max_l: int = Field(default=8, ge=1, le=12)
    timeout_ms: Optional[int] = Field(default=10_000, ge=0)


class PolygonModel(BaseModel):
    points: List[PointModel]
    topology: str = "closed"


class MeshModel(BaseModel):
    points: List[List[PointModel]]
    row_topology: str = "open"
    col_topology: str = "open"


class RefineRequest(BaseModel):
    scheme: SchemeModel
    steps: int = Field(ge=0)
    polygon: Optional[PolygonModel] = None
    mesh: Optional[MeshModel] = None


class ProfileModel(BaseModel):
    vertex_alpha: List[str]
    edge_params: List[Tuple[str, str]]
    interpolate: List[bool]
    default_params: Tuple[str, str]


class InterproximateRequest(BaseModel):
    polygon: PolygonModel
    profile: ProfileModel
    N: int = Field(ge=0)
    steps: int = Field(ge=0)


def _polygon(model: PolygonModel) -> ControlPolygon:
    return ControlPolygon(
        [tuple(float(c) for c in p) for p in model.points], topology=model.topology
    )


def _profile(model: ProfileModel) -> TensionProfile:
    return TensionProfile(
        vertex_alpha=[parse_rational(v) for v in model.vertex_alpha],
        edge_params=[(parse_rational(a), parse_rational(b)) for a, b in model.edge_params],
        interpolate=list(model.interpolate),
        default_params=(
            parse_rational(model.default_params[0]),
            parse_rational(model.default_params[1]),
        ),
    )


def create_app(static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="subdivkit service", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        errors = [
            {
                "path": "/" + "/".join(str(part) for part in err.get("loc", [])),
                "message": err.get("msg", "invalid"),
            }
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"errors": errors})

    @app.exception_handler(SceneError)
    async def scene_handler(request: Request, exc: SceneError):
        return JSONResponse(
            status_code=400, content={"errors": [{"path": exc.path, "message": exc.reason}]}
        )

    @app.exception_handler(SubdivisionError)
    async def domain_handler(request: Request, exc: SubdivisionError):
        return JSONResponse(status_code=400, content={"errors": [{"message": str(exc)}]})

    @app.post("/mask")
    def mask_endpoint(req: MaskRequest):
        family = req.family_enum()
        if req.symbolic_only:
            return ops.mask_info(family, req.N)
        return ops.mask_info(family, req.N, req.alpha, req.beta)

    @app.post("/analyze")
    def analyze_endpoint(req: AnalyzeRequest):
        try:
            return ops.analyze(
                req.family_enum(),
                req.N,
                req.alpha,
                req.beta,
                max_n=req.max_n,
                max_l=req.max_l,
                timeout_ms=req.timeout_ms,
            )
        except AnalysisTimeout as exc:
            return JSONResponse(status_code=422, content={"partial": exc.partial})

    @app.post("/refine")
    def refine_endpoint(req: RefineRequest):
        symbol = ops.concrete_symbol(
            req.scheme.family_enum(), req.scheme.N, req.scheme.alpha, req.scheme.beta
        )
        from .refine import refine_curve, refine_tensor_product

        if (req.polygon is None) == (req.mesh is None):
            raise SubdivisionError("provide exactly one of 'polygon' or 'mesh'")
        if req.polygon is not None:
            refined = refine_curve(_polygon(req.polygon), symbol, req.steps)
            return {"points": [list(p) for p in refined.points]}
        mesh = ControlMesh(
            [[tuple(float(c) for c in p) for p in row] for row in req.mesh.points],
            row_topology=req.mesh.row_topology,
            col_topology=req.mesh.col_topology,
        )
        refined = refine_tensor_product(mesh, symbol, req.steps)
        return {"grid": [[list(p) for p in row] for row in refined.grid]}

    @app.post("/interproximate")
    def interproximate_endpoint(req: InterproximateRequest):
        polygon = _polygon(req.polygon)
        profile = _profile(req.profile)
        return ops.interproximate_response(polygon, profile, req.N, req.steps)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run(host: str = "127.0.0.1", port: int = 8710, static_dir: Optional[str] = None):
    import uvicorn

    uvicorn.run(create_app(static_dir=static_dir), host=host, port=port)
