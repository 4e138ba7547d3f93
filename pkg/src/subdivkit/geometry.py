"""Control polygons, tensor-product meshes and per-vertex/edge tension data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import ProfileError, ShapeError, SizeError

Point = Tuple  # d-tuple of float (geometry mode) or Fraction (exact mode)

CLOSED = "closed"
OPEN = "open"


def _check_topology(value: str) -> str:
    if value not in (CLOSED, OPEN):
        raise ShapeError(f"topology must be 'closed' or 'open', got {value!r}")
    return value


@dataclass
class ControlPolygon:
    points: List[Point]
    topology: str = CLOSED

    def __post_init__(self):
        _check_topology(self.topology)
        dims = {len(p) for p in self.points}
        if dims and dims not in ({2}, {3}):
            raise ShapeError(f"points must share dimension 2 or 3, got {sorted(dims)}")

    @property
    def closed(self) -> bool:
        return self.topology == CLOSED

    def __len__(self):
        return len(self.points)

    @property
    def edge_count(self) -> int:
        return len(self.points) if self.closed else len(self.points) - 1

    def require_size(self, minimum_open: int):
        if self.closed:
            if len(self.points) < 3:
                raise SizeError("closed polygons need at least 3 points")
        elif len(self.points) < minimum_open:
            raise SizeError(
                f"open polygon needs at least {minimum_open} points for this mask,"
                f" got {len(self.points)}"
            )


@dataclass
class ControlMesh:
    """Rectangular grid of points. ``row_topology`` is the topology of each
    row curve (wrap in the column index), ``col_topology`` of each column."""

    grid: List[List[Point]]
    row_topology: str = OPEN
    col_topology: str = OPEN

    def __post_init__(self):
        _check_topology(self.row_topology)
        _check_topology(self.col_topology)
        widths = {len(row) for row in self.grid}
        if len(widths) > 1:
            raise ShapeError(f"mesh rows must have equal length, got {sorted(widths)}")

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0]) if self.grid else 0

    def transposed(self) -> "ControlMesh":
        grid = [list(col) for col in zip(*self.grid)]
        return ControlMesh(grid, row_topology=self.col_topology, col_topology=self.row_topology)


@dataclass
class TensionProfile:
    """Per-vertex and per-edge tension values for interproximate refinement.

    Edge e sits between vertices e and e+1 (mod n when closed) and owns the
    parameters of the edge rule centred on it. Flagged vertices must carry
    vertex alpha 0; that makes the vertex rule the identity there, which is
    exactly what pins them through all levels.
    """

    vertex_alpha: List[Fraction]
    edge_params: List[Tuple[Fraction, Fraction]]
    interpolate: List[bool]
    default_params: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    def validate_for(self, polygon: ControlPolygon):
        n = len(polygon)
        if len(self.vertex_alpha) != n:
            raise ShapeError(
                f"vertex parameter count {len(self.vertex_alpha)} != polygon size {n}"
            )
        if len(self.interpolate) != n:
            raise ShapeError(f"flag count {len(self.interpolate)} != polygon size {n}")
        if len(self.edge_params) != polygon.edge_count:
            raise ShapeError(
                f"edge parameter count {len(self.edge_params)} != edge count {polygon.edge_count}"
            )
        for i, (flag, alpha) in enumerate(zip(self.interpolate, self.vertex_alpha)):
            if flag and alpha != 0:
                raise ProfileError(f"vertex {i} is flagged for interpolation but has alpha {alpha}")

    @staticmethod
    def uniform(n_vertices: int, n_edges: int, alpha, beta, flags: Sequence[bool] | None = None):
        alpha = Fraction(alpha)
        beta = Fraction(beta)
        flags = list(flags) if flags is not None else [False] * n_vertices
        vertex = [Fraction(0) if f else alpha for f in flags]
        return TensionProfile(
            vertex_alpha=vertex,
            edge_params=[(alpha, beta)] * n_edges,
            interpolate=flags,
            default_params=(alpha, beta),
        )
