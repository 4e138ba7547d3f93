"""Application of concrete masks to curves, meshes and tension profiles.

Geometry arithmetic is double precision by default; pass ``exact=True`` to
run the same kernels over Fractions (used for bit-exact properties, the
commutativity check and the basic-limit support assertion). Rule
coefficients are validated exactly before any float conversion.

Refinement depth per call is capped (default 12, override with the
SUBDIV_MAX_STEPS environment variable); a too-deep request errors instead
of exhausting memory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import NormalizationError, StepLimitError
from .geometry import CLOSED, ControlMesh, ControlPolygon, TensionProfile
from .masks import ParametricMask, build_extended_mask
from .symbol import LaurentSymbol

REPLICATE = "replicate"
TRUNCATE = "truncate"

DEFAULT_MAX_STEPS = 12


def max_steps() -> int:
    value = os.environ.get("SUBDIV_MAX_STEPS")
    if value is None:
        return DEFAULT_MAX_STEPS
    try:
        return int(value)
    except ValueError:
        return DEFAULT_MAX_STEPS


def _check_steps(steps: int):
    if steps < 0:
        raise StepLimitError("steps must be non-negative")
    cap = max_steps()
    if steps > cap:
        raise StepLimitError(f"steps {steps} exceeds the cap of {cap}")


def _rules_from_symbol(a: LaurentSymbol, exact: bool):
    """Split a symbol into vertex/edge stencils over f_{i+m}.

    The vertex rule lives on even mask offsets 2m, the edge rule on odd
    offsets 2m-1. Both must sum to 1 exactly.
    """
    even: Dict[int, Fraction] = {}
    odd: Dict[int, Fraction] = {}
    for exponent, coeff in a.items():
        if exponent % 2 == 0:
            even[exponent // 2] = coeff
        else:
            odd[(exponent + 1) // 2] = coeff
    if sum(even.values()) != 1 or sum(odd.values()) != 1:
        raise NormalizationError("rule rows must each sum to 1")
    if not exact:
        even = {m: float(c) for m, c in even.items()}
        odd = {m: float(c) for m, c in odd.items()}
    return even, odd


def _one_sided_reach(a: LaurentSymbol) -> int:
    return max(abs(a.lowest), abs(a.highest))


def _combine(points, indices_weights, dim):
    return tuple(
        sum(w * points[i][d] for i, w in indices_weights) for d in range(dim)
    )


def _apply_rules_once(points, closed: bool, even, odd, boundary: str):
    n = len(points)
    dim = len(points[0])
    out = []

    def resolve(i):
        if closed:
            return i % n
        if 0 <= i < n:
            return i
        if boundary == REPLICATE:
            return 0 if i < 0 else n - 1
        return None

    def emit(base, stencil):
        pairs = []
        for m, w in stencil.items():
            idx = resolve(base + m)
            if idx is None:
                return None
            pairs.append((idx, w))
        return _combine(points, pairs, dim)

    for i in range(n):
        vertex = emit(i, even)
        if vertex is not None:
            out.append(vertex)
        edge_exists = closed or i < n - 1
        if edge_exists:
            edge = emit(i, odd)
            if edge is not None:
                out.append(edge)
    return out


def refine_curve(
    polygon: ControlPolygon,
    a: LaurentSymbol,
    steps: int,
    exact: bool = False,
    boundary: str = REPLICATE,
) -> ControlPolygon:
    """Refine a polygon ``steps`` times with the scheme of symbol ``a``.

    Closed polygons wrap indices; open polygons synthesize missing
    neighbours by endpoint replication (default) or drop under-supported
    rules with ``boundary="truncate"``. Point counts per step: 2n closed,
    2n-1 open under replication.
    """
    _check_steps(steps)
    if boundary not in (REPLICATE, TRUNCATE):
        raise ValueError(f"unknown boundary mode {boundary!r}")
    even, odd = _rules_from_symbol(a, exact)
    polygon.require_size(_one_sided_reach(a) + 1)
    points = [tuple(p) for p in polygon.points]
    if exact:
        points = [tuple(Fraction(c) for c in p) for p in points]
    for _ in range(steps):
        points = _apply_rules_once(points, polygon.closed, even, odd, boundary)
    return ControlPolygon(points, topology=polygon.topology)


def refine_tensor_product(
    mesh: ControlMesh,
    a: LaurentSymbol,
    steps: int,
    exact: bool = False,
    boundary: str = REPLICATE,
) -> ControlMesh:
    """Refine a grid: each step refines every row as a curve, then every
    column of the result, with the same symbol in both directions."""
    _check_steps(steps)
    even, odd = _rules_from_symbol(a, exact)
    reach = _one_sided_reach(a)

    grid = [[tuple(p) for p in row] for row in mesh.grid]
    if exact:
        grid = [[tuple(Fraction(c) for c in p) for p in row] for row in grid]

    def refine_rows(rows, topology):
        closed = topology == CLOSED
        out = []
        for row in rows:
            poly = ControlPolygon(row, topology=topology)
            poly.require_size(reach + 1)
            out.append(_apply_rules_once(row, closed, even, odd, boundary))
        return out

    for _ in range(steps):
        grid = refine_rows(grid, mesh.row_topology)
        transposed = [list(col) for col in zip(*grid)]
        transposed = refine_rows(transposed, mesh.col_topology)
        grid = [list(row) for row in zip(*transposed)]
    return ControlMesh(grid, row_topology=mesh.row_topology, col_topology=mesh.col_topology)


# ---------------------------------------------------------------------------
# interproximate refinement
# ---------------------------------------------------------------------------


def _mask_rule_tables(mask: ParametricMask):
    """Vertex rule split as constant + alpha parts; edge rule as constant +
    beta(1-alpha) parts. Exact for these families: the vertex row is affine
    in alpha and the edge row is affine in beta(1-alpha)."""
    even_const, even_alpha = {}, {}
    for m, poly in mask.even_row().items():
        even_const[m] = poly.coefficient(0, 0)
        even_alpha[m] = poly.coefficient(1, 0)
    odd_const, odd_edge = {}, {}
    for m, poly in mask.odd_row().items():
        odd_const[m] = poly.coefficient(0, 0)
        odd_edge[m] = poly.coefficient(0, 1)
    return even_const, even_alpha, odd_const, odd_edge


def _interproximate_step(points, profile: TensionProfile, closed: bool, tables, exact: bool):
    even_const, even_alpha, odd_const, odd_edge = tables
    n = len(points)
    dim = len(points[0])

    def resolve(i):
        return i % n if closed else min(max(i, 0), n - 1)

    def stencil_combine(base, stencil):
        pairs = [(resolve(base + m), w) for m, w in stencil.items() if w != 0]
        return _combine(points, pairs, dim)

    def specialized(const, linear, factor):
        if not exact:
            factor = float(factor)
        out = {}
        for m in const:
            base = const[m] if exact else float(const[m])
            slope = linear[m] if exact else float(linear[m])
            w = base + factor * slope
            if w != 0:
                out[m] = w
        return out

    def vertex_stencil(alpha):
        return specialized(even_const, even_alpha, alpha)

    def edge_stencil(alpha, beta):
        return specialized(odd_const, odd_edge, beta * (1 - alpha))

    new_points = []
    new_flags = []
    new_alpha = []
    default_alpha, default_beta = profile.default_params
    for i in range(n):
        if profile.interpolate[i]:
            # alpha = 0 makes the vertex rule the identity; copy verbatim
            new_points.append(points[i])
            new_flags.append(True)
            new_alpha.append(Fraction(0))
        else:
            new_points.append(stencil_combine(i, vertex_stencil(profile.vertex_alpha[i])))
            new_flags.append(False)
            new_alpha.append(Fraction(default_alpha))
        if closed or i < n - 1:
            ea, eb = profile.edge_params[i]
            new_points.append(stencil_combine(i, edge_stencil(ea, eb)))
            new_flags.append(False)
            new_alpha.append(Fraction(default_alpha))

    edge_count = len(new_points) if closed else len(new_points) - 1
    new_profile = TensionProfile(
        vertex_alpha=new_alpha,
        edge_params=[(Fraction(default_alpha), Fraction(default_beta))] * edge_count,
        interpolate=new_flags,
        default_params=profile.default_params,
    )
    return new_points, new_profile


def interproximate_levels(
    polygon: ControlPolygon,
    profile: TensionProfile,
    N: int,
    steps: int,
    exact: bool = False,
) -> List[Tuple[ControlPolygon, TensionProfile]]:
    """All levels 0..steps of interproximate refinement with the
    (2N+3)-point extended family.

    Per step, the vertex rule at vertex i runs with that vertex's alpha and
    the edge rule on edge (i, i+1) with that edge's (alpha, beta). Children
    of flagged vertices keep the flag and alpha 0; every other new vertex
    and every new edge receives the profile's default parameters.
    """
    _check_steps(steps)
    profile.validate_for(polygon)
    tables = _mask_rule_tables(build_extended_mask(N))
    points = [tuple(p) for p in polygon.points]
    if exact:
        points = [tuple(Fraction(c) for c in p) for p in points]
    polygon.require_size(2 * N + 4)

    levels = [(ControlPolygon(points, topology=polygon.topology), profile)]
    for _ in range(steps):
        points, profile = _interproximate_step(points, profile, polygon.closed, tables, exact)
        levels.append((ControlPolygon(points, topology=polygon.topology), profile))
    return levels


def refine_interproximate(
    polygon: ControlPolygon,
    profile: TensionProfile,
    N: int,
    steps: int,
    exact: bool = False,
) -> ControlPolygon:
    return interproximate_levels(polygon, profile, N, steps, exact)[-1][0]


# ---------------------------------------------------------------------------
# basic limit function
# ---------------------------------------------------------------------------


@dataclass
class BasisSamples:
    """Samples of S^k δ on the dyadic grid i / 2^k."""

    steps: int
    abscissae: List[Fraction]
    values: List
    support_radius: int


def basic_limit_function(
    a: LaurentSymbol,
    steps: int,
    exact: bool = True,
    support_radius: int | None = None,
) -> BasisSamples:
    """Refine the delta sequence and sample the emerging basic limit function.

    Samples with |i / 2^steps| > support_radius are asserted to vanish;
    radius defaults to the symbol's one-sided reach (callers working from a
    mask pass support_width/2).
    """
    if steps < 1:
        raise StepLimitError("basic limit sampling needs steps >= 1")
    _check_steps(steps)
    _rules_from_symbol(a, exact)  # validates normalization
    if support_radius is None:
        support_radius = _one_sided_reach(a)

    one = Fraction(1) if exact else 1.0
    values: Dict[int, object] = {0: one}
    coeffs = {e: (c if exact else float(c)) for e, c in a.items()}
    for _ in range(steps):
        next_values: Dict[int, object] = {}
        for j, v in values.items():
            for e, c in coeffs.items():
                key = 2 * j + e
                next_values[key] = next_values.get(key, 0 * one) + c * v
        values = next_values

    scale = 2**steps
    lo = min(values)
    hi = max(values)
    xs = []
    ys = []
    for i in range(lo, hi + 1):
        x = Fraction(i, scale)
        y = values.get(i, 0 * one)
        if abs(x) > support_radius and y != 0:
            raise AssertionError(
                f"basic limit sample at {x} = {y} violates the support bound ±{support_radius}"
            )
        xs.append(x)
        ys.append(y)
    return BasisSamples(steps=steps, abscissae=xs, values=ys, support_radius=support_radius)
