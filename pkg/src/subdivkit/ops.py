"""High-level operations shared by the CLI and the HTTP service.

Keeping one implementation here is what makes the two surfaces agree
result-for-result.
"""

from __future__ import annotations

import math
import time
from typing import Dict, Optional

from . import analysis
from .errors import AnalysisTimeout
from .geometry import ControlPolygon
from .masks import (
    FAMILY_LABELS,
    Family,
    ParametricMask,
    build_mask,
    specialize,
)
from .rationals import format_rational, parse_rational
from .refine import interproximate_levels, refine_curve, refine_tensor_product
from .scene import Scene, SchemeSelection
from .symbol import LaurentSymbol


def concrete_symbol(family: Family, N: int, alpha, beta=0) -> LaurentSymbol:
    return specialize(build_mask(family, N), alpha, beta)


def symbol_for(scheme: SchemeSelection) -> LaurentSymbol:
    return concrete_symbol(scheme.family, scheme.N, scheme.alpha, scheme.beta)


# ---------------------------------------------------------------------------
# mask rendering
# ---------------------------------------------------------------------------


def _common_denominator(mask: ParametricMask) -> int:
    denom = 1
    for poly in mask.entries.values():
        for _, coeff in poly:
            denom = denom * coeff.denominator // math.gcd(denom, coeff.denominator)
    return denom


def format_parametric_mask(mask: ParametricMask) -> str:
    """Closed-form rendering with the common denominator factored out,
    e.g. ``(1/2)[2α, 1, 2-4α, 1, 2α]``."""
    denom = _common_denominator(mask)
    scaled = [denom * mask.entry(p) for p in mask.offsets()]
    body = "[" + ", ".join(poly.format() for poly in scaled) + "]"
    return body if denom == 1 else f"(1/{denom}){body}"


def mask_info(family: Family, N: int, alpha=None, beta=None) -> Dict:
    mask = build_mask(family, N)
    info: Dict = {
        "family": FAMILY_LABELS[mask.family],
        "family_tag": mask.family.value,
        "N": N,
        "offsets": list(mask.offsets()),
        "symbolic": [mask.entry(p).format() for p in mask.offsets()],
        "symbolic_compact": format_parametric_mask(mask),
    }
    if alpha is not None or beta is not None:
        alpha_q = parse_rational(alpha if alpha is not None else 0)
        beta_q = parse_rational(beta if beta is not None else 0)
        symbol = specialize(mask, alpha_q, beta_q)
        coeffs = symbol.coefficient_list(-mask.half_width, mask.half_width)
        info["alpha"] = format_rational(alpha_q)
        info["beta"] = format_rational(beta_q)
        info["fractions"] = [format_rational(c) for c in coeffs]
        info["decimals"] = [float(c) for c in coeffs]
    return info


# ---------------------------------------------------------------------------
# analysis
# ---------------------------------------------------------------------------


def _certificate_dict(cert: analysis.ContinuityCertificate) -> Dict:
    out = {
        "certified_order": cert.certified_order,
        "smoothing_factors": cert.smoothing_factors,
        "contraction_level": cert.contraction_level,
    }
    if cert.norm_value is not None:
        out["norm"] = format_rational(cert.norm_value)
        out["norm_decimal"] = float(cert.norm_value)
    else:
        out["norm"] = None
        out["norm_decimal"] = None
    return out


def analyze(
    family: Family,
    N: int,
    alpha,
    beta=0,
    max_n: int = analysis.DEFAULT_MAX_N,
    max_l: int = analysis.DEFAULT_MAX_L,
    max_d: Optional[int] = None,
    timeout_ms: Optional[int] = None,
) -> Dict:
    """Full certification report for one concrete scheme.

    On timeout the continuity block is absent and ``timed_out`` is set; all
    cheaper results are still present (that partial dict rides on the
    AnalysisTimeout raised to the caller-facing layers).
    """
    alpha_q = parse_rational(alpha)
    beta_q = parse_rational(beta)
    mask = build_mask(family, N)
    symbol = specialize(mask, alpha_q, beta_q)
    degrees = analysis.reproduction_degree(symbol, max_d)
    report: Dict = {
        "family": FAMILY_LABELS[family],
        "family_tag": family.value,
        "N": N,
        "alpha": format_rational(alpha_q),
        "beta": format_rational(beta_q),
        "symbol": {
            "lowest": symbol.lowest,
            "coefficients": [format_rational(c) for c in symbol.coefficient_list()],
        },
        "classification": analysis.classify_primal_dual(symbol),
        "generation_degree": analysis.generation_degree(symbol, max_d),
        "reproduction_degree": degrees.reproduction,
        "shift": format_rational(degrees.shift),
        "shift_condition_degree": degrees.shift_condition_degree,
        "support_width": analysis.support_width(mask),
        "timed_out": False,
    }
    if family is Family.RELAXED_2N3 and N in (0, 1, 2):
        check = analysis.special_continuity_check(2 * N + 3, alpha_q, beta_q)
        report["special_check"] = {
            "points": check.points,
            "order": check.order,
            "holds": check.holds,
            "max_value": format_rational(check.max_value),
            "max_value_decimal": float(check.max_value),
        }
    deadline = None
    if timeout_ms is not None:
        deadline = time.monotonic() + timeout_ms / 1000.0
    try:
        cert = analysis.continuity_lower_bound(symbol, max_n=max_n, max_l=max_l, deadline=deadline)
    except AnalysisTimeout:
        report["timed_out"] = True
        report["continuity"] = None
        raise AnalysisTimeout("continuity certification exceeded its budget", partial=report)
    report["continuity"] = _certificate_dict(cert)
    return report


# ---------------------------------------------------------------------------
# scene refinement
# ---------------------------------------------------------------------------


class RefinedPolygon:
    def __init__(self, item_id: str, source, refined, flagged_points, flagged_levels):
        self.id = item_id
        self.source = source
        self.refined = refined
        self.flagged_points = flagged_points
        self.flagged_levels = flagged_levels  # list per level of flagged indices


class RefinedMesh:
    def __init__(self, item_id: str, source, refined):
        self.id = item_id
        self.source = source
        self.refined = refined


def refine_scene(scene: Scene) -> Dict[str, object]:
    """Refine every item in the scene; returns id -> RefinedPolygon/RefinedMesh."""
    symbol = symbol_for(scene.scheme)
    results: Dict[str, object] = {}
    for item in scene.polygons:
        if item.profile is not None:
            levels = interproximate_levels(
                item.polygon, item.profile, scene.scheme.N, scene.steps
            )
            refined, final_profile = levels[-1]
            flagged_levels = [
                [i for i, f in enumerate(profile.interpolate) if f]
                for _, profile in levels
            ]
            flagged_points = [refined.points[i] for i in flagged_levels[-1]]
            results[item.id] = RefinedPolygon(
                item.id, item.polygon, refined, flagged_points, flagged_levels
            )
        else:
            refined = refine_curve(item.polygon, symbol, scene.steps)
            results[item.id] = RefinedPolygon(item.id, item.polygon, refined, [], None)
    for item in scene.meshes:
        refined = refine_tensor_product(item.mesh, symbol, scene.steps)
        results[item.id] = RefinedMesh(item.id, item.mesh, refined)
    return results


def interproximate_response(polygon: ControlPolygon, profile, N: int, steps: int) -> Dict:
    levels = interproximate_levels(polygon, profile, N, steps)
    refined, _ = levels[-1]
    flagged_per_level = [
        [i for i, f in enumerate(prof.interpolate) if f] for _, prof in levels
    ]
    return {
        "points": [list(p) for p in refined.points],
        "sizes": [len(poly.points) for poly, _ in levels],
        "flagged_indices": flagged_per_level,
    }
