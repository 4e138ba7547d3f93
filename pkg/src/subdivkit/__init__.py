"""subdivkit: parametric binary primal subdivision schemes.

Symbolic construction of the (2N+2)-point relaxed, (2N+3)-point extended
and (2N+4)-point interpolatory families; exact certification of their
symbols (classification, polynomial degrees, support, continuity lower
bounds); and a refinement engine for curves, tensor-product surfaces and
interproximate designs.
"""

from .analysis import (
    ContinuityCertificate,
    DegreeReport,
    SpecialContinuityResult,
    classify_primal_dual,
    continuity_lower_bound,
    contractivity_norm,
    generation_degree,
    reproduction_degree,
    special_continuity_check,
    support_width,
)
from .bivar import ALPHA, BETA, BivarPoly
from .errors import (
    AnalysisTimeout,
    DomainError,
    FamilyError,
    NormalizationError,
    ParameterError,
    ProfileError,
    SceneError,
    ShapeError,
    SizeError,
    StepLimitError,
    SubdivisionError,
)
from .geometry import ControlMesh, ControlPolygon, TensionProfile
from .masks import (
    CoefficientSequence,
    Family,
    ParametricMask,
    build_extended_mask,
    build_interpolatory_mask,
    build_mask,
    build_relaxed_mask,
    displacement_vectors,
    extension_weights,
    initial_displacement_vectors,
    initial_rules,
    specialize,
)
from .rationals import format_rational, parse_rational
from .refine import (
    BasisSamples,
    basic_limit_function,
    interproximate_levels,
    max_steps,
    refine_curve,
    refine_interproximate,
    refine_tensor_product,
)
from .scene import Scene, parse_scene, scene_to_dict
from .symbol import LaurentSymbol

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "AnalysisTimeout",
    "BETA",
    "BasisSamples",
    "BivarPoly",
    "CoefficientSequence",
    "ContinuityCertificate",
    "ControlMesh",
    "ControlPolygon",
    "DegreeReport",
    "DomainError",
    "Family",
    "FamilyError",
    "LaurentSymbol",
    "NormalizationError",
    "ParameterError",
    "ParametricMask",
    "ProfileError",
    "Scene",
    "SceneError",
    "ShapeError",
    "SizeError",
    "SpecialContinuityResult",
    "StepLimitError",
    "SubdivisionError",
    "TensionProfile",
    "basic_limit_function",
    "build_extended_mask",
    "build_interpolatory_mask",
    "build_mask",
    "build_relaxed_mask",
    "classify_primal_dual",
    "continuity_lower_bound",
    "contractivity_norm",
    "displacement_vectors",
    "extension_weights",
    "format_rational",
    "generation_degree",
    "initial_displacement_vectors",
    "initial_rules",
    "interproximate_levels",
    "max_steps",
    "parse_rational",
    "parse_scene",
    "refine_curve",
    "refine_interproximate",
    "refine_tensor_product",
    "reproduction_degree",
    "scene_to_dict",
    "special_continuity_check",
    "specialize",
    "support_width",
]
