"""Certification of concrete subdivision symbols.

Everything here runs in exact rational arithmetic. Continuity results are
one-sided certificates: a verdict of C^n means the contractivity test
succeeded for n smoothing factors; failure to contract within the level
budget proves nothing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AnalysisTimeout, FamilyError, NormalizationError, ParameterError
from .masks import Family, ParametricMask
from .rationals import parse_rational
from .symbol import LaurentSymbol

PRIMAL = "primal"
DUAL = "dual"
NEITHER = "neither"

DEFAULT_MAX_N = 6
DEFAULT_MAX_L = 8


@dataclass(frozen=True)
class DegreeReport:
    """Polynomial generation/reproduction degrees of a symbol.

    ``shift`` is the parametric shift τ = D a(1) / 2. ``shift_condition_degree``
    records how far the z = 1 derivative conditions alone hold; reproduction
    additionally requires generation up to the same degree, so
    ``reproduction <= generation`` always.
    """

    generation: int
    reproduction: int
    shift: Fraction
    shift_condition_degree: int


@dataclass(frozen=True)
class ContinuityCertificate:
    certified_order: int  # -1 when not even convergence was certified
    smoothing_factors: int
    contraction_level: Optional[int]
    norm_value: Optional[Fraction]

    @property
    def certified(self) -> bool:
        return self.certified_order >= 0


@dataclass(frozen=True)
class SpecialContinuityResult:
    """Outcome of the closed-form contraction inequality for the narrow
    extended schemes (3-, 5- and 7-point)."""

    points: int
    order: int  # continuity order the inequality certifies
    holds: bool
    max_value: Fraction
    branch_values: tuple


def _require_normalized(a: LaurentSymbol):
    if a.is_zero() or a(1) != 2:
        raise NormalizationError(f"symbol must satisfy a(1) = 2, got {0 if a.is_zero() else a(1)}")


def classify_primal_dual(a: LaurentSymbol) -> str:
    reflected = a.reflected()
    if a == reflected:
        return PRIMAL
    if a.shifted(1) == reflected:
        return DUAL
    return NEITHER


def generation_degree(a: LaurentSymbol, max_d: int | None = None) -> int:
    """Largest d <= max_d with a(-1) = 0 and D^m a(-1) = 0 for m = 1..d.

    Returns -1 when a(-1) != 0. max_d defaults to the symbol width, since a
    stencil cannot be exact beyond its own span.
    """
    _require_normalized(a)
    if max_d is None:
        max_d = a.width
    if a(-1) != 0:
        return -1
    degree = 0
    derivative = a
    while degree < max_d:
        derivative = derivative.derivative()
        if derivative(-1) != 0:
            break
        degree += 1
    return degree


def reproduction_degree(a: LaurentSymbol, max_d: int | None = None) -> DegreeReport:
    """Degrees per the derivative criteria, with shift τ = D a(1) / 2.

    Reproduction to degree d needs generation to degree d plus
    D^m a(1) = 2 Π_{h<m} (τ - h) for m = 1..d.
    """
    _require_normalized(a)
    if max_d is None:
        max_d = a.width
    generation = generation_degree(a, max_d)
    first = a.derivative()
    shift = first(1) / 2
    shift_degree = 0
    derivative = first
    product = Fraction(1)
    m = 1
    while m <= max_d:
        product *= shift - (m - 1)
        if derivative(1) != 2 * product:
            break
        shift_degree = m
        m += 1
        derivative = derivative.derivative()
    reproduction = min(generation, shift_degree)
    return DegreeReport(
        generation=generation,
        reproduction=reproduction,
        shift=shift,
        shift_condition_degree=shift_degree,
    )


def support_width(mask: ParametricMask) -> int:
    """Support width of the basic limit function, by family.

    A ξ-point relaxed scheme has support 2ξ; a ξ-point interpolatory scheme
    has support 2ξ-2.
    """
    if mask.family is Family.RELAXED_2N2:
        return 2 * (2 * mask.N + 2)
    if mask.family is Family.RELAXED_2N3:
        return 2 * (2 * mask.N + 3)
    if mask.family is Family.INTERPOLATORY_2N4:
        return 2 * (2 * mask.N + 4) - 2
    raise FamilyError(f"unknown family tag {mask.family!r}")


def contractivity_norm(c: LaurentSymbol, level: int) -> Fraction:
    """The residue-class sup norm of c^l(z) = c(z) c(z^2) ... c(z^{2^{l-1}}).

    Value < 1 witnesses contractivity of the difference scheme.
    """
    if level < 1:
        raise ParameterError("contractivity level must be >= 1")
    iterated = c
    for t in range(1, level):
        iterated = iterated * c.upsampled(2**t)
    return _residue_norm(iterated, 2**level)


def _residue_norm(symbol: LaurentSymbol, modulus: int) -> Fraction:
    sums = [Fraction(0)] * modulus
    for exponent, coeff in symbol.items():
        sums[exponent % modulus] += abs(coeff)
    return max(sums)


def continuity_lower_bound(
    a: LaurentSymbol,
    max_n: int = DEFAULT_MAX_N,
    max_l: int = DEFAULT_MAX_L,
    deadline: float | None = None,
) -> ContinuityCertificate:
    """Certify C^n continuity by smoothing-factor extraction + contractivity.

    For the largest feasible n down to 0: write a(z) = ((1+z)/(2z))^n b(z),
    form the difference symbol c(z) = b(z)/(1+z), and search l <= max_l for
    a residue norm of c^l below 1. The first n that contracts is certified.
    Requires exact divisibility of a(z) by (1+z)^{n+1}; a symbol without a
    single (1+z) factor cannot even be tested for convergence and yields
    order -1.
    """
    _require_normalized(a)
    multiplicity = a.one_plus_z_multiplicity()
    if multiplicity == 0:
        return ContinuityCertificate(-1, 0, None, None)

    # quotients[k] = a / (1+z)^{k+1}
    quotients = []
    current = a
    for _ in range(min(multiplicity, max_n + 1)):
        current = current.try_divide_one_plus_z()
        quotients.append(current)

    for n in range(len(quotients) - 1, -1, -1):
        # c(z) = a(z) 2^n z^n / (1+z)^{n+1}
        c = quotients[n].scaled(Fraction(2**n)).shifted(n)
        iterated = c
        for level in range(1, max_l + 1):
            if deadline is not None and time.monotonic() > deadline:
                raise AnalysisTimeout("continuity certification exceeded its budget")
            if level > 1:
                iterated = iterated * c.upsampled(2 ** (level - 1))
            norm = _residue_norm(iterated, 2**level)
            if norm < 1:
                return ContinuityCertificate(n, n, level, norm)
    return ContinuityCertificate(-1, 0, None, None)


# ---------------------------------------------------------------------------
# closed-form contraction inequalities for the narrow extended schemes
# ---------------------------------------------------------------------------

_SPECIAL_ORDERS = {3: 1, 5: 3, 7: 5}


def special_continuity_check(points: int, alpha, beta) -> SpecialContinuityResult:
    """Evaluate the explicit max-expression inequality for the 3-, 5- or
    7-point extended scheme. Strictly below 1 certifies C^1 / C^3 / C^5.
    """
    alpha = parse_rational(alpha)
    beta = parse_rational(beta)
    edge = beta * (1 - alpha)
    if points == 3:
        g1 = 2 * abs(2 * alpha - 4 * edge)
        g2 = 2 * abs(2 * edge)
        g3 = abs(1 + 4 * edge - 4 * alpha)
        branches = (g1, g2 + g3)
        parts = (g1, g2, g3)
    elif points == 5:
        e1 = 16 * abs(edge)
        e2 = 2 * abs(-56 * edge - 32 * alpha + Fraction(1, 2))
        e3 = 2 * abs(-32 * edge - 8 * alpha)
        e4 = abs(-48 * alpha - 64 * edge + 2)
        branches = (e1 + e2, e3 + e4)
        parts = (e1, e2, e3, e4)
    elif points == 7:
        x1 = 64 * abs(edge)
        x2 = 2 * abs(-512 * edge + 192 * alpha - Fraction(3, 8))
        x3 = abs(Fraction(-19, 4) - 960 * edge + 640 * alpha)
        x4 = 2 * abs(-192 * edge + 32 * alpha)
        x5 = 2 * abs(480 * alpha - Fraction(9, 4) - 832 * edge)
        branches = (x1 + x2 + x3, x4 + x5)
        parts = (x1, x2, x3, x4, x5)
    else:
        raise FamilyError("special continuity check covers the 3-, 5- and 7-point schemes")
    value = max(branches)
    return SpecialContinuityResult(
        points=points,
        order=_SPECIAL_ORDERS[points],
        holds=value < 1,
        max_value=value,
        branch_values=parts,
    )
