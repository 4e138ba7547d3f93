"""Symbolic construction of the three parametric scheme families.

The builders produce masks whose entries are exact polynomials in the two
tension parameters. Families:

* ``relaxed_2N2``        (2N+2)-point relaxed schemes, one parameter
* ``relaxed_2N3``        (2N+3)-point extended relaxed schemes, two parameters
* ``interpolatory_2N4``  (2N+4)-point interpolatory schemes, one parameter

A mask is stored centred at zero over offsets [-m, m]. Index convention,
used everywhere downstream: mask offset p multiplies the coarse point
f_{i + ceil(p/2)} in the rule that produces the new point at fine index
2i + (p mod 2). Equivalently, the vertex-rule stencil over f_{i+j} sits at
even offsets 2j and the edge-rule stencil over f_{i+m} sits at odd offsets
2m-1. The builders are validated coefficient-for-coefficient against the
closed-form masks for N = 0..5, which pins this anchoring down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping

from .bivar import ALPHA, BETA, ONE, ZERO, BivarPoly
from .errors import DomainError, ParameterError
from .rationals import parse_rational
from .symbol import LaurentSymbol

Stencil = Dict[int, BivarPoly]

HALF = BivarPoly.constant(Fraction(1, 2))


class Family(str, Enum):
    RELAXED_2N2 = "relaxed_2N2"
    RELAXED_2N3 = "relaxed_2N3"
    INTERPOLATORY_2N4 = "interpolatory_2N4"


# canonical CLI / wire names
FAMILY_NAMES = {
    "relaxed": Family.RELAXED_2N2,
    "extended": Family.RELAXED_2N3,
    "interpolatory": Family.INTERPOLATORY_2N4,
}

FAMILY_LABELS = {
    Family.RELAXED_2N2: "relaxed",
    Family.RELAXED_2N3: "extended",
    Family.INTERPOLATORY_2N4: "interpolatory",
}


@dataclass(frozen=True)
class CoefficientSequence:
    """Finitely supported linear functional over the initial control points.

    ``entries[m]`` is the coefficient of f^0_{i+m}. Displacement sequences
    are rational-valued; the edge-extension weights carry the β(1-α) factor.
    """

    entries: Mapping[int, BivarPoly]
    parity: str  # "even" | "odd"
    level: int

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {m: p for m, p in self.entries.items() if not p.is_zero()}
        )

    def rational_entries(self) -> Dict[int, Fraction]:
        return {m: p.constant_value() for m, p in self.entries.items()}

    def support(self) -> tuple[int, int]:
        keys = self.entries.keys()
        return (min(keys), max(keys))

    def total(self) -> BivarPoly:
        out = ZERO
        for poly in self.entries.values():
            out = out + poly
        return out


def _stencil_add(a: Stencil, b: Stencil) -> Stencil:
    out = dict(a)
    for key, poly in b.items():
        out[key] = out.get(key, ZERO) + poly
    return {k: p for k, p in out.items() if not p.is_zero()}


def _stencil_scale(a: Stencil, factor) -> Stencil:
    return {k: factor * p for k, p in a.items()}


def _spread_difference(a: Stencil) -> Stencil:
    """2*c_m - c_{m-1} - c_{m+1}: the index-shift combination of the
    displacement recurrence, widening the support by one on each side."""
    keys = range(min(a) - 1, max(a) + 2)
    out = {}
    for m in keys:
        poly = 2 * a.get(m, ZERO) - a.get(m - 1, ZERO) - a.get(m + 1, ZERO)
        if not poly.is_zero():
            out[m] = poly
    return out


@dataclass(frozen=True)
class ParametricMask:
    """Symmetric parametric mask over offsets [-half_width, half_width]."""

    family: Family
    N: int
    entries: Mapping[int, BivarPoly]

    @property
    def half_width(self) -> int:
        if self.family is Family.RELAXED_2N2:
            return 2 * self.N + 2
        return 2 * self.N + 3

    def entry(self, offset: int) -> BivarPoly:
        if abs(offset) > self.half_width:
            raise IndexError(f"offset {offset} outside mask range ±{self.half_width}")
        return self.entries.get(offset, ZERO)

    def offsets(self) -> range:
        return range(-self.half_width, self.half_width + 1)

    def even_row(self) -> Stencil:
        """Vertex-rule stencil: coefficient of f_{i+j} at key j."""
        row = {}
        for j in range(-(self.half_width // 2), self.half_width // 2 + 1):
            poly = self.entry(2 * j)
            if not poly.is_zero():
                row[j] = poly
        return row

    def odd_row(self) -> Stencil:
        """Edge-rule stencil: coefficient of f_{i+m} at key m."""
        row = {}
        for p in self.offsets():
            if p % 2 != 0:
                poly = self.entries.get(p, ZERO)
                if not poly.is_zero():
                    row[(p + 1) // 2] = poly
        return row

    def even_sum(self) -> BivarPoly:
        out = ZERO
        for p in self.offsets():
            if p % 2 == 0:
                out = out + self.entry(p)
        return out

    def odd_sum(self) -> BivarPoly:
        out = ZERO
        for p in self.offsets():
            if p % 2 != 0:
                out = out + self.entry(p)
        return out


# ---------------------------------------------------------------------------
# level-1 seeds
# ---------------------------------------------------------------------------


def initial_rules() -> tuple[Stencil, Stencil]:
    """The 2-point seed rules.

    Vertex rule displaces each point by α times its second difference;
    edge rule is the midpoint average.
    """
    even = {-1: ALPHA, 0: ONE - 2 * ALPHA, 1: ALPHA}
    odd = {0: HALF, 1: HALF}
    return even, odd


def initial_displacement_vectors() -> tuple[CoefficientSequence, CoefficientSequence]:
    """Level-1 displacement stencils feeding the recurrence."""
    even = CoefficientSequence(
        {-1: ONE, 0: -ONE, 1: ONE}, parity="even", level=1
    )
    odd = CoefficientSequence({0: HALF, 1: HALF}, parity="odd", level=1)
    return even, odd


def _odd_level_factor(source_level: int) -> Fraction:
    # (1/t)(t/4 - 1/8) for the transition level t -> t+1
    return Fraction(1, source_level) * (Fraction(source_level, 4) - Fraction(1, 8))


def displacement_vectors(N: int) -> tuple[CoefficientSequence, CoefficientSequence]:
    """Displacement stencils at level N+1, for N >= 1.

    Even: spread difference of the previous level. Odd: spread difference
    damped by (1/N)(N/4 - 1/8), where N is the source level; the factor is
    1/8 for the first transition, which the level-2 closed form confirms.
    """
    if N < 1:
        raise DomainError("displacement recurrence needs N >= 1 (odd factor divides by N)")
    even_seq, odd_seq = initial_displacement_vectors()
    even, odd = dict(even_seq.entries), dict(odd_seq.entries)
    for level in range(1, N + 1):
        even = _spread_difference(even)
        odd = _stencil_scale(_spread_difference(odd), _odd_level_factor(level))
    return (
        CoefficientSequence(even, parity="even", level=N + 1),
        CoefficientSequence(odd, parity="odd", level=N + 1),
    )


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------


def _relaxed_rows(N: int) -> tuple[Stencil, Stencil]:
    even, odd = initial_rules()
    for n in range(1, N + 1):
        even_disp, odd_disp = displacement_vectors(n)
        even = _stencil_add(even, _stencil_scale(dict(even_disp.entries), ALPHA))
        odd = _stencil_add(odd, dict(odd_disp.entries))
    return even, odd


def _interleave(family: Family, N: int, even: Stencil, odd: Stencil) -> ParametricMask:
    entries: Dict[int, BivarPoly] = {}
    for j, poly in even.items():
        entries[2 * j] = poly
    for m, poly in odd.items():
        entries[2 * m - 1] = poly
    return ParametricMask(family=family, N=N, entries=entries)


def build_relaxed_mask(N: int) -> ParametricMask:
    """(2N+2)-point relaxed mask; entries affine in α, no β."""
    if N < 0:
        raise DomainError("N must be non-negative")
    even, odd = _relaxed_rows(N)
    return _interleave(Family.RELAXED_2N2, N, even, odd)


def extension_weights(N: int) -> CoefficientSequence:
    """Additive edge-rule stencil turning the (2N+2)- into the (2N+3)-point family.

    Every entry is a multiple of β(1-α); the entries sum to zero, so the
    edge rule keeps its affine normalization.
    """
    if N < 0:
        raise DomainError("N must be non-negative")
    factor = BETA * (ONE - ALPHA)
    entries: Dict[int, BivarPoly] = {-(N + 1): factor, N + 2: factor}
    for j in range(-(N + 1), N + 1):
        coeff = Fraction((-1) ** (j + N + 1) * (2 * j + 1), N - j + 1) * math.comb(
            2 * N + 2, N + j + 2
        )
        entries[j + 1] = BivarPoly.constant(coeff) * factor
    return CoefficientSequence(entries, parity="odd", level=N + 1)


def build_extended_mask(N: int) -> ParametricMask:
    """(2N+3)-point extended mask: relaxed vertex rule, weighted edge rule."""
    if N < 0:
        raise DomainError("N must be non-negative")
    even, odd = _relaxed_rows(N)
    odd = _stencil_add(odd, dict(extension_weights(N).entries))
    return _interleave(Family.RELAXED_2N3, N, even, odd)


def build_interpolatory_mask(N: int) -> ParametricMask:
    """(2N+4)-point interpolatory mask: the extended mask at α = 0.

    The vertex rule collapses to the identity, so initial points survive
    every refinement step unchanged.
    """
    extended = build_extended_mask(N)
    entries = {p: poly.substitute(alpha=0) for p, poly in extended.entries.items()}
    entries = {p: poly for p, poly in entries.items() if not poly.is_zero()}
    return ParametricMask(Family.INTERPOLATORY_2N4, N, entries)


def specialize(mask: ParametricMask, alpha, beta=0) -> LaurentSymbol:
    """Substitute exact rational parameters, yielding the concrete symbol."""
    alpha = parse_rational(alpha)
    beta = parse_rational(beta)
    if mask.family is Family.RELAXED_2N2 and beta != 0:
        raise ParameterError(
            "the relaxed family has no edge parameter; beta must be 0"
        )
    coeffs = {p: poly.evaluate(alpha, beta) for p, poly in mask.entries.items()}
    return LaurentSymbol(coeffs)


def build_mask(family: Family, N: int) -> ParametricMask:
    if family is Family.RELAXED_2N2:
        return build_relaxed_mask(N)
    if family is Family.RELAXED_2N3:
        return build_extended_mask(N)
    if family is Family.INTERPOLATORY_2N4:
        return build_interpolatory_mask(N)
    raise ParameterError(f"unknown family {family!r}")
