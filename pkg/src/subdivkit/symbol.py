"""Laurent polynomials over Q, the symbols of concrete subdivision schemes.

A scheme with mask {a_i} has symbol a(z) = sum a_i z^i. All coefficient
arithmetic is exact; floats never appear here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational coefficient, got {type(value).__name__}")


class LaurentSymbol:
    """Finitely supported map exponent -> Fraction, zero coefficients dropped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        cleaned = {}
        if coeffs:
            for exp, coeff in coeffs.items():
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    cleaned[int(exp)] = coeff
        self._coeffs = cleaned

    @staticmethod
    def from_list(lowest: int, coeffs: Iterable) -> "LaurentSymbol":
        return LaurentSymbol({lowest + i: _as_fraction(c) for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lowest(self) -> int:
        if not self._coeffs:
            raise ValueError("zero symbol has no support")
        return min(self._coeffs)

    @property
    def highest(self) -> int:
        if not self._coeffs:
            raise ValueError("zero symbol has no support")
        return max(self._coeffs)

    @property
    def width(self) -> int:
        """Number of lattice positions spanned, including interior zeros."""
        if not self._coeffs:
            return 0
        return self.highest - self.lowest + 1

    def coeff(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient_list(self, lowest: int | None = None, highest: int | None = None):
        """Dense coefficient list over [lowest, highest] (defaults: support)."""
        if not self._coeffs and lowest is None:
            return []
        lo = self.lowest if lowest is None else lowest
        hi = self.highest if highest is None else highest
        return [self.coeff(i) for i in range(lo, hi + 1)]

    def even_sum(self) -> Fraction:
        return sum((c for e, c in self._coeffs.items() if e % 2 == 0), Fraction(0))

    def odd_sum(self) -> Fraction:
        return sum((c for e, c in self._coeffs.items() if e % 2 != 0), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "LaurentSymbol(0)"
        body = " + ".join(f"({c})z^{e}" for e, c in self.items())
        return f"LaurentSymbol({body})"

    # -- algebra ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + coeff
        return LaurentSymbol(out)

    def __sub__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) - coeff
        return LaurentSymbol(out)

    def __mul__(self, other):
        if not isinstance(other, LaurentSymbol):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ea, ca in self._coeffs.items():
            for eb, cb in other._coeffs.items():
                key = ea + eb
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return LaurentSymbol(out)

    def scaled(self, factor) -> "LaurentSymbol":
        factor = _as_fraction(factor)
        return LaurentSymbol({e: factor * c for e, c in self._coeffs.items()})

    def shifted(self, k: int) -> "LaurentSymbol":
        """Multiply by z^k."""
        return LaurentSymbol({e + k: c for e, c in self._coeffs.items()})

    def upsampled(self, m: int) -> "LaurentSymbol":
        """Substitute z -> z^m."""
        return LaurentSymbol({e * m: c for e, c in self._coeffs.items()})

    def reflected(self) -> "LaurentSymbol":
        """Substitute z -> 1/z."""
        return LaurentSymbol({-e: c for e, c in self._coeffs.items()})

    def __call__(self, z) -> Fraction:
        z = _as_fraction(z)
        if z == 0:
            raise ZeroDivisionError("Laurent symbols are not defined at z = 0")
        return sum((c * z**e for e, c in self._coeffs.items()), Fraction(0))

    def derivative(self) -> "LaurentSymbol":
        return LaurentSymbol({e - 1: c * e for e, c in self._coeffs.items() if e != 0})

    # -- (1+z) factor handling -----------------------------------------

    def try_divide_one_plus_z(self) -> "LaurentSymbol | None":
        """Exact quotient self / (1+z), or None when division leaves a remainder."""
        if not self._coeffs:
            return LaurentSymbol()
        lo, hi = self.lowest, self.highest
        dense = [self.coeff(i) for i in range(lo, hi + 1)]
        # synthetic division of the shifted polynomial by (z + 1)
        quotient = []
        carry = Fraction(0)
        for coeff in reversed(dense):
            carry = coeff - carry
            quotient.append(carry)
        remainder = quotient.pop()
        if remainder != 0:
            return None
        quotient.reverse()
        return LaurentSymbol.from_list(lo, quotient)

    def one_plus_z_multiplicity(self, cap: int = 64) -> int:
        """Largest k with (1+z)^k dividing the symbol exactly."""
        count = 0
        current = self
        while count < cap:
            nxt = current.try_divide_one_plus_z()
            if nxt is None:
                return count
            current = nxt
            count += 1
        return count
