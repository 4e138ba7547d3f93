"""Exact polynomials in the two tension parameters.

Mask entries are polynomials over Q in the vertex parameter (rendered α)
and the edge parameter (rendered β). Everything produced by the mask
builders is affine in each variable separately; the only mixed term that
ever appears is the αβ term coming from the β(1-α) weight factor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Tuple

Monomial = Tuple[int, int]  # (degree in alpha, degree in beta)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class BivarPoly:
    """Immutable polynomial in (alpha, beta) with Fraction coefficients.

    Zero coefficients are never stored, so structural equality of the term
    maps is polynomial equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        cleaned = {}
        if terms:
            for key, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    da, db = key
                    if da < 0 or db < 0:
                        raise ValueError(f"negative exponent in monomial {key}")
                    cleaned[(int(da), int(db))] = coeff
        self._terms = cleaned

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(value) -> "BivarPoly":
        return BivarPoly({(0, 0): _as_fraction(value)})

    @staticmethod
    def alpha() -> "BivarPoly":
        return BivarPoly({(1, 0): Fraction(1)})

    @staticmethod
    def beta() -> "BivarPoly":
        return BivarPoly({(0, 1): Fraction(1)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((0, 0), Fraction(0))

    def coefficient(self, da: int, db: int) -> Fraction:
        return self._terms.get((da, db), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(da + db for da, db in self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    # -- algebra ------------------------------------------------------

    def _coerce(self, other) -> "BivarPoly | None":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in rhs._terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (da, db), ca in self._terms.items():
            for (ea, eb), cb in rhs._terms.items():
                key = (da + ea, db + eb)
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- evaluation ---------------------------------------------------

    def evaluate(self, alpha, beta) -> Fraction:
        alpha = _as_fraction(alpha)
        beta = _as_fraction(beta)
        total = Fraction(0)
        for (da, db), coeff in self._terms.items():
            total += coeff * alpha**da * beta**db
        return total

    def substitute(self, alpha=None, beta=None) -> "BivarPoly":
        """Partial substitution; unsubstituted variables stay symbolic."""
        out: dict[Monomial, Fraction] = {}
        for (da, db), coeff in self._terms.items():
            if alpha is not None:
                coeff = coeff * _as_fraction(alpha) ** da
                da = 0
            if beta is not None:
                coeff = coeff * _as_fraction(beta) ** db
                db = 0
            key = (da, db)
            out[key] = out.get(key, Fraction(0)) + coeff
        return BivarPoly(out)

    # -- rendering ----------------------------------------------------

    def __repr__(self):
        return f"BivarPoly({self.format()})"

    def format(self, alpha_symbol: str = "α", beta_symbol: str = "β") -> str:
        """Human form, grouping the β(1-α) factor when present.

        All masks built here carry β only through β(1-α), i.e. the αβ
        coefficient is the negated β coefficient; rendering that group as a
        unit matches how the entries are naturally written.
        """
        if not self._terms:
            return "0"
        c_beta = self.coefficient(0, 1)
        c_alphabeta = self.coefficient(1, 1)
        grouped = c_beta != 0 and c_alphabeta == -c_beta
        pieces: list[tuple[Fraction, str]] = []
        consumed = set()
        if self.coefficient(0, 0) != 0:
            pieces.append((self.coefficient(0, 0), ""))
            consumed.add((0, 0))
        if self.coefficient(1, 0) != 0:
            pieces.append((self.coefficient(1, 0), alpha_symbol))
            consumed.add((1, 0))
        if grouped:
            pieces.append((c_beta, f"{beta_symbol}(1-{alpha_symbol})"))
            consumed.update([(0, 1), (1, 1)])
        for (da, db), coeff in sorted(self._terms.items()):
            if (da, db) in consumed:
                continue
            sym = ""
            if da:
                sym += alpha_symbol + (f"^{da}" if da > 1 else "")
            if db:
                sym += beta_symbol + (f"^{db}" if db > 1 else "")
            pieces.append((coeff, sym))
        out = ""
        for coeff, sym in pieces:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = sym if (mag == 1 and sym) else (str(mag) + sym)
            if not out:
                out = ("-" if sign == "-" else "") + body
            else:
                out += sign + body
        return out


ZERO = BivarPoly()
ONE = BivarPoly.constant(1)
ALPHA = BivarPoly.alpha()
BETA = BivarPoly.beta()
