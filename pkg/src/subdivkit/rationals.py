"""Exact-rational parameter handling.

Tension parameters travel as strings ("1/8", "0.125", "-3") and are parsed
to `fractions.Fraction`. Binary floats are rejected on the analysis path:
values like 3/128 have no float representation and silently rounding them
would corrupt exact certificates.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParameterError

RationalLike = "Fraction | int | str"


def parse_rational(value) -> Fraction:
    """Parse a rational from a string, int or Fraction.

    Accepts "p/q" and decimal strings; floats are refused.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParameterError(f"not a rational parameter: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParameterError(
            "float parameters are not accepted; pass a string like '1/8' or '0.125'"
        )
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot parse rational {value!r}: {exc}") from None
    raise ParameterError(f"cannot parse rational from {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Canonical "p/q" (or "p") form; round-trips through parse_rational."""
    return str(Fraction(q))


def rational_to_decimal(q: Fraction, digits: int = 12) -> str:
    """Fixed-point decimal rendering, trailing zeros trimmed."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10**digits
    whole, frac = divmod(int(scaled), 10**digits)
    text = f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")
    return text or "0"
