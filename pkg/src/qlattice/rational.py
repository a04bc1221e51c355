"""Exact rational helpers built on :class:`fractions.Fraction`.

Fraction already keeps values in lowest terms with a positive denominator,
so it is used directly as the rational type throughout the package.
"""

import re
from fractions import Fraction

from .errors import SpecParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse ``"p/q"`` or an integer string. Decimal and exponent forms are rejected."""
    if isinstance(text, bool):
        raise SpecParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SpecParseError(f"rational must be a string 'p/q', got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise SpecParseError(f"not a rational 'p/q' string: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise SpecParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def as_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return parse_rational(value) if isinstance(value, str) else Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value):
    """Render as ``"p/q"``, or just ``"p"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value, digits=6):
    """Decimal text for XYZ output.

    Exact when the denominator divides ``10**digits`` (trailing zeros dropped),
    otherwise ``digits`` fractional digits rounded half-to-even.
    """
    value = Fraction(value)
    scale = 10**digits
    exact = scale % value.denominator == 0
    # round() on a Fraction is half-to-even
    scaled = round(value * scale)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), scale)
    frac_text = str(frac).rjust(digits, "0")
    if exact:
        frac_text = frac_text.rstrip("0")
    if not frac_text:
        return f"{sign}{whole}" if whole else "0"
    return f"{sign}{whole}.{frac_text}"
