"""Parsing and formatting of exact rationals as "p/q" strings."""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a plain integer into a Fraction.

    Decimal literals are rejected: persisted artifacts carry exact values only.
    """
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ParseError(f"decimal literal not allowed, use p/q form: {text!r}")
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction in lowest terms, "p/q" or "n" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
