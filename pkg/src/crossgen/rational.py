"""Exact rational helpers for document encoding and bucket arithmetic.

Feature values like 1/3 or 5/6 are not exactly representable as binary
floats, so everything that feeds a score or a bucket boundary stays a
`fractions.Fraction` until the moment a float is genuinely wanted
(chart coordinates, JSD). Documents encode rationals as strings
("1/3", "0", "1"); floats in documents are rejected.
"""

from __future__ import annotations

from fractions import Fraction


class RationalFormatError(ValueError):
    """A document field does not hold a valid rational encoding."""


def parse_rational(raw: object, where: str = "value") -> Fraction:
    """Parse a document entry into an exact Fraction.

    Accepts strings like "p/q", "0", "1", "-2/7" and plain ints.
    JSON floats are rejected: 0.3333... silently losing exactness is
    precisely the bug this codec exists to prevent.
    """
    if isinstance(raw, bool):
        raise RationalFormatError(f"{where}: booleans are not rationals")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise RationalFormatError(
            f"{where}: rationals must be encoded as strings like \"1/3\", got float {raw!r}"
        )
    if isinstance(raw, str):
        text = raw.strip()
        if "." in text or "e" in text or "E" in text:
            raise RationalFormatError(
                f"{where}: decimal notation {raw!r} is not exact; use \"p/q\""
            )
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise RationalFormatError(f"{where}: cannot parse rational {raw!r}") from exc
    raise RationalFormatError(f"{where}: expected a rational string, got {type(raw).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical document encoding: "p/q", or "p" when the denominator is 1."""
    return str(value)


def round_half_away(value: Fraction) -> int:
    """Round to the nearest integer, ties away from zero.

    round(8.6) = 9, round(4.3) = 4, round(0.5) = 1, round(-0.5) = -1.
    Exact: no float ever enters the computation.
    """
    p, q = value.numerator, value.denominator
    if p >= 0:
        return (2 * p + q) // (2 * q)
    return -((-2 * p + q) // (2 * q))
