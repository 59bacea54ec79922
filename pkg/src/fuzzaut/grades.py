"""Membership grades: exact rationals in the closed interval [0, 1].

Grades are plain ``fractions.Fraction`` values.  Everything downstream is
order-theoretic (min / max / sup over finite sets), so exactness matters:
floating point would corrupt sup computations and every equality-based law.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FuzzautError

Grade = Fraction

GRADE_ZERO = Fraction(0)
GRADE_ONE = Fraction(1)


class GradeError(FuzzautError):
    """A value is outside [0, 1] or cannot be parsed as a rational."""


def grade(value, denominator=None) -> Fraction:
    """Coerce ``value`` (int, string "p/q", or Fraction) to a valid grade."""
    try:
        g = Fraction(value) if denominator is None else Fraction(value, denominator)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise GradeError(f"cannot interpret {value!r} as a rational grade") from exc
    if not GRADE_ZERO <= g <= GRADE_ONE:
        raise GradeError(f"grade {g} outside [0, 1]")
    return g


def parse_grade(text: str) -> Fraction:
    """Parse "p/q", "1" or "0" into an exact grade."""
    if not isinstance(text, str):
        raise GradeError(f"expected a rational string, got {type(text).__name__}")
    return grade(text.strip())


def format_grade(g: Fraction) -> str:
    """Canonical string form: "0", "1" or "p/q" in lowest terms."""
    return str(g)
