"""Exact scalars for the additive groups Z and Q.

Values are plain Python numbers: ``int`` when integral, otherwise a
:class:`fractions.Fraction` in lowest terms.  Mixing the two is exact, so
the rest of the package never has to care which one it holds.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class ModeError(ValueError):
    """A value is not a member of the active group."""


class GroupMode(enum.Enum):
    INTEGERS = "Z"
    RATIONALS = "Q"

    @classmethod
    def parse(cls, text: str) -> "GroupMode":
        key = text.strip().upper()
        if key in ("Z", "INT", "INTEGERS"):
            return cls.INTEGERS
        if key in ("Q", "RAT", "RATIONALS"):
            return cls.RATIONALS
        raise ValueError(f"unknown group mode {text!r}")


def scalar(value) -> Scalar:
    """Normalize *value* to an exact scalar (int if integral)."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass 'p/q' text or a Fraction")
    frac = Fraction(value)
    return frac.numerator if frac.denominator == 1 else frac


def parse_scalar(text: str) -> Scalar:
    """Parse the ``"p/q"`` (or plain integer) text form."""
    body = text.strip()
    if not body:
        raise ValueError("empty scalar")
    if "/" in body:
        num, _, den = body.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed scalar {text!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return scalar(Fraction(p, q))
    try:
        return int(body)
    except ValueError:
        raise ValueError(f"malformed scalar {text!r}") from None


def format_scalar(x: Scalar) -> str:
    x = scalar(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def is_integral(x: Scalar) -> bool:
    return isinstance(scalar(x), int)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return scalar(a + b)


def scalar_sub(a: Scalar, b: Scalar) -> Scalar:
    return scalar(a - b)


def scalar_cmp(a: Scalar, b: Scalar) -> int:
    """Return -1, 0 or 1 as *a* is less than, equal to or greater than *b*."""
    return (a > b) - (a < b)


def check_mode(values: Iterable[Scalar], mode: GroupMode, what: str = "value") -> None:
    if mode is GroupMode.INTEGERS:
        for v in values:
            if not is_integral(v):
                raise ModeError(f"{what} {format_scalar(v)} is not an integer")
