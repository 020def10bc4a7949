"""Exact rational helpers shared by the core and the document layer."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (lowest terms, q > 0) or a bare integer string.

    Anything else, including decimals, zero denominators and unreduced
    fractions, raises ``ValueError``.
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(num, den)
    if value.numerator != num or value.denominator != den:
        raise ValueError(f"{text!r} is not in lowest terms")
    return value


def to_rational(value: RationalLike) -> Fraction:
    # bool is an int subclass and float would silently lose exactness
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"payoffs must be exact (int, Fraction or str), got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def fmt(value: Fraction) -> str:
    return str(value)


def fmt_vector(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"
