"""Extended nonnegative scalars in two arithmetic modes.

Function values live in [0, +inf].  Finite values are either
:class:`fractions.Fraction` (mode ``"rational"``, exact) or :class:`float`
(mode ``"float"``); ``math.inf`` is the shared top element in both modes.
Python's numeric tower already gives a total order across Fraction, int,
float and inf, so no wrapper class is needed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Num = Union[Fraction, int, float]

INF = math.inf

RATIONAL = "rational"
FLOAT = "float"


def is_inf(x: Num) -> bool:
    return isinstance(x, float) and math.isinf(x)


def is_finite(x: Num) -> bool:
    return not is_inf(x)


def infer_mode(*values: Num) -> str:
    """Rational unless any finite value is a float."""
    for v in values:
        if isinstance(v, float) and not math.isinf(v):
            return FLOAT
    return RATIONAL


def join_modes(*modes: str) -> str:
    return FLOAT if FLOAT in modes else RATIONAL


def as_mode(x: Num, mode: str) -> Num:
    """Coerce a finite scalar into the target mode; inf passes through."""
    if is_inf(x):
        return INF
    if mode == RATIONAL:
        if isinstance(x, Fraction):
            return x
        return Fraction(x)  # exact for ints and binary floats
    if mode == FLOAT:
        return float(x)
    raise ValueError(f"unknown arithmetic mode {mode!r}")


def rational_sqrt(x: Num):
    """Exact square root of a nonnegative rational, or None if irrational."""
    f = Fraction(x)
    if f < 0:
        raise ValueError("negative radicand")
    np_, dp = f.numerator, f.denominator
    rn, rd = math.isqrt(np_), math.isqrt(dp)
    if rn * rn == np_ and rd * rd == dp:
        return Fraction(rn, rd)
    return None


def parse_number(raw) -> Num:
    """Read one scalar from its JSON form.

    Strings hold exact rationals ("p/q" or "p"); plain numbers are floats;
    the strings "inf"/"Infinity" denote the top element.
    """
    if isinstance(raw, str):
        if raw.strip().lower() in ("inf", "infinity", "+inf"):
            return INF
        return Fraction(raw)
    if isinstance(raw, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(raw, int):
        return float(raw)
    if isinstance(raw, float):
        return raw
    raise ValueError(f"cannot parse scalar from {raw!r}")


def format_number(x: Num, mode: str):
    """JSON form of one scalar: "p/q" strings in rational mode, numbers in float."""
    if is_inf(x):
        return "inf" if mode == RATIONAL else INF
    if mode == RATIONAL:
        return str(Fraction(x))
    return float(x)
