"""Exact extended-real values: rationals plus a positive-infinity marker."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union


@total_ordering
class _PositiveInfinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "+inf"

    def __hash__(self):
        return hash("dca.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        if other is self:
            return self
        if other < 0:
            raise ValueError("+inf scaled by a negative number")
        if other == 0:
            raise ValueError("0 * +inf is undefined")
        return self

    __rmul__ = __mul__

    def __sub__(self, other):
        if other is self:
            raise ValueError("+inf - +inf is undefined")
        return self

    def __neg__(self):
        raise ValueError("-inf is not representable")

    def __reduce__(self):
        return (_PositiveInfinity, ())


INF = _PositiveInfinity()

ExtendedValue = Union[Fraction, _PositiveInfinity]


def is_finite(value) -> bool:
    return value is not INF


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def to_extended(value) -> ExtendedValue:
    if value is None or value is INF:
        return INF
    return to_fraction(value)


def format_value(value) -> str | None:
    """Canonical text form: reduced "p/q" (or "p"), None for +inf."""
    if value is INF:
        return None
    return str(Fraction(value))


def scale_value(a: Fraction, value) -> ExtendedValue:
    # a >= 0 keeps +inf in place so that dom is unchanged
    if value is INF:
        return INF
    return a * value
