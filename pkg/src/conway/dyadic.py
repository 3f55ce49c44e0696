"""Exact dyadic rationals ``m / 2**n``.

The short numbers of the game engine take values here.  Numerators are
plain Python ints, so nothing overflows.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import DomainError

_TEXT = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

Rational = Union[int, Fraction, "Dyadic"]


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


@total_ordering
class Dyadic:
    """A normalized dyadic fraction: ``exponent == 0`` or ``numerator`` is odd."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            raise ValueError("exponent must be a natural number")
        if numerator == 0:
            exponent = 0
        else:
            while exponent and not numerator & 1:
                numerator >>= 1
                exponent -= 1
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def coerce(cls, value: Rational) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise TypeError(f"cannot convert {value!r} to Dyadic")

    @classmethod
    def from_fraction(cls, value: Fraction) -> Dyadic:
        den = value.denominator
        if not _is_power_of_two(den):
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Parse ``"k"`` or ``"m/d"`` with ``d`` a power of two."""
        match = _TEXT.match(text)
        if not match:
            raise ValueError(f"not a dyadic literal: {text!r}")
        num = int(match.group(1))
        if match.group(2) is None:
            return cls(num)
        den = int(match.group(2))
        if not _is_power_of_two(den):
            raise ValueError(f"denominator {den} is not a power of two")
        return cls(num, den.bit_length() - 1)

    @property
    def denominator(self) -> int:
        return 1 << self.exponent

    def is_integer(self) -> bool:
        return self.exponent == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def floor(self) -> int:
        return self.numerator >> self.exponent

    def ceil(self) -> int:
        return -((-self.numerator) >> self.exponent)

    def scale(self, k: int) -> Dyadic:
        """Multiply by ``2**k`` (``k`` may be negative)."""
        if k >= 0:
            if k <= self.exponent:
                return Dyadic(self.numerator, self.exponent - k)
            return Dyadic(self.numerator << (k - self.exponent))
        return Dyadic(self.numerator, self.exponent - k)

    def _aligned(self, other: Dyadic) -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (self.numerator << (e - self.exponent),
                other.numerator << (e - other.exponent), e)

    def __add__(self, other: Rational) -> Dyadic:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        a, b, e = self._aligned(Dyadic.coerce(other))
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other: Rational) -> Dyadic:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other: Rational) -> Dyadic:
        return Dyadic.coerce(other) - self

    def __mul__(self, other: Rational) -> Dyadic:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        other = Dyadic.coerce(other)
        return Dyadic(self.numerator * other.numerator,
                      self.exponent + other.exponent)

    __rmul__ = __mul__

    def __abs__(self) -> Dyadic:
        return Dyadic(abs(self.numerator), self.exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return (self.numerator, self.exponent) == (other.numerator, other.exponent)
        if isinstance(other, int):
            return self.exponent == 0 and self.numerator == other
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, Fraction):
            return self.to_fraction() < other
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        a, b, _ = self._aligned(Dyadic.coerce(other))
        return a < b

    def __hash__(self) -> int:
        # agree with int/Fraction hashing so mixed dict keys behave
        return hash(self.to_fraction())

    def __bool__(self) -> bool:
        return self.numerator != 0

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"

    def __reduce__(self):
        return (Dyadic, (self.numerator, self.exponent))


def simplest_between(lo: Rational | None, hi: Rational | None) -> Dyadic:
    """The dyadic of least birthday strictly between ``lo`` and ``hi``.

    ``None`` stands for an absent bound (minus or plus infinity).
    """
    lo = None if lo is None else Dyadic.coerce(lo)
    hi = None if hi is None else Dyadic.coerce(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise DomainError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Dyadic(0)
    if lo is not None and lo >= 0:
        k = lo.floor() + 1
        if hi is None or k < hi:
            return Dyadic(k)
    else:
        k = hi.ceil() - 1
        if lo is None or k > lo:
            return Dyadic(k)
    # no integer fits: both bounds are finite and within one unit interval
    n = 1
    while True:
        m = lo.scale(n).floor() + 1
        candidate = Dyadic(m, n)
        if candidate < hi:
            return candidate
        n += 1
