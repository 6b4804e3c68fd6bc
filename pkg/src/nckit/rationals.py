"""Exact complex rationals.

Every coefficient in the symbolic layer is a Gaussian rational a + b*i with
a, b drawn from stdlib fractions.Fraction.  Floats never enter; equality of
two symbolic results is therefore structural, not approximate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RatLike = Union[int, Fraction]
CRatLike = Union["CRat", int, Fraction]


def _as_fraction(v: RatLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class CRat:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("CRat is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def coerce(v: CRatLike) -> "CRat":
        if isinstance(v, CRat):
            return v
        return CRat(_as_fraction(v))

    @staticmethod
    def _operand(v) -> "CRat | None":
        """CRat view of v, or None when v belongs to another algebra.

        Binary operators must answer NotImplemented in the None case so that
        the reflected method of the other operand (e.g. a polynomial) runs.
        """
        if isinstance(v, CRat):
            return v
        if isinstance(v, (int, Fraction)):
            return CRat(v)
        return None

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_imaginary(self) -> bool:
        """Purely imaginary (real part zero); zero counts."""
        return not self.re

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: CRatLike) -> "CRat":
        o = CRat._operand(other)
        if o is None:
            return NotImplemented
        return CRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: CRatLike) -> "CRat":
        o = CRat._operand(other)
        if o is None:
            return NotImplemented
        return CRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: CRatLike) -> "CRat":
        o = CRat._operand(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "CRat":
        return CRat(-self.re, -self.im)

    def __mul__(self, other: CRatLike) -> "CRat":
        o = CRat._operand(other)
        if o is None:
            return NotImplemented
        return CRat(self.re * o.re - self.im * o.im,
                    self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: CRatLike) -> "CRat":
        o = CRat._operand(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero CRat")
        return CRat((self.re * o.re + self.im * o.im) / n,
                    (self.im * o.re - self.re * o.im) / n)

    def __pow__(self, n: int) -> "CRat":
        if not isinstance(n, int) or n < 0:
            raise ValueError("CRat power must be a nonnegative int")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "CRat":
        return CRat(self.re, -self.im)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CRat(other)
        if not isinstance(other, CRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"CRat({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if self.is_real():
            return str(self.re)
        if self.is_imaginary():
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im >= 0 else "-"
        im = abs(self.im)
        imtxt = "i" if im == 1 else f"{im}*i"
        return f"({self.re}{sign}{imtxt})"


ZERO = CRat(0)
ONE = CRat(1)
I = CRat(0, 1)
HALF_I = CRat(0, Fraction(1, 2))
