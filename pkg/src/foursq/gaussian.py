"""Exact arithmetic on Gaussian integers and Gaussian rationals.

Magnitudes are compared through squared norms only, so nothing here ever
touches floating point.
"""

from __future__ import annotations

from math import gcd, isqrt


class GaussianInt:
    """An element ``re + im*i`` of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0) -> None:
        self.re = re
        self.im = im

    @classmethod
    def coerce(cls, value: GaussianInt | int) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianInt")

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm_sq(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __iter__(self):
        yield self.re
        yield self.im

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return format_gaussian(self)


def format_gaussian(g: GaussianInt) -> str:
    """Compact ``a+bi`` rendering with no spaces: ``2-i``, ``3i``, ``-7``."""
    re, im = g.re, g.im
    if im == 0:
        return str(re)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{im}i"
    if re == 0:
        return imag
    sign = "" if im < 0 else "+"
    return f"{re}{sign}{imag}"


class GaussianRational:
    """``num / den`` with ``num`` in Z[i] and ``den`` a positive integer, kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: GaussianInt | int, den: int = 1) -> None:
        num = GaussianInt.coerce(num)
        if den == 0:
            raise ZeroDivisionError("GaussianRational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.re, num.im, den)
        if g > 1:
            num = GaussianInt(num.re // g, num.im // g)
            den //= g
        self.num = num
        self.den = den

    def __sub__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __add__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.num * other.num, self.den * other.den)

    def inverse(self) -> GaussianRational:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.num.conj() * self.den, self.num.norm_sq())

    def __truediv__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def norm_sq(self) -> tuple[int, int]:
        """Squared modulus as an unreduced fraction ``(numerator, denominator)``."""
        return self.num.norm_sq(), self.den * self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"GaussianRational({self.num!r}, {self.den})"


def gi_mul(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return a * b


def norm_sq(g: GaussianInt) -> int:
    return g.norm_sq()


def _round_half_up(num: int, den: int) -> int:
    # floor(num/den + 1/2), den > 0
    return (2 * num + den) // (2 * den)


def round_nearest(z: GaussianRational) -> GaussianInt:
    """Nearest Gaussian integer to ``z``; ties go toward +infinity on each axis.

    The remainder ``z - round_nearest(z)`` has both coordinates in [-1/2, 1/2).
    """
    return GaussianInt(_round_half_up(z.num.re, z.den), _round_half_up(z.num.im, z.den))


def div_round(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """``round_nearest(a / b)`` without building the intermediate rational."""
    den = b.re * b.re + b.im * b.im
    if den == 0:
        raise ZeroDivisionError("div_round by zero Gaussian integer")
    # a * conj(b)
    nre = a.re * b.re + a.im * b.im
    nim = a.im * b.re - a.re * b.im
    return GaussianInt(_round_half_up(nre, den), _round_half_up(nim, den))


def isqrt_classify(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``."""
    if n < 0:
        raise ValueError("isqrt_classify needs n >= 0")
    r = isqrt(n)
    return r, r * r == n
