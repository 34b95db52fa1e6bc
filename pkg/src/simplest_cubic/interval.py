"""Closed intervals with exact rational endpoints.

Comparisons are three-valued: ``True``/``False`` when the answer is certain
for every point of the interval, ``None`` when more precision is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import fraction_str, sqrt_bounds


class PrecisionExhausted(ArithmeticError):
    """A comparison stayed undecided at the precision cap."""


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def floor_log2(q: Fraction) -> int:
    """floor(log2(q)) for q > 0."""
    k = q.numerator.bit_length() - q.denominator.bit_length()
    # 2**k <= q < 2**(k+1) after adjustment
    if k >= 0:
        if q < (1 << k):
            k -= 1
    elif q * (1 << -k) < 1:
        k -= 1
    return k


def round_down(q: Fraction, bits: int) -> Fraction:
    return Fraction((q.numerator << bits) // q.denominator, 1 << bits)


def round_up(q: Fraction, bits: int) -> Fraction:
    return Fraction(-((-q.numerator << bits) // q.denominator), 1 << bits)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _q(self.lo))
        object.__setattr__(self, "hi", _q(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def inside_open(self, lo, hi) -> bool:
        """Certainly within the open interval (lo, hi)."""
        return lo < self.lo and self.hi < hi

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Interval):
            other = _q(other)
            a, b = self.lo * other, self.hi * other
            return Interval(min(a, b), max(a, b))
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(p), max(p))

    __rmul__ = __mul__

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def inverse(self) -> "Interval":
        if self.contains(0):
            raise ZeroDivisionError("interval contains 0")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if isinstance(other, Interval):
            return self * other.inverse()
        return self * (1 / _q(other))

    # three-valued comparisons against scalars or intervals
    def lt(self, other):
        lo, hi = _bounds(other)
        if self.hi < lo:
            return True
        if self.lo >= hi:
            return False
        return None

    def le(self, other):
        lo, hi = _bounds(other)
        if self.hi <= lo:
            return True
        if self.lo > hi:
            return False
        return None

    def gt(self, other):
        lo, hi = _bounds(other)
        if self.lo > hi:
            return True
        if self.hi <= lo:
            return False
        return None

    def ge(self, other):
        lo, hi = _bounds(other)
        if self.lo >= hi:
            return True
        if self.hi < lo:
            return False
        return None

    def sqrt(self, bits: int) -> "Interval":
        if self.lo < 0:
            raise ValueError("sqrt of an interval reaching below 0")
        return Interval(sqrt_bounds(self.lo, bits)[0], sqrt_bounds(self.hi, bits)[1])

    def log(self, bits: int) -> "Interval":
        if self.lo <= 0:
            raise ValueError("log of an interval reaching 0")
        return Interval(log_bounds(self.lo, bits)[0], log_bounds(self.hi, bits)[1])

    def to_json(self) -> list[str]:
        return [fraction_str(self.lo), fraction_str(self.hi)]

    @classmethod
    def from_json(cls, data) -> "Interval":
        return cls(Fraction(data[0]), Fraction(data[1]))

    def __float__(self):
        return float(self.mid)


def _bounds(x):
    if isinstance(x, Interval):
        return x.lo, x.hi
    x = _q(x)
    return x, x


def _atanh_bounds(z: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Bounds on atanh(z) for 0 <= z <= 1/3 via the odd power series.

    The tail after N terms is at most z^(2N+1) / ((2N+1)(1 - z^2)).
    """
    if z == 0:
        return Fraction(0), Fraction(0)
    n_terms = (bits + 8) // 3 + 2
    z2 = z * z
    power = z
    total = Fraction(0)
    for n in range(n_terms):
        total += power / (2 * n + 1)
        power *= z2
    tail = power / ((2 * n_terms + 1) * (1 - z2))
    return total, total + tail


@lru_cache(maxsize=64)
def ln2_bounds(bits: int) -> tuple[Fraction, Fraction]:
    lo, hi = _atanh_bounds(Fraction(1, 3), bits + 8)
    return round_down(2 * lo, bits + 8), round_up(2 * hi, bits + 8)


@lru_cache(maxsize=4096)
def log_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds on the natural log of ``q > 0``, width about 2**-bits."""
    q = _q(q)
    if q <= 0:
        raise ValueError("log of a non-positive number")
    if q == 1:
        return Fraction(0), Fraction(0)
    k = floor_log2(q)
    y = q / (Fraction(2) ** k)  # 1 <= y < 2
    z = (y - 1) / (y + 1)
    p = bits + 8 + max(0, abs(k).bit_length())
    z_lo, z_hi = round_down(z, p), round_up(z, p)
    lo_y = 2 * _atanh_bounds(z_lo, p)[0]
    hi_y = 2 * _atanh_bounds(z_hi, p)[1]
    l2_lo, l2_hi = ln2_bounds(p)
    if k >= 0:
        lo, hi = k * l2_lo + lo_y, k * l2_hi + hi_y
    else:
        lo, hi = k * l2_hi + lo_y, k * l2_lo + hi_y
    return round_down(lo, p), round_up(hi, p)
