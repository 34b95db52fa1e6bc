"""Small exact integer helpers shared across modules."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def icbrt(n: int) -> int:
    """Floor of the real cube root of ``n`` (any sign)."""
    if n < 0:
        return -icbrt_ceil(-n)
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def icbrt_ceil(n: int) -> int:
    if n < 0:
        return -icbrt(-n)
    k = icbrt(n)
    return k if k ** 3 == n else k + 1


def exact_cube_root(n: int) -> int | None:
    """The integer ``k`` with ``k**3 == n``, or None."""
    k = icbrt(n)
    return k if k ** 3 == n else None


def exact_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    k = isqrt(n)
    return k if k * k == n else None


def is_squarefree(m: int) -> bool:
    """Deterministic trial division up to floor(sqrt(m))."""
    if m < 1:
        raise ValueError("is_squarefree expects m >= 1")
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return False
        p += 1 if p == 2 else 2
    return True


def cbrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= q**(1/3) <= hi`` with ``hi - lo <= 2**(1 - bits)``; q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("cbrt_bounds expects q >= 0")
    scale = 1 << (3 * bits)
    lo_num = icbrt(q.numerator * scale // q.denominator)
    hi_num = icbrt_ceil(-(-q.numerator * scale // q.denominator))
    return Fraction(lo_num, 1 << bits), Fraction(hi_num, 1 << bits)


def sqrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= sqrt(q) <= hi`` with ``hi - lo <= 2**(1 - bits)``; q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt_bounds expects q >= 0")
    scale = 1 << (2 * bits)
    lo_num = isqrt(q.numerator * scale // q.denominator)
    n_hi = -(-q.numerator * scale // q.denominator)
    hi_num = isqrt(n_hi)
    if hi_num * hi_num < n_hi:
        hi_num += 1
    return Fraction(lo_num, 1 << bits), Fraction(hi_num, 1 << bits)


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"
