"""Dense integer polynomials in the family parameter ``a``.

A :class:`Poly` is the symbolic coefficient domain for :mod:`simplest_cubic.ring`:
an identity that holds in ``Z[a]`` holds for every member of the field family,
so "for all a" claims reduce to exact coefficient comparisons.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Union


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Polynomial in ``a`` with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def coerce(cls, x: "PolyLike") -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, a):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __add__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return Poly(x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, d: int) -> "Poly | None":
        """Divide every coefficient by the integer ``d``; None if any is inexact."""
        q = []
        for c in self.coeffs:
            k, rem = divmod(c, d)
            if rem:
                return None
            q.append(k)
        return Poly(q)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "a" if k == 1 else f"a^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> "Poly":
        return cls(int(c) for c in data)


PolyLike = Union[Poly, int]

#: the formal parameter ``a`` itself
A = Poly((0, 1))
