"""Quadratic generators for two families of unramified extensions.

``cor1`` needs 2a+3 = b^2 and uses theta = alpha + 2; ``cor2`` needs
6a+19 = b^2, m > 13 and uses theta = alpha(2 alpha - 1).  In both cases
N(theta) = b^2 and m must be squarefree.  The defining sextic of sqrt(theta)
is g(y^2), with g the characteristic polynomial of theta.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import exact_sqrt, is_squarefree
from .embeddings import embed, isolate_roots
from .interval import Interval
from .poly import Poly
from .ring import SYMBOLIC, FieldParam, RingElt, alpha, alpha1, norm, trace

COR1, COR2 = "cor1", "cor2"

REMARK_A1 = "a=1: m = 13 is not > 13, and 6a+19 = 25 = (2a+3)^2, i.e. b is a norm"

__all__ = [
    "COR1", "COR2", "CorollaryHit", "NonSquareCertificate", "extension_generator_poly",
    "generator", "hits_to_csv", "is_squarefree", "non_square_certificate",
    "scan_corollary", "sextic_root_check",
]


def generator(param, which: str, conj: int = 0) -> RingElt:
    """theta (conj=0) or theta' (conj=1) for the chosen corollary."""
    x = alpha(param) if conj == 0 else alpha1(param)
    if which == COR1:
        return x + 2
    if which == COR2:
        return x * (2 * x - 1)
    raise ValueError(f"unknown corollary {which!r}")


def _div(x, d: int):
    if isinstance(x, Poly):
        q = x.exact_div(d)
        if q is None:
            raise ArithmeticError(f"{x} not divisible by {d}")
        return q
    q, rem = divmod(x, d)
    if rem:
        raise ArithmeticError(f"{x} not divisible by {d}")
    return q


def char_poly_newton(theta: RingElt) -> list:
    """Ascending coefficients of the characteristic polynomial from power traces."""
    p1 = trace(theta)
    p2 = trace(theta * theta)
    p3 = trace(theta * theta * theta)
    e1 = p1
    e2 = _div(e1 * p1 - p2, 2)
    e3 = _div(e2 * p1 - e1 * p2 + p3, 3)
    return [-e3, e2, -e1, 1]


def extension_generator_poly(param, which: str) -> list[list]:
    """Defining sextics (ascending coefficients) of sqrt(theta).

    theta and theta' share one sextic, so the list has a single entry.
    """
    g = char_poly_newton(generator(param, which))
    zero = Poly() if param is SYMBOLIC else 0
    sextic = [g[0], zero, g[1], zero, g[2], zero, g[3]]
    if param is SYMBOLIC:
        sextic = [Poly.coerce(c) for c in sextic]
    return [sextic]


def eval_interval(coeffs, x: Interval) -> Interval:
    acc = Interval.point(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RootCheck:
    sqrt_enclosure: Interval
    value: Interval
    contains_zero: bool
    sign_change: bool


def sextic_root_check(param: FieldParam, which: str, bits: int = 50) -> RootCheck:
    """Evaluate the sextic on an enclosure of sqrt(theta^(0)) of width <= 2**-bits."""
    sextic = extension_generator_poly(param, which)[0]
    enc = isolate_roots(param, bits + 16)
    theta = embed(generator(param, which), enc, 0)
    if theta.lo <= 0:
        raise ArithmeticError("theta is not positive in the first embedding")
    root = theta.sqrt(bits + 8)
    if root.width > Fraction(1, 1 << bits):
        raise ArithmeticError("sqrt enclosure wider than requested")
    value = eval_interval(sextic, root)
    lo_v = eval_interval(sextic, Interval.point(root.lo))
    hi_v = eval_interval(sextic, Interval.point(root.hi))
    return RootCheck(root, value, value.contains(0), lo_v.lo * hi_v.lo < 0)


@dataclass
class CorollaryHit:
    which: str
    a: int
    m: int
    b: int
    m_squarefree: bool
    excluded_reason: str | None
    generator_polys: list = field(default_factory=list)

    @property
    def is_hit(self) -> bool:
        return self.excluded_reason is None

    def to_json(self) -> dict:
        return {
            "criterion": self.which,
            "a": str(self.a),
            "b": str(self.b),
            "m": str(self.m),
            "squarefree": self.m_squarefree,
            "hit": self.is_hit,
            "excluded_reason": self.excluded_reason,
            "generator_polys": [[str(c) for c in p] for p in self.generator_polys],
        }


def square_quantity(which: str, a: int) -> int:
    if which == COR1:
        return 2 * a + 3
    if which == COR2:
        return 6 * a + 19
    raise ValueError(f"unknown corollary {which!r}")


def scan_corollary(which: str, a_lo: int, a_hi: int) -> list[CorollaryHit]:
    """Every a in [a_lo, a_hi] where the square condition holds, hit or excluded."""
    if not 1 <= a_lo <= a_hi:
        raise ValueError("need 1 <= a_lo <= a_hi")
    out = []
    for a in range(a_lo, a_hi + 1):
        b = exact_sqrt(square_quantity(which, a))
        if b is None:
            continue
        param = FieldParam(a)
        sf = is_squarefree(param.m)
        reason = None
        if which == COR2 and a == 1:
            reason = REMARK_A1
        elif not sf:
            reason = "m not squarefree"
        elif which == COR2 and param.m <= 13:
            reason = "m <= 13"
        out.append(CorollaryHit(which, a, param.m, b, sf, reason,
                                extension_generator_poly(param, which)))
    return out


def hits_to_csv(hits: list[CorollaryHit]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["criterion", "a", "b", "m", "squarefree", "excluded_reason", "poly"])
    for h in hits:
        poly = " ".join(str(c) for c in h.generator_polys[0]) if h.generator_polys else ""
        w.writerow([h.which, h.a, h.b, h.m, h.m_squarefree, h.excluded_reason or "", poly])
    return buf.getvalue()


@dataclass(frozen=True)
class NonSquareCertificate:
    a: int
    b: int
    norm_theta: int
    b_below_threshold: bool
    coefficient_gcd: int
    theorem_verified: bool
    theorem_counts: dict

    @property
    def holds(self) -> bool:
        return self.b_below_threshold and self.coefficient_gcd == 1 and self.theorem_verified

    def to_json(self) -> dict:
        return {
            "a": str(self.a), "b": str(self.b), "norm_theta": str(self.norm_theta),
            "b_below_threshold": self.b_below_threshold,
            "coefficient_gcd": str(self.coefficient_gcd),
            "theorem_verified": self.theorem_verified,
            "theorem_counts": self.theorem_counts,
            "holds": self.holds,
        }


def non_square_certificate(param: FieldParam) -> NonSquareCertificate:
    """Checkable facts behind "alpha + 2 is not a square" when 2a+3 = b^2."""
    from .small_norm import verify_theorem

    b = exact_sqrt(param.threshold)
    if b is None:
        raise ValueError(f"2a+3 = {param.threshold} is not a square")
    theta = generator(param, COR1)
    report = verify_theorem(param)
    counts = {k: v for k, v in report.stats.items() if isinstance(v, int)}
    return NonSquareCertificate(
        a=param.a, b=b, norm_theta=norm(theta),
        b_below_threshold=b < param.threshold,
        coefficient_gcd=gcd(*theta.coeffs),
        theorem_verified=report.verified,
        theorem_counts=counts,
    )
