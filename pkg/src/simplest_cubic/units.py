"""Reduction of elements modulo the units alpha and alpha''.

Given gamma and positive targets c1, c2, :func:`reduce` finds a unit eta with

    c1 <= |gamma eta|   < (a+3) c1
    c2 <= |gamma' eta'| < (a+4) c2

by translating Log(gamma) = (log|gamma|, log|gamma'|) with the lattice spanned
by Log(alpha) and Log(alpha'').  Logs only steer the search; the bounds on the
returned element are certified directly on its embeddings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .arith import cbrt_bounds
from .embeddings import DEFAULT_BITS, RootEnclosure, embed, isolate_roots, refine_until
from .interval import Interval, PrecisionExhausted
from .ring import FieldParam, RingElt, alpha, alpha2, norm, one


@dataclass(frozen=True)
class UnitWord:
    """The unit sign * alpha**i * alpha''**j."""

    sign: int = 1
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def materialize(self, param: FieldParam) -> RingElt:
        u = self.sign * (alpha(param) ** self.i) * (alpha2(param) ** self.j)
        if norm(u) not in (1, -1):
            raise ArithmeticError(f"{self} does not evaluate to a unit")
        return u

    @property
    def length(self) -> int:
        return abs(self.i) + abs(self.j)

    def to_json(self) -> dict:
        return {"sign": self.sign, "i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, data: dict) -> "UnitWord":
        return cls(int(data["sign"]), int(data["i"]), int(data["j"]))


@dataclass(frozen=True)
class LogVector:
    first: Interval
    second: Interval

    def approx(self) -> tuple[float, float]:
        return float(self.first.mid), float(self.second.mid)


def _abs_embeddings(x: RingElt, enc: RootEnclosure, ks=(0, 1)):
    def decide(e):
        vals = [abs(embed(x, e, k)) for k in ks]
        return vals if all(v.lo > 0 for v in vals) else None

    return refine_until(enc, decide)


def log_embed(x: RingElt, enc: RootEnclosure) -> LogVector:
    if x.is_zero():
        raise ValueError("log_embed of 0")
    (v0, v1), used = _abs_embeddings(x, enc)
    bits = used.precision_bits
    return LogVector(v0.log(bits), v1.log(bits))


@lru_cache(maxsize=256)
def unit_logs(enc: RootEnclosure) -> tuple[LogVector, LogVector]:
    return log_embed(alpha(enc.param), enc), log_embed(alpha2(enc.param), enc)


def unit_regulator(enc: RootEnclosure) -> Interval:
    """Interval for det[Log alpha, Log alpha'']; certifies independence when 0 is excluded."""
    v1, v2 = unit_logs(enc)
    det = v1.first * v2.second - v1.second * v2.first
    if det.contains(0):
        raise PrecisionExhausted("unit log determinant not separated from 0")
    return det


def _conforms(x: RingElt, c1: Fraction, c2: Fraction, enc: RootEnclosure):
    a = enc.param.a

    def decide(e):
        x0 = abs(embed(x, e, 0))
        x1 = abs(embed(x, e, 1))
        verdicts = (x0.ge(c1), x0.lt((a + 3) * c1), x1.ge(c2), x1.lt((a + 4) * c2))
        if any(v is False for v in verdicts):
            return False
        if all(v is True for v in verdicts):
            return True
        return None

    return refine_until(enc, decide)[0]


def conforms(x: RingElt, c1, c2, enc: RootEnclosure) -> bool:
    """Certified check of both reduction bounds for ``x``."""
    return _conforms(x, Fraction(c1), Fraction(c2), enc)


def reduce(gamma: RingElt, c1, c2, enc: RootEnclosure | None = None) -> tuple[UnitWord, RingElt]:
    c1, c2 = Fraction(c1), Fraction(c2)
    if c1 <= 0 or c2 <= 0:
        raise ValueError("targets c1, c2 must be positive")
    if gamma.is_zero():
        raise ValueError("cannot reduce 0")
    param = gamma.param
    if enc is None:
        enc = isolate_roots(param, DEFAULT_BITS)
    a = param.a
    unit_regulator(enc)
    try:
        if _conforms(gamma, c1, c2, enc):
            return UnitWord(), gamma
    except PrecisionExhausted:
        pass

    (l0, l1) = log_embed(gamma, enc).approx()
    (u0, u1), (w0, w1) = (v.approx() for v in unit_logs(enc))
    t0 = math.log(c1) + math.log(a + 3) / 2 - l0
    t1 = math.log(c2) + math.log(a + 4) / 2 - l1
    det = u0 * w1 - u1 * w0
    i_star = (t0 * w1 - t1 * w0) / det
    j_star = (u0 * t1 - u1 * t0) / det

    ua, ub = alpha(param), alpha2(param)
    undecided = False
    tried = set()
    for radius in (2, 4, 8):
        ci, cj = round(i_star), round(j_star)
        cands = sorted(
            (p for p in product(range(ci - radius, ci + radius + 1),
                                range(cj - radius, cj + radius + 1)) if p not in tried),
            key=lambda p: ((p[0] - i_star) ** 2 + (p[1] - j_star) ** 2, p),
        )
        for i, j in cands:
            tried.add((i, j))
            reduced = gamma * (ua ** i) * (ub ** j)
            try:
                ok = _conforms(reduced, c1, c2, enc)
            except PrecisionExhausted:
                undecided = True
                continue
            if ok:
                return UnitWord(1, i, j), reduced
    if undecided:
        raise PrecisionExhausted("a reduction bound stayed undecided; perturb c1/c2")
    raise RuntimeError(f"no unit found for {gamma!r} with c1={c1}, c2={c2}")


@dataclass(frozen=True)
class CoefficientBounds:
    s_bound: int
    t_bound: int
    coarse_chain: int
    termwise_chain: tuple[int, int]


def coefficient_bounds(param: FieldParam, n: int, enc: RootEnclosure | None = None) -> CoefficientBounds:
    """Integer bounds on |s|, |t| for a reduced element of norm at most ``n``.

    Two chains are evaluated with rational upper bounds throughout:

    * the coarse one, max |xi^(k)| < (n (a+3)^2)^(1/3) times the sum of the
      root gaps (2a+5 when a >= 7);
    * a term-by-term one that bounds |xi| < (a+3)c, |xi'| < (a+4)c and
      |xi''| <= n / c^2 with c = (n/(a+3))^(1/3), each against its own gap.

    The returned bounds are the larger of the two.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, m = param.a, param.m
    if enc is None:
        enc = isolate_roots(param, 32)
    r0, r1, r2 = enc.intervals
    d01 = abs(r0 - r1).hi
    d12 = abs(r1 - r2).hi
    d20 = abs(r2 - r0).hi

    bits = 48
    cube_hi = cbrt_bounds(Fraction(n * (a + 3) ** 2), bits)[1]
    gap_sum = Fraction(2 * a + 5) if a >= 7 else d01 + d12 + d20
    coarse = math.floor(cube_hi * gap_sum / m)

    c_lo, c_hi = cbrt_bounds(Fraction(n, a + 3), bits)
    b0, b1, b2 = (a + 3) * c_hi, (a + 4) * c_hi, n / (c_lo * c_lo)
    t_side = math.floor((b0 * d12 + b1 * d20 + b2 * d01) / m)
    s_side = math.floor((b0 * d20 + b1 * d01 + b2 * d12) / m)
    return CoefficientBounds(max(coarse, s_side), max(coarse, t_side), coarse, (s_side, t_side))


def coefficient_bound_check(param: FieldParam, n: int, enc: RootEnclosure | None = None) -> tuple[int, int]:
    b = coefficient_bounds(param, n, enc)
    return b.s_bound, b.t_bound
