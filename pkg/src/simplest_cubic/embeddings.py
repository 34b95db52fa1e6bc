"""Certified enclosures of the three real roots of f_a and interval embeddings.

Roots are ordered alpha < alpha' < alpha''; embedding ``k`` sends
(alpha, alpha') to (root_k, root_{k+1 mod 3}), i.e. it evaluates sigma^k(x).

Refinement follows one deterministic sequence of nested intervals per seed
(bisection, accelerated by a Newton step once the bracket is narrow), so an
enclosure at more bits is always nested inside one at fewer bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, TypeVar

from .interval import Interval, PrecisionExhausted, floor_log2
from .ring import FieldParam, RingElt

DEFAULT_BITS = 64
MAX_BITS = 4096

T = TypeVar("T")


def standard_brackets(param: FieldParam) -> tuple[Interval, Interval, Interval]:
    """Closed versions of the open brackets used for a >= 7."""
    a = Fraction(param.a)
    return (
        Interval(-1 - 1 / a, -1 - 1 / (2 * a)),
        Interval(-1 / (a + 2), -1 / (a + 3)),
        Interval(a + 1, a + 1 + 2 / a),
    )


def _sign_change(param: FieldParam, iv: Interval) -> bool:
    return param.f(iv.lo) * param.f(iv.hi) < 0


def seed_intervals(param: FieldParam) -> tuple[Interval, Interval, Interval]:
    if param.a >= 7:
        seeds = standard_brackets(param)
        for iv in seeds:
            if not _sign_change(param, iv):
                raise AssertionError(f"bracket {iv} has no sign change at a={param.a}")
        return seeds
    found = []
    prev = param.f(-2)
    for x in range(-1, param.a + 3):
        cur = param.f(x)
        if prev * cur < 0:
            found.append(Interval(x - 1, x))
        prev = cur
    if len(found) != 3:
        raise AssertionError(f"expected three sign changes, found {len(found)}")
    return tuple(found)


def _step(param: FieldParam, iv: Interval) -> Interval:
    lo, hi = iv.lo, iv.hi
    w = hi - lo
    m = (lo + hi) / 2
    if w < Fraction(1, 256):
        d = param.df(m)
        if d != 0:
            n = m - param.f(m) / d
            e = Fraction(2) ** (2 * floor_log2(w) + 2)
            g = e / 4
            n = (n / g).__floor__() * g
            j_lo, j_hi = max(lo, n - e), min(hi, n + e)
            if j_lo < j_hi and j_hi - j_lo <= w / 2 and param.f(j_lo) * param.f(j_hi) < 0:
                return Interval(j_lo, j_hi)
    fm = param.f(m)
    if param.f(lo) * fm < 0:
        return Interval(lo, m)
    return Interval(m, hi)


def _refine_interval(param: FieldParam, iv: Interval, bits: int) -> Interval:
    target = Fraction(1, 1 << bits)
    while iv.width > target:
        iv = _step(param, iv)
    return iv


@dataclass(frozen=True)
class RootEnclosure:
    param: FieldParam
    intervals: tuple[Interval, Interval, Interval]
    precision_bits: int

    def root(self, k: int) -> Interval:
        return self.intervals[k % 3]

    def refine(self, bits: int) -> "RootEnclosure":
        if bits <= self.precision_bits:
            return self
        ivs = tuple(_refine_interval(self.param, iv, bits) for iv in self.intervals)
        return RootEnclosure(self.param, ivs, bits)

    def certify(self) -> bool:
        """Sign change on each interval, pairwise disjoint, ordered."""
        ivs = self.intervals
        return (
            all(_sign_change(self.param, iv) for iv in ivs)
            and ivs[0].hi < ivs[1].lo
            and ivs[1].hi < ivs[2].lo
            and all(iv.width <= Fraction(1, 1 << self.precision_bits) for iv in ivs)
        )

    def to_json(self) -> dict:
        return {
            "a": str(self.param.a),
            "bits": self.precision_bits,
            "alpha": self.intervals[0].to_json(),
            "alpha1": self.intervals[1].to_json(),
            "alpha2": self.intervals[2].to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootEnclosure":
        ivs = tuple(Interval.from_json(data[k]) for k in ("alpha", "alpha1", "alpha2"))
        return cls(FieldParam(int(data["a"])), ivs, int(data["bits"]))


@lru_cache(maxsize=512)
def isolate_roots(param: FieldParam, precision_bits: int = DEFAULT_BITS) -> RootEnclosure:
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    seeds = seed_intervals(param)
    enc = RootEnclosure(param, seeds, 0).refine(precision_bits)
    # a seed may already be narrow enough; record the requested precision
    return RootEnclosure(param, enc.intervals, precision_bits)


def embed(x: RingElt, enc: RootEnclosure, k: int = 0) -> Interval:
    if x.param != enc.param:
        raise ValueError(f"parameter mismatch: {x.param!r} vs {enc.param!r}")
    return x.r + x.s * enc.root(k) + x.t * enc.root(k + 1)


def refine_until(
    enc: RootEnclosure,
    decide: Callable[[RootEnclosure], Optional[T]],
    max_bits: int = MAX_BITS,
) -> tuple[T, RootEnclosure]:
    """Call ``decide`` at doubling precision until it returns a non-None value."""
    bits = max(enc.precision_bits, 1)
    while True:
        result = decide(enc)
        if result is not None:
            return result, enc
        if bits >= max_bits:
            raise PrecisionExhausted(f"undecided at {bits} bits (a={enc.param.a})")
        bits = min(2 * bits, max_bits)
        enc = enc.refine(bits)


@dataclass
class BracketReport:
    a: int
    results: dict[str, bool]
    bits_used: int

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def to_json(self) -> dict:
        return {"a": str(self.a), "bits": self.bits_used, "passed": self.passed,
                "results": self.results}


def _both(*vals):
    if any(v is False for v in vals):
        return False
    if all(v is True for v in vals):
        return True
    return None


def bracket_predicates(param: FieldParam) -> dict[str, Callable[[RootEnclosure], Optional[bool]]]:
    a = Fraction(param.a)
    br = standard_brackets(param)

    def inside(k):
        return lambda e: True if e.root(k).inside_open(br[k].lo, br[k].hi) else (
            False if e.root(k).hi <= br[k].lo or e.root(k).lo >= br[k].hi else None)

    def d01(e):
        return abs(e.root(0) - e.root(1))

    def d12(e):
        return abs(e.root(1) - e.root(2))

    def d20(e):
        return abs(e.root(2) - e.root(0))

    return {
        "alpha in (-1-1/a, -1-1/(2a))": inside(0),
        "alpha' in (-1/(a+2), -1/(a+3))": inside(1),
        "alpha'' in (a+1, a+1+2/a)": inside(2),
        "|alpha-alpha'| < 1+1/a": lambda e: d01(e).lt(1 + 1 / a),
        "|alpha'-alpha''| < a+1+3/a": lambda e: d12(e).lt(a + 1 + 3 / a),
        "|alpha''-alpha| < a+2+3/a": lambda e: d20(e).lt(a + 2 + 3 / a),
        "sum < 2a+4+7/a": lambda e: (d01(e) + d12(e) + d20(e)).lt(2 * a + 4 + 7 / a),
        "sum < 2a+5": lambda e: (d01(e) + d12(e) + d20(e)).lt(2 * a + 5),
        "a+2 < |1/alpha'| < a+3": lambda e: _both(
            abs(e.root(1).inverse()).gt(a + 2), abs(e.root(1).inverse()).lt(a + 3)),
        "a+1 < |alpha''| < a+2": lambda e: _both(
            abs(e.root(2)).gt(a + 1), abs(e.root(2)).lt(a + 2)),
    }


def verify_bracket_inequalities(enc: RootEnclosure) -> BracketReport:
    if enc.param.a < 7:
        raise ValueError("the bracket inequalities are stated for a >= 7")
    results = {}
    bits = enc.precision_bits
    for name, pred in bracket_predicates(enc.param).items():
        verdict, used = refine_until(enc, pred)
        results[name] = verdict
        bits = max(bits, used.precision_bits)
    return BracketReport(enc.param.a, results, bits)
