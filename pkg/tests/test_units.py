import math
from fractions import Fraction
from itertools import product

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from simplest_cubic.arith import cbrt_bounds
from simplest_cubic.embeddings import isolate_roots
from simplest_cubic.ring import FieldParam, RingElt, alpha, alpha2, conjugate, is_unit, norm, one
from simplest_cubic.units import (
    UnitWord, coefficient_bound_check, coefficient_bounds, conforms, log_embed, reduce,
    unit_regulator,
)


def float_roots(a):
    return sorted(np.roots([1, -a, -(a + 3), -1]).real)


def float_embeddings(x, a):
    r = float_roots(a)
    return [x.r + x.s * r[k] + x.t * r[(k + 1) % 3] for k in range(3)]


def exhaustive_unit_oracle(gamma, c1, c2, span=6):
    """All (sign, i, j) in a box whose unit puts gamma in the target box (floats)."""
    a = gamma.param.a
    r = float_roots(a)
    g0, g1, _ = float_embeddings(gamma, a)
    hits = []
    for sign, i, j in product((1, -1), range(-span, span + 1), range(-span, span + 1)):
        u0 = abs(r[0]) ** i * abs(r[2]) ** j
        u1 = abs(r[1]) ** i * abs(r[0]) ** j
        x0, x1 = abs(g0) * u0, abs(g1) * u1
        if c1 <= x0 < (a + 3) * c1 and c2 <= x1 < (a + 4) * c2:
            hits.append((sign, i, j))
    return hits


def test_unit_word_materialize():
    p = FieldParam(7)
    assert UnitWord().materialize(p) == one(p)
    u = UnitWord(-1, -2, 3).materialize(p)
    assert is_unit(u)
    assert u * alpha(p) ** 2 == -(alpha2(p) ** 3)
    assert UnitWord.from_json(UnitWord(-1, 2, -5).to_json()) == UnitWord(-1, 2, -5)
    with pytest.raises(ValueError):
        UnitWord(2, 0, 0)


def test_log_embed_examples():
    p = FieldParam(7)
    enc = isolate_roots(p, 64)
    v = log_embed(one(p), enc)
    assert v.first.lo == v.first.hi == 0 and v.second.lo == v.second.hi == 0
    l2 = log_embed(alpha2(p), enc)
    assert l2.first.lo > Fraction(math.log(8)) - Fraction(1, 10 ** 12)
    assert l2.first.hi < Fraction(math.log(8 + 2 / 7))
    with pytest.raises(ValueError):
        log_embed(RingElt(0, 0, 0, p), enc)


@given(st.integers(1, 40), st.integers(-3, 3), st.integers(-3, 3))
def test_log_embed_of_unit_sums_to_zero(a, i, j):
    p = FieldParam(a)
    enc = isolate_roots(p, 64)
    u = alpha(p) ** i * alpha2(p) ** j
    v = log_embed(u, enc)
    third = log_embed(conjugate(u, 2), enc).first
    total = v.first + v.second + third
    assert total.contains(0)


@pytest.mark.parametrize("a", [1, 2, 7, 50])
def test_units_are_independent(a):
    det = unit_regulator(isolate_roots(FieldParam(a), 64))
    assert not det.contains(0)


def test_reduce_identity():
    p = FieldParam(7)
    eta, reduced = reduce(one(p), 1, 1)
    assert eta == UnitWord() and reduced == one(p)


def test_reduce_alpha_matches_oracle():
    p = FieldParam(7)
    gamma = alpha(p)
    eta, reduced = reduce(gamma, 1, 1)
    assert reduced == gamma * eta.materialize(p)
    assert conforms(reduced, 1, 1, isolate_roots(p, 64))
    oracle = exhaustive_unit_oracle(gamma, 1, 1)
    assert (1, eta.i, eta.j) in oracle


def test_reduce_alpha_minus_one_with_cube_root_targets():
    p = FieldParam(7)
    c = cbrt_bounds(Fraction(17, 10), 30)[0]  # rational just below (17/10)^(1/3)
    gamma = alpha(p) - 1
    eta, reduced = reduce(gamma, c, c)
    assert (1, eta.i, eta.j) in exhaustive_unit_oracle(gamma, float(c), float(c))
    assert abs(norm(reduced)) == 17


def test_reduce_rejects_bad_input():
    p = FieldParam(3)
    with pytest.raises(ValueError):
        reduce(RingElt(0, 0, 0, p), 1, 1)
    with pytest.raises(ValueError):
        reduce(one(p), 0, 1)


@given(st.integers(1, 30), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_reduce_conforming_input_is_fixed(a, r, s, t):
    p = FieldParam(a)
    gamma = RingElt(r, s, t, p)
    if norm(gamma) == 0:
        return
    enc = isolate_roots(p, 64)
    eta, reduced = reduce(gamma, 1, 1, enc)
    # reducing the output again is the identity
    eta2, again = reduce(reduced, 1, 1, enc)
    assert eta2 == UnitWord() and again == reduced


@pytest.mark.parametrize("a,n", [(7, 17), (100, 203)])
def test_coefficient_bounds_examples(a, n):
    assert coefficient_bound_check(FieldParam(a), n) == (2, 2)


def test_coefficient_bounds_monotone_in_n():
    p = FieldParam(7)
    small = coefficient_bound_check(p, 1)
    big = coefficient_bound_check(p, 17)
    assert all(x <= 2 for x in small)
    assert all(x <= y for x, y in zip(small, big))


def test_coarse_chain_matches_float_evaluation():
    for a in (7, 8, 20, 300):
        n = 2 * a + 3
        m = a * a + 3 * a + 9
        expected = math.floor(n ** (1 / 3) * (a + 3) ** (2 / 3) * (2 * a + 5) / m)
        assert coefficient_bounds(FieldParam(a), n).coarse_chain == expected


@given(st.integers(7, 10 ** 4))
def test_coefficient_bounds_sweep(a):
    assert max(coefficient_bound_check(FieldParam(a), 2 * a + 3)) <= 2
