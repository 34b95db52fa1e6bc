from fractions import Fraction
from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given

from simplest_cubic.embeddings import embed, isolate_roots
from simplest_cubic.poly import A, Poly
from simplest_cubic.ring import (
    NORM_FORM, SYMBOLIC, FieldParam, ParameterMismatch, RingElt, add, alpha, alpha1, alpha2,
    associated, char_poly, conjugate, divide_exact, elt, is_unit, mul, norm, norm_form, one, trace,
    verify_symbolic_identities,
)

from conftest import concrete_elts, concrete_triples, params, symbolic_elts

S = SYMBOLIC


def sym(r, s, t):
    return RingElt(r, s, t, S)


# -- worked examples ----------------------------------------------------------

def test_field_param():
    p = FieldParam(7)
    assert p.m == 79 and p.threshold == 17
    assert p.squarefree_m
    assert not FieldParam(3).squarefree_m
    with pytest.raises(ValueError):
        FieldParam(0)


def test_add_examples(a7):
    assert add(elt(1, 0, 0, a7), elt(0, 1, 0, a7)) == elt(1, 1, 0, a7)
    assert add(elt(2, -1, 3, a7), elt(-2, 1, -3, a7)) == elt(0, 0, 0, a7)
    assert add(sym(A, 0, 0), sym(3, 0, 0)) == sym(A + 3, 0, 0)


def test_parameter_mismatch():
    with pytest.raises(ParameterMismatch):
        add(alpha(FieldParam(1)), alpha(FieldParam(2)))
    with pytest.raises(ParameterMismatch):
        mul(alpha(FieldParam(1)), alpha(S))


def test_multiplication_rules():
    al, al1 = alpha(S), alpha1(S)
    assert al * al == sym(A + 2, A, -1)
    assert al * al1 == sym(-1, -1, 0)
    assert al1 * al1 == sym(2, 1, A + 1)


def test_alpha1_squared_rule_by_intervals(a7):
    # the derived rule for alpha'^2, confirmed on the real roots
    enc = isolate_roots(a7, 80)
    sq = alpha1(a7) * alpha1(a7)
    assert sq == elt(2, 1, 8, a7)
    root = enc.root(1)
    exact_square = root * root
    got = embed(sq, enc, 0)
    assert got.lo <= exact_square.hi and exact_square.lo <= got.hi
    assert got.width < Fraction(1, 2 ** 70)


def test_conjugate_examples():
    assert conjugate(sym(0, 1, 0)) == sym(0, 0, 1)
    assert conjugate(sym(0, 0, 1)) == sym(A, -1, -1)


def test_conjugate_matches_roots(a7):
    # sigma(alpha') should land on alpha''
    enc = isolate_roots(a7, 80)
    iv = embed(conjugate(alpha1(a7)), enc, 0)
    assert iv.lo <= enc.root(2).hi and enc.root(2).lo <= iv.hi


def test_alpha_conjugates_are_the_roots_of_f():
    # alpha' = -(alpha+1)/alpha and alpha'' = -1/(alpha+1)
    al, al1, al2 = alpha(S), alpha1(S), alpha2(S)
    assert al * al1 == -(al + 1)
    assert al2 * (al + 1) == -one(S)
    for x in (al, al1, al2):
        assert x * x * x - A * x * x - (A + 3) * x - 1 == RingElt(0, 0, 0, S)


@pytest.mark.parametrize("coeffs,expected", [
    ((-1, 1, 0), 2 * A + 3),
    ((1, 2, 0), -(2 * A + 3)),
    ((5, 0, 0), Poly([125])),
    ((-A, 1, 0), A * A + 3 * A + 1),
])
def test_norm_examples(coeffs, expected):
    x = sym(*coeffs)
    assert norm(x) == expected
    assert norm_form(x) == expected


def test_norm_of_rational_integer():
    assert norm(sym(A + 1, 0, 0)) == (A + 1) ** 3


def test_trace_examples():
    assert trace(sym(1, 0, 0)) == 3
    assert trace(sym(0, 1, 0)) == A
    x = sym(0, 1, 0)
    assert trace(x) == add(add(x, conjugate(x, 1)), conjugate(x, 2)).r
    assert trace(sym(-1, 1, 0)) == A - 3


def test_divide_exact_examples(a7):
    x = elt(3, -2, 5, a7)
    assert divide_exact(x, one(a7)) == x
    prod = alpha(a7) * elt(-1, 1, 0, a7)
    assert divide_exact(prod, elt(-1, 1, 0, a7)) == alpha(a7)


def test_divide_exact_not_divisible_brute_force(a7):
    x, y = elt(-1, 1, 0, a7), elt(2, 1, 0, a7)
    assert norm(x) == norm(y) == 17
    assert divide_exact(x, y) is None
    # brute force: nothing small multiplies y to x
    for r, s, t in product(range(-4, 5), repeat=3):
        assert elt(r, s, t, a7) * y != x


def test_divide_by_zero(a7):
    with pytest.raises(ZeroDivisionError):
        divide_exact(one(a7), elt(0, 0, 0, a7))


def test_is_unit_examples(a7):
    assert is_unit(alpha(a7))
    assert is_unit(elt(1, 1, 0, a7))
    assert not is_unit(elt(-1, 1, 0, a7))


def test_associated_examples(a7):
    am1 = elt(-1, 1, 0, a7)
    assert associated(elt(2, 1, 0, a7), conjugate(am1, 2))
    assert associated(am1, alpha(a7) * am1)
    assert not associated(am1, elt(2, 0, 0, a7))
    with pytest.raises(ZeroDivisionError):
        associated(am1, elt(0, 0, 0, a7))


def test_char_poly_of_alpha_is_f():
    assert char_poly(alpha(S)) == (Poly([-1]), -(A + 3), -A, 1)


def test_json_round_trip(a7):
    x = elt(-12345678901234567890, 2, 3, a7)
    data = x.to_json()
    assert data == {"r": "-12345678901234567890", "s": "2", "t": "3", "a": "7"}
    assert RingElt.from_json(data) == x
    y = sym(A + 1, -2, A * A)
    assert y.to_json()["s"] == ["-2"]
    assert RingElt.from_json(y.to_json()) == y


# -- identity suite -------------------------------------------------------------

def test_symbolic_identities_pass():
    report = verify_symbolic_identities()
    assert report.passed, [c for c in report.checks if not c.passed]
    names = {c.name for c in report.checks}
    assert {"determinant", "discriminant", "norm_form", "trace_recovery_t",
            "trace_recovery_s", "trace_recovery_r"} <= names


def test_determinant_relation_value():
    al, al1, al2 = alpha(S), alpha1(S), alpha2(S)
    quad = al * al + al1 * al1 + al2 * al2 - al * al1 - al1 * al2 - al2 * al
    assert quad == sym(A * A + 3 * A + 9, 0, 0)


def test_trace_recovery_instance():
    al1, al2 = alpha1(S), alpha2(S)
    assert trace(al1 * (al1 - al2)) == A * A + 3 * A + 9


def test_norm_form_table_has_ten_monomials():
    assert len(NORM_FORM) == 10
    assert all(sum(k) == 3 for k in NORM_FORM)


# -- properties ----------------------------------------------------------------

@given(concrete_triples())
def test_ring_axioms_concrete(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x * one(x.param) == x
    assert x + RingElt(0, 0, 0, x.param) == x


@given(symbolic_elts(), symbolic_elts(), symbolic_elts())
def test_ring_axioms_symbolic(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(concrete_triples())
def test_sigma_is_an_automorphism_of_order_three(xyz):
    x, y, _ = xyz
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    assert conjugate(x + y) == conjugate(x) + conjugate(y)
    assert conjugate(x, 3) == x
    assert conjugate(conjugate(x), 2) == x


@given(symbolic_elts(), symbolic_elts())
def test_sigma_symbolic(x, y):
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    assert conjugate(x, 3) == x


@given(concrete_triples())
def test_norm_multiplicative_trace_additive(xyz):
    x, y, _ = xyz
    assert norm(x * y) == norm(x) * norm(y)
    assert trace(x + y) == trace(x) + trace(y)
    for k in range(3):
        assert trace(conjugate(x, k)) == trace(x)
        assert norm(conjugate(x, k)) == norm(x)


@given(concrete_elts())
def test_norm_paths_agree_concrete(x):
    assert norm(x) == norm_form(x)


@given(symbolic_elts())
def test_norm_paths_agree_symbolic(x):
    assert norm(x) == norm_form(x)


@given(concrete_triples(coeffs=st.integers(-6, 6)))
def test_divide_exact_round_trip(xyz):
    x, y, _ = xyz
    if norm(y) == 0:
        return
    prod = x * y
    assert divide_exact(prod, y) == x
    q = divide_exact(x, y)
    if q is not None:
        assert q * y == x


def _units(param):
    al, al2 = alpha(param), alpha2(param)
    return [s * al ** i * al2 ** j for s in (1, -1) for i in range(-2, 3) for j in range(-2, 3)]


@given(st.data())
def test_associated_is_an_equivalence(data):
    param = FieldParam(data.draw(st.integers(1, 8)))
    units = _units(param)
    x = data.draw(concrete_elts(param=param, coeffs=st.integers(-5, 5)))
    if x.is_zero():
        return
    u = data.draw(st.sampled_from(units))
    v = data.draw(st.sampled_from(units))
    y, z = x * u, x * u * v
    assert associated(x, x)
    assert associated(x, y) and associated(y, x)
    assert associated(y, z) and associated(x, z)


@given(st.data())
def test_integer_times_unit_is_associated_to_integer(data):
    param = data.draw(params)
    k = data.draw(st.integers(-40, 40).filter(bool))
    u = data.draw(st.sampled_from(_units(param)))
    assert associated(k * u, RingElt(k, 0, 0, param))
