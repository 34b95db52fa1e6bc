import hypothesis.strategies as st
import pytest
from hypothesis import given

from simplest_cubic.applications import (
    COR1, COR2, REMARK_A1, char_poly_newton, extension_generator_poly, generator, hits_to_csv,
    is_squarefree, non_square_certificate, scan_corollary, sextic_root_check,
)
from simplest_cubic.poly import A, Poly
from simplest_cubic.ring import SYMBOLIC, FieldParam, char_poly, norm


def brute_hits(which, lo, hi):
    """Independent scan: squares by enumeration, squarefree by divisor check."""
    out = []
    squares = {b * b: b for b in range(1, 2000)}
    for a in range(lo, hi + 1):
        q = 2 * a + 3 if which == COR1 else 6 * a + 19
        if q not in squares:
            continue
        m = a * a + 3 * a + 9
        sf = all(m % (d * d) for d in range(2, m) if d * d <= m)
        if sf and (which == COR1 or m > 13):
            out.append(a)
    return out


def test_squarefree_examples():
    assert is_squarefree(13) and not is_squarefree(27) and is_squarefree(79)


def test_cor1_scan_1_30():
    hits = scan_corollary(COR1, 1, 30)
    assert [h.a for h in hits if h.is_hit] == [11, 23]
    h11 = next(h for h in hits if h.a == 11)
    assert (h11.b, h11.m, h11.m_squarefree) == (5, 163, True)
    h3 = next(h for h in hits if h.a == 3)
    assert h3.excluded_reason == "m not squarefree" and h3.m == 27


def test_cor2_scan_1_30():
    hits = {h.a: h for h in scan_corollary(COR2, 1, 30)}
    assert hits[17].is_hit and hits[17].b == 11 and hits[17].m == 349
    assert hits[1].excluded_reason == REMARK_A1
    assert "b is a norm" in hits[1].excluded_reason
    assert hits[5].excluded_reason == "m not squarefree" and hits[5].m == 49


def test_cor1_empty_range():
    assert scan_corollary(COR1, 4, 10) == []


@pytest.mark.parametrize("which", [COR1, COR2])
def test_scans_match_brute_force(which):
    assert [h.a for h in scan_corollary(which, 1, 300) if h.is_hit] == brute_hits(which, 1, 300)


@given(st.sampled_from([COR1, COR2]), st.integers(1, 150), st.integers(0, 150), st.integers(0, 150))
def test_scan_stable_under_splitting(which, lo, k, extra):
    hi = lo + k + extra
    mid = lo + k
    whole = [h.to_json() for h in scan_corollary(which, lo, hi)]
    left = [h.to_json() for h in scan_corollary(which, lo, mid)]
    right = [h.to_json() for h in scan_corollary(which, mid + 1, hi)] if mid < hi else []
    assert whole == left + right


@pytest.mark.parametrize("which", [COR1, COR2])
def test_hit_generators_have_square_norm(which):
    for h in scan_corollary(which, 1, 200):
        if h.is_hit:
            assert norm(generator(FieldParam(h.a), which)) == h.b ** 2


def _compose_cubic(f_coeffs, inner):
    """f(inner(y)) for polynomials in y with Poly coefficients (ascending lists)."""
    def pmul(p, q):
        out = [Poly()] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] = out[i + j] + x * y
        return out

    def padd(p, q):
        n = max(len(p), len(q))
        p = p + [Poly()] * (n - len(p))
        q = q + [Poly()] * (n - len(q))
        return [x + y for x, y in zip(p, q)]

    acc = [Poly()]
    for c in reversed(f_coeffs):
        acc = padd(pmul(acc, inner), [Poly.coerce(c)])
    while len(acc) > 1 and acc[-1] == Poly():
        acc.pop()
    return acc


def test_cor1_sextic_is_f_of_y2_minus_2():
    f = [Poly([-1]), -(A + 3), -A, Poly([1])]
    expected = _compose_cubic(f, [Poly([-2]), Poly(), Poly([1])])
    got = extension_generator_poly(SYMBOLIC, COR1)[0]
    assert got == expected
    assert got[0] == -(2 * A + 3)


def test_newton_identities_match_trace_form_char_poly():
    for which in (COR1, COR2):
        theta = generator(SYMBOLIC, which)
        assert tuple(char_poly_newton(theta)) == tuple(Poly.coerce(c) for c in char_poly(theta))


def test_cor2_constant_term_a7():
    sextic = extension_generator_poly(FieldParam(7), COR2)[0]
    assert abs(sextic[0]) == 61 == 6 * 7 + 19


@given(st.integers(1, 500))
def test_constant_terms(a):
    p = FieldParam(a)
    assert abs(extension_generator_poly(p, COR1)[0][0]) == 2 * a + 3
    assert abs(extension_generator_poly(p, COR2)[0][0]) == 6 * a + 19


@pytest.mark.parametrize("a,which", [(11, COR1), (23, COR1), (17, COR2), (1, COR2), (7, COR2)])
def test_sextic_vanishes_on_sqrt_theta(a, which):
    check = sextic_root_check(FieldParam(a), which, 50)
    assert check.sqrt_enclosure.width <= 2 ** -50
    assert check.contains_zero and check.sign_change


@pytest.mark.parametrize("a,b", [(11, 5), (23, 7)])
def test_non_square_certificate(a, b):
    cert = non_square_certificate(FieldParam(a))
    assert cert.b == b and cert.b_below_threshold and cert.coefficient_gcd == 1
    assert cert.norm_theta == b * b and cert.theorem_verified and cert.holds


def test_non_square_certificate_precondition():
    with pytest.raises(ValueError):
        non_square_certificate(FieldParam(1))


def test_csv_export():
    text = hits_to_csv(scan_corollary(COR1, 1, 30))
    lines = text.strip().splitlines()
    assert lines[0] == "criterion,a,b,m,squarefree,excluded_reason,poly"
    assert lines[2].startswith("cor1,11,5,163,True,,-25 0 42")
