import hypothesis.strategies as st
import pytest
from hypothesis import settings

from simplest_cubic.poly import Poly
from simplest_cubic.ring import SYMBOLIC, FieldParam, RingElt

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-30, max_value=30)
params = st.integers(min_value=1, max_value=60).map(FieldParam)


@st.composite
def concrete_elts(draw, param=None, coeffs=small_ints):
    p = param if param is not None else draw(params)
    return RingElt(draw(coeffs), draw(coeffs), draw(coeffs), p)


@st.composite
def concrete_triples(draw, coeffs=small_ints):
    """Three elements of one random field."""
    p = draw(params)
    return tuple(draw(concrete_elts(param=p, coeffs=coeffs)) for _ in range(3))


polys = st.lists(st.integers(-9, 9), max_size=4).map(Poly)


@st.composite
def symbolic_elts(draw):
    return RingElt(draw(polys), draw(polys), draw(polys), SYMBOLIC)


@pytest.fixture
def a7():
    return FieldParam(7)
