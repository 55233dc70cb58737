from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tjurina.gradedlin import monomials_of_wdegree
from tjurina.parsing import parse_polynomial as P
from tjurina.wpoly import (DegenerateVariable, UnderdeterminedWeights, WeightError, WeightSystem,
                           WPolynomial, euler_check, infer_weights, is_weighted_homogeneous,
                           multiplicities, wdeg)


def test_wdeg():
    ws = WeightSystem((3, 2), 6)
    assert wdeg((2, 0), ws) == 6
    assert wdeg((0, 3), ws) == 6
    assert wdeg((0, 0), ws) == 0
    assert wdeg((0, 0, 0), WeightSystem((1, 1, 1), 3)) == 0
    with pytest.raises(ValueError):
        wdeg((1, 1, 1), ws)


def test_partial():
    f = P("x^2 + y^3")
    assert f.partial(0) == P("2*x", 2)
    assert f.partial(1) == P("3*y^2")
    assert P("x^3+y^3+z^3").partial(2) == P("3*z^2", 3)
    with pytest.raises(IndexError):
        f.partial(2)


def test_zero_terms_dropped():
    f = WPolynomial({(1, 0): 1, (0, 1): 0})
    assert len(f) == 1
    assert (f - f).is_zero()
    assert f + WPolynomial({(1, 0): -1}) == WPolynomial.zero(2)


@pytest.mark.parametrize("text, ws, homog", [
    ("x^3+y^3+z^3", ((1, 1, 1), 3), True),
    ("x^2+y^3", ((3, 2), 6), True),
    ("x^2+y^3", ((1, 1), 2), False),
])
def test_homogeneity_and_euler(text, ws, homog):
    f, ws = P(text), WeightSystem(*ws)
    assert is_weighted_homogeneous(f, ws) is homog
    assert euler_check(f, ws) is homog


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        is_weighted_homogeneous(WPolynomial.zero(2), WeightSystem((1, 1), 2))


def test_infer_weights():
    assert infer_weights(P("x^3+y^3+z^3")) == WeightSystem((1, 1, 1), 3)
    # 2 w1 + w2 = 4 w2 = W  gives w = (3, 2), W = 8
    ws = infer_weights(P("x^2*y + y^4"))
    assert ws == WeightSystem((3, 2), 8)
    assert all(wdeg(m, ws) == 8 for m in [(2, 1), (0, 4)])
    assert infer_weights(P("x^2 + x^3")) is None
    with pytest.raises(UnderdeterminedWeights):
        infer_weights(P("x*y"))


def test_normalize():
    ws = WeightSystem.normalize([Fraction(1, 2), Fraction(1, 3)], 1)
    assert ws == WeightSystem((3, 2), 6)
    assert WeightSystem.normalize([2, 2], 4) == WeightSystem((1, 1), 2)
    assert WeightSystem.normalize(ws.weights, ws.total) == ws
    with pytest.raises(WeightError):
        WeightSystem((0, 1), 2)
    with pytest.raises(WeightError):
        WeightSystem((3, 1), 2)


def test_multiplicities():
    m = multiplicities(P("x^2+y^3"), WeightSystem((3, 2), 6))
    assert (m.m0, m.mi, m.mij[0][1], m.c, m.wmax) == (2, (1, 2), 1, 1, 3)
    m = multiplicities(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3))
    assert (m.m0, m.mi, m.c) == (3, (2, 2, 2), 3)
    assert m.mij_list() == (2, 2, 2)
    m = multiplicities(P("x^2+y^2"), WeightSystem((1, 1), 2))
    assert (m.m0, m.mi, m.mij[0][1], m.c) == (2, (1, 1), 1, 2)
    with pytest.raises(DegenerateVariable):
        multiplicities(P("x^2", 2), WeightSystem((1, 1), 2))


def test_corpus_euler_and_roundtrip(corpus_members):
    for text, f, ws in corpus_members:
        assert euler_check(f, ws), text
        assert P(f.format()) == f
        assert P(str(f)) == f


@st.composite
def homogeneous_polys(draw):
    n = draw(st.integers(1, 4))
    weights = tuple(draw(st.lists(st.integers(1, 5), min_size=n, max_size=n)))
    total = draw(st.integers(max(weights), 14))
    ws = WeightSystem(weights, total)
    monos = monomials_of_wdegree(ws, total)
    if not monos:
        return None, ws
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=6, unique=True))
    coeffs = draw(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7)
                           .filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return WPolynomial(dict(zip(chosen, coeffs)), n), ws


@settings(max_examples=150, deadline=None)
@given(homogeneous_polys())
def test_property_euler_identity_and_roundtrip(sample):
    f, ws = sample
    if f is None:
        return
    assert is_weighted_homogeneous(f, ws)
    assert euler_check(f, ws)
    assert P(f.format(), f.nvars) == f


@settings(max_examples=150, deadline=None)
@given(homogeneous_polys())
def test_property_inferred_weights_make_f_homogeneous(sample):
    f, _ = sample
    if f is None:
        return
    try:
        ws = infer_weights(f)
    except UnderdeterminedWeights:
        return
    if ws is not None:
        assert is_weighted_homogeneous(f, ws)
        assert ws.is_normalized
        assert WeightSystem.normalize(ws.weights, ws.total) == ws


def test_arithmetic():
    x, y = WPolynomial.variable(0, 2), WPolynomial.variable(1, 2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert x.mul_monomial((1, 2)) == x * x * y * y
    assert hash(x + y) == hash(y + x)
    assert (x * 0).is_zero()
