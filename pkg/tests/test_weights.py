from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamdeg.piecewise import Exponential, PiecewisePoly, pw_equal
from streamdeg.polynomials import Polynomial
from streamdeg.weights import (
    Certificate,
    ProvedSymbolic,
    Refuted,
    VerifiedToDepth,
    Weight,
    WeightTuple,
    certificate_check,
    naturalize,
    tuple_norm,
    weight_product_form,
    weight_product_numeric,
    weight_product_symbolic,
    weight_product_values,
)

N = PiecewisePoly.from_poly(Polynomial((0, 1)))
WS = WeightTuple([[2, 4, 6, 8], [1, 7, 4]])


def test_weight_validation():
    with pytest.raises(ValueError):
        Weight([], 3)
    with pytest.raises(ValueError):
        Weight([1, -1], 0)
    w = Weight([Q(1, 4), 0], Q(-1, 4))
    assert w.span == 2
    assert not w.is_constant
    assert Weight([0, 0], 5).is_constant


def test_weight_apply():
    w = Weight([2, 3], 1)
    assert w.apply([10, 100]) == 321
    with pytest.raises(ValueError):
        w.apply([1, 2, 3])


def test_tuple_validation():
    with pytest.raises(ValueError):
        WeightTuple([])
    with pytest.raises(ValueError):
        WeightTuple([[0, 0, 5], [0, 7]])
    assert WS.norm == 5
    assert tuple_norm(WS) == 5
    assert WS.spans() == (3, 2)
    assert WS.is_natural
    assert len(WS) == 2


def test_str_forms():
    assert str(Weight([Q(1, 4), 0], Q(-1, 4))) == "<1/4,0,-1/4>"
    assert str(WS) == "<<2,4,6,8>, <1,7,4>>"


def test_product_values_golden():
    assert weight_product_values(WS, N, 4) == [24, 35, 84, 75]
    assert [weight_product_numeric(WS, N, n) for n in range(4)] == [24, 35, 84, 75]
    with pytest.raises(ValueError):
        weight_product_numeric(WS, N, -1)


def test_product_accepts_plain_callable():
    assert weight_product_numeric(WS, lambda n: n, 2) == 84


def test_product_form_golden():
    assert weight_product_form(WS, 0) == ({0: 2, 1: 4, 2: 6}, 8)
    assert weight_product_form(WS, 1) == ({3: 1, 4: 7}, 4)
    assert weight_product_form(WS, 2) == ({5: 2, 6: 4, 7: 6}, 8)
    # zero coefficients stay visible in the consumed window
    form, _ = weight_product_form(WeightTuple([[1, 0, 2, 0]]), 0)
    assert form == {0: 1, 1: 0, 2: 2}


def test_product_symbolic_golden():
    g = weight_product_symbolic(WS, N)
    assert g.modulus == 2
    assert g.pieces[0] == Polynomial((24, 30))
    assert g.pieces[1] == Polynomial((15, 20))
    with pytest.raises(TypeError):
        weight_product_symbolic(WS, Exponential(1, 2))


def test_naturalize():
    ws = WeightTuple([[Q(1, 4), 0, Q(-1, 4)]])
    scaled, scale = naturalize(ws)
    assert scale == 4
    assert scaled.to_lists() == [[1, 0, -1]]
    same, one = naturalize(WS)
    assert one == 1 and same is WS


def test_certificate_symbolic_proved():
    image = PiecewisePoly(
        (Polynomial((24, 30)), Polynomial((15, 20))), check_integrality=False
    )
    cert = Certificate(source=N, target=image, weights=WS)
    assert isinstance(certificate_check(cert), ProvedSymbolic)


def test_certificate_symbolic_refuted():
    off = PiecewisePoly(
        (Polynomial((25, 30)), Polynomial((15, 20))), check_integrality=False
    )
    got = certificate_check(Certificate(source=N, target=off, weights=WS))
    assert got == Refuted(0)


def test_certificate_pointwise():
    ident = WeightTuple([[1, 0]])
    cert = Certificate(source=Exponential(1, 2), target=Exponential(1, 2), weights=ident)
    assert certificate_check(cert) == VerifiedToDepth(256)
    assert certificate_check(cert, depth=32) == VerifiedToDepth(32)
    bad = Certificate(source=Exponential(1, 2), target=Exponential(1, 3), weights=ident)
    assert certificate_check(bad) == Refuted(1)


def test_certificate_shift_validation():
    cert = Certificate(source=N, target=N, weights=WeightTuple([[1, 0]]), m0=-1)
    with pytest.raises(ValueError):
        certificate_check(cert)


def test_certificate_shifts_used():
    # f(n+2) = <1,0> (x) f(n+2) phrased with both shifts
    cert = Certificate(source=N, target=N, weights=WeightTuple([[1, 0]]), m0=2, n0=2)
    assert isinstance(certificate_check(cert), ProvedSymbolic)


coeff = st.fractions(min_value=0, max_value=6, max_denominator=4)
const = st.fractions(min_value=-6, max_value=6, max_denominator=4)
weight = st.tuples(st.lists(coeff, min_size=1, max_size=3), const).map(
    lambda t: Weight(t[0], t[1])
)
tuples = (
    st.lists(weight, min_size=1, max_size=3)
    .filter(lambda ws: not all(w.is_constant for w in ws))
    .map(WeightTuple)
)
pieces = st.lists(
    st.lists(st.integers(0, 4), min_size=1, max_size=3).map(
        lambda cs: Polynomial(tuple(cs))
    ),
    min_size=1,
    max_size=3,
)


@settings(deadline=None)
@given(tuples, pieces, st.integers(0, 14))
def test_symbolic_matches_numeric(ws, ps, n):
    f = PiecewisePoly(tuple(ps), check_integrality=False)
    g = weight_product_symbolic(ws, f)
    assert g.value_exact(n) == weight_product_numeric(ws, f, n)


@settings(deadline=None)
@given(tuples, pieces)
def test_values_match_forms(ws, ps):
    f = PiecewisePoly(tuple(ps), check_integrality=False)
    vals = weight_product_values(ws, f, 6)
    for n, v in enumerate(vals):
        form, c = weight_product_form(ws, n)
        assert sum(a * f.value_exact(i) for i, a in form.items()) + c == v


@settings(deadline=None)
@given(tuples, pieces, st.integers(0, 10))
def test_naturalize_scales_outputs(ws, ps, n):
    f = PiecewisePoly(tuple(ps), check_integrality=False)
    scaled, scale = naturalize(ws)
    assert weight_product_numeric(scaled, f, n) == scale * weight_product_numeric(
        ws, f, n
    )
