from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamdeg.piecewise import (
    Exponential,
    Fzip,
    NotSymbolicError,
    PiecewisePoly,
    class_min,
    class_violations,
    fzip,
    pw_equal,
    pw_from_fzip,
    pw_normalize,
    pw_shift,
    pw_subsample,
    restricted_violations,
    shifted,
)
from streamdeg.polynomials import Polynomial

N = PiecewisePoly.from_poly(Polynomial((0, 1)))
SQ = PiecewisePoly.from_poly(Polynomial((0, 0, 1)))


def test_canonical_modulus_collapses():
    p = Polynomial((1, 2))
    f = PiecewisePoly((p, p, p, p))
    assert f.modulus == 1
    g = PiecewisePoly((p, Polynomial((0, 1)), p, Polynomial((0, 1))))
    assert g.modulus == 2


def test_integrality_enforced():
    with pytest.raises(ValueError):
        PiecewisePoly((Polynomial((Q(1, 2),)),))
    # half-integer coefficients are fine when values stay integral
    f = PiecewisePoly((Polynomial((0, Q(1, 2), Q(1, 2))),))
    assert [f.value(n) for n in range(5)] == [0, 1, 3, 6, 10]


def test_values_and_pieces():
    f = PiecewisePoly((Polynomial((0, 1)), Polynomial((1, 2))))
    assert f.value(0) == 0
    assert f.value(1) == 3
    assert f.piece_for(7) == Polynomial((1, 2))
    assert f.value_exact(3) == Q(7)


def test_value_rejects_nonintegral_point():
    f = PiecewisePoly((Polynomial((0, Q(1, 2))),), check_integrality=False)
    assert f.value(2) == 1
    assert f.value_exact(1) == Q(1, 2)
    with pytest.raises(ValueError):
        f.value(1)


def test_pw_shift():
    g = pw_shift(SQ, 2)
    assert [g.value(n) for n in range(4)] == [4, 9, 16, 25]
    h = pw_shift(pw_from_fzip(N, SQ), 1)
    zipped = pw_from_fzip(N, SQ)
    assert all(h.value(n) == zipped.value(n + 1) for n in range(20))
    with pytest.raises(ValueError):
        pw_shift(SQ, -1)


def test_pw_equal_across_moduli():
    p = Polynomial((0, 1))
    f = PiecewisePoly((p,))
    g = PiecewisePoly((p, p.shift_arg(0)), check_integrality=False)
    assert pw_equal(f, g)
    assert not pw_equal(f, SQ)


def test_pw_from_fzip_matches_lazy_fzip():
    z = fzip(N, SQ)
    f = pw_from_fzip(N, SQ)
    assert all(f.value(n) == z.value(n) for n in range(40))
    assert f.modulus == 2


def test_pw_subsample():
    f = pw_from_fzip(N, SQ)
    even = pw_subsample(f, 2, 0)
    odd = pw_subsample(f, 2, 1)
    assert pw_equal(even, N)
    assert pw_equal(odd, SQ)
    assert pw_subsample(SQ, 3, 1).value(2) == 49
    with pytest.raises(ValueError):
        pw_subsample(f, 0, 0)


def test_class_min():
    f = PiecewisePoly((Polynomial((6, -5, 1)),))  # (n-2)(n-3)
    assert class_min(f, 0) == 0
    g = PiecewisePoly((Polynomial((0, 1)), Polynomial((5,))), check_integrality=False)
    assert class_min(g, 1) == 5
    with pytest.raises(ValueError):
        class_min(PiecewisePoly((Polynomial((0, -1)),), check_integrality=False), 0)


def test_restricted_violations():
    p = Polynomial((-4, 0, 1))  # n^2 - 4
    assert restricted_violations(p, 0) == [0, 1]
    assert restricted_violations(p, 1) == [0, 1, 2]
    assert restricted_violations(Polynomial((3,)), 2) == []
    with pytest.raises(ValueError):
        restricted_violations(Polynomial((1,)), 2)
    with pytest.raises(ValueError):
        restricted_violations(Polynomial((0, -1)), 0)


def test_class_violations_indices():
    f = PiecewisePoly((Polynomial((0, 0, 1)), Polynomial((0, 1))))
    assert class_violations(f, 1, 4) == [1, 3]
    assert class_violations(f, 0, 3) == [0]
    with pytest.raises(ValueError, match="class 0"):
        class_violations(PiecewisePoly((Polynomial((1,)),)), 0, 5)


def test_pw_normalize():
    f = PiecewisePoly((Polynomial((-3, 1)),), check_integrality=False)
    g, off = pw_normalize(f)
    assert off == 3
    assert g.value(0) == 0
    same, zero = pw_normalize(N)
    assert zero == 0 and same is N


def test_exponential():
    e = Exponential(3, 2)
    assert [e.value(n) for n in range(4)] == [3, 6, 12, 24]
    assert not e.is_symbolic
    with pytest.raises(NotSymbolicError):
        e.as_piecewise()
    with pytest.raises(ValueError):
        Exponential(0, 2)
    with pytest.raises(ValueError):
        Exponential(1, 1)


def test_fzip_lazy():
    z = Fzip(Exponential(1, 2), N)
    assert [z.value(n) for n in range(6)] == [1, 0, 2, 1, 4, 2]
    assert not z.is_symbolic
    with pytest.raises(NotSymbolicError):
        z.as_piecewise()


def test_shifted_wrapper():
    s = shifted(Exponential(1, 2), 3)
    assert s.value(0) == 8
    assert shifted(N, 2).value(0) == 2
    assert shifted(N, 0) is N


def test_str_round_trip_shape():
    assert str(N) == "poly: n"
    f = pw_from_fzip(N, SQ)
    assert str(f).startswith("pw mod 2 {")


pieces = st.lists(
    st.lists(st.integers(0, 5), min_size=1, max_size=3).map(
        lambda cs: Polynomial(tuple(cs))
    ),
    min_size=1,
    max_size=4,
)


@settings(deadline=None)
@given(pieces, st.integers(0, 8), st.integers(0, 60))
def test_shift_is_evaluation_shift(ps, k, n):
    f = PiecewisePoly(tuple(ps), check_integrality=False)
    assert pw_shift(f, k).value_exact(n) == f.value_exact(n + k)


@settings(deadline=None)
@given(pieces, st.integers(1, 4), st.integers(0, 6), st.integers(0, 40))
def test_subsample_is_evaluation(ps, a, r, n):
    f = PiecewisePoly(tuple(ps), check_integrality=False)
    assert pw_subsample(f, a, r).value_exact(n) == f.value_exact(a * n + r)
