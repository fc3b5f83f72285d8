from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions, nonzero_fractions
from umbra.errors import DimensionError, PreconditionError
from umbra.series1d import (
    PowerSeries1D,
    abel_delta_series,
    abel_inverse_series,
    exp_series,
    expm1_series,
    geometric_ratio_series,
    identity_series,
    log1p_series,
    ps_comp_inverse,
    ps_compose,
    ps_mul,
    ps_reciprocal,
)

N = 6


def ser(*cs, degree=N):
    return PowerSeries1D.from_coeffs(cs, degree)


delta_series = st.tuples(nonzero_fractions, st.lists(fractions, min_size=N - 1, max_size=N - 1)).map(
    lambda t: PowerSeries1D((F(0), t[0], *t[1])))
unit_series = st.tuples(nonzero_fractions, st.lists(fractions, min_size=N, max_size=N)).map(
    lambda t: PowerSeries1D((t[0], *t[1])))
any_series = st.lists(fractions, min_size=N + 1, max_size=N + 1).map(lambda cs: PowerSeries1D(tuple(cs)))
zero_const = any_series.map(lambda s: PowerSeries1D((F(0),) + s.coeffs[1:]))


def test_products():
    assert ps_mul(ser(1, 1), ser(1, -1)) == ser(1, 0, -1)
    assert ps_mul(PowerSeries1D((F(1),) * (N + 1)), ser(1, -1)) == ser(1)
    half = ser(0, 1, F(1, 2))
    assert ps_mul(half, half) == ser(0, 0, 1, 1, F(1, 4))


def test_compositions():
    assert ps_compose(exp_series(N), ser(0)) == ser(1)
    assert ps_compose(log1p_series(N), expm1_series(N)) == identity_series(N)
    assert ps_compose(ser(0, 0, 1), ser(0, 1, 1)) == ser(0, 0, 1, 2, 1)


def test_inverses():
    assert ps_comp_inverse(identity_series(N)) == identity_series(N)
    assert ps_comp_inverse(ser(0, 1, F(1, 2), F(1, 6), F(1, 24), degree=4)) == ser(0, 1, F(-1, 2), F(1, 3), F(-1, 4), degree=4)
    assert ps_comp_inverse(geometric_ratio_series(1, N)) == ser(0, 1, -1, 1, -1, 1, -1)
    assert ps_comp_inverse(abel_delta_series(2, N)) == abel_inverse_series(2, N)


def test_reciprocals():
    assert ps_reciprocal(ser(1)) == ser(1)
    assert ps_reciprocal(ser(1, 1)) == ser(1, -1, 1, -1, 1, -1, 1)
    assert ps_reciprocal(ser(2, 1, degree=3)) == ser(F(1, 2), F(-1, 4), F(1, 8), F(-1, 16), degree=3)


def test_preconditions():
    with pytest.raises(PreconditionError) as err:
        ps_comp_inverse(ser(0, 0, 1))
    assert err.value.precondition == "zero-linear-coefficient"
    with pytest.raises(PreconditionError):
        ps_comp_inverse(ser(1, 1))
    with pytest.raises(PreconditionError) as err:
        ps_reciprocal(ser(0, 1))
    assert err.value.precondition == "zero-constant-term"
    with pytest.raises(PreconditionError):
        ps_compose(exp_series(N), ser(1, 1))
    with pytest.raises(DimensionError):
        ps_mul(ser(1, degree=2), ser(1, degree=3))


def test_json_round_trip():
    s = ser(0, 1, F(-1, 2), F(1, 3))
    obj = s.to_json()
    assert obj == {"degree": N, "coeffs": ["0", "1", "-1/2", "1/3", "0", "0", "0"]}
    assert PowerSeries1D.from_json(obj) == s


def test_divided_powers_round_trip():
    s = expm1_series(5)
    assert s.divided_powers() == (0, 1, 1, 1, 1, 1)
    assert PowerSeries1D.from_divided_powers(s.divided_powers()) == s


@given(delta_series)
def test_compositional_inverse_is_two_sided(q):
    a = ps_comp_inverse(q)
    assert ps_compose(q, a) == identity_series(N)
    assert ps_compose(a, q) == identity_series(N)


@given(any_series, any_series, any_series)
def test_mul_commutative_associative(f, g, h):
    assert ps_mul(f, g) == ps_mul(g, f)
    assert ps_mul(ps_mul(f, g), h) == ps_mul(f, ps_mul(g, h))


@given(any_series, zero_const, zero_const)
def test_compose_associative(r, f, g):
    assert ps_compose(ps_compose(r, f), g) == ps_compose(r, ps_compose(f, g))


@given(unit_series)
def test_reciprocal_involution(f):
    assert ps_reciprocal(ps_reciprocal(f)) == f
    assert ps_mul(f, ps_reciprocal(f)) == ser(1)
