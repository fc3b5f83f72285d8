from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings

from conftest import seeds
from umbra import lifted, oracles, sampling, sheffer
from umbra.errors import DimensionError, PreconditionError
from umbra.families import MONOMIAL, P_BASIS, S_BASIS, PolyInBasis, bf_eval_P, monomial_family, poly_eval
from umbra.series1d import PowerSeries1D, exp_series, half_square_series, log1p_series
from umbra.symtensor import (
    SiteSpace,
    SymTensor,
    annihilate,
    pairing,
    pointwise_power,
    st_eval_power,
    st_from_power,
    st_pair,
)
from umbra.tenseries import ScalarTensorSeries, lift_scalar, ts_compose_1d_scalar

ONE = SiteSpace(1)
TWO = SiteSpace(2, (F(1, 2), F(3)))


def poly_value(fam, name_t, n):
    return fam.S((name_t,), n)[(1,) * n] if n else fam.S((name_t,), 0).value()


def hermite_1d(n, t):
    h0, h1 = F(1), F(t)
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, t * h1 - k * h0
    return h1


def test_unit_tau_gives_basic_sequence():
    base = lifted.falling(2, 4).family
    fam = sheffer.sh_from_tau(base, ScalarTensorSeries.unit(2, 4))
    omega = (F(3), F(-1, 2))
    assert all(fam.S(omega, n) == base.P(omega, n) for n in range(5))
    zero_c = sheffer.sh_lift(log1p_series(4), PowerSeries1D.from_coeffs([0], 4), TWO)
    assert all(zero_c.S(omega, n) == base.P(omega, n) for n in range(5))


def test_appell_with_gaussian_tau_is_hermite():
    tau = ts_compose_1d_scalar(exp_series(4), lift_scalar(half_square_series(4), TWO.weights))
    app = sheffer.appell(tau)
    her = sheffer.hermite(TWO, 4)
    omega = (F(2), F(1, 3))
    assert all(app.S(omega, n) == her.S(omega, n) for n in range(5))


def test_tau_precondition():
    tau = ScalarTensorSeries.unit(2, 3).scale(2)
    with pytest.raises(PreconditionError) as err:
        sheffer.sh_from_tau(monomial_family(2, 3), tau)
    assert err.value.precondition == "tau(0) == 1"


def test_rho_examples():
    xi = (F(2), F(-1))
    her = sheffer.hermite(TWO, 3)
    assert st_eval_power(her.rho[2], xi) == -TWO.integral(pointwise_power(xi, 2))
    ch = sheffer.charlier(TWO, 3)
    assert ch.rho[1] == SymTensor.from_vector(TWO.weights).scale(-1)


def test_one_site_values():
    ch = sheffer.charlier(ONE, 4)
    her = sheffer.hermite(ONE, 6)
    for t in range(-3, 8):
        assert poly_value(ch, t, 2) == t * t - 3 * t + 1
        assert poly_value(her, t, 2) == t * t - 1
        for n in range(7):
            assert poly_value(her, t, n) == hermite_1d(n, t)
    # monic Laguerre for a Gamma law of shape k and Charlier for a Poisson law of mean a
    k = F(3)
    lag = sheffer.laguerre_orthogonal(SiteSpace(1, (k,)), 3)
    cha = sheffer.charlier(SiteSpace(1, (F(2),)), 3)
    for t in range(-2, 5):
        assert poly_value(lag, t, 2) == t * t - 2 * (k + 1) * t + k * (k + 1)
        assert poly_value(cha, t, 2) == t * t - 5 * t + 4


def test_T_round_trip_and_hermite_kappa():
    r = sampling.rng(5)
    her = sheffer.hermite(TWO, 4)
    gauss = sheffer.MeasureSpec(sheffer.GAUSSIAN, TWO)
    assert all(her.kappa[n] == sheffer.moment_tensor(gauss, n) for n in range(5))
    p = sampling.poly(r, S_BASIS, 2, 4)
    Tp = sheffer.sh_T_apply(her, p)
    assert Tp.same_as(p.relabel(P_BASIS))
    assert sheffer.sh_T_inverse_apply(her, Tp).same_as(sheffer.S_to_P(her, p))
    assert sheffer.P_to_S(her, sheffer.S_to_P(her, p)).same_as(p)


def test_charlier_binomial_identity_on_integer_masses():
    ch = sheffer.charlier(TWO, 4)
    r = sampling.rng(7)
    for _ in range(3):
        omega, zeta = sampling.integer_masses(r, 2), sampling.integer_masses(r, 2)
        for n in range(5):
            assert sheffer.sh_binomial_identity_check(ch, omega, zeta, n)


def test_marked_partition_examples():
    omega, xi = (F(2), F(-1)), (F(1, 2), F(3))
    for fam in (sheffer.charlier(TWO, 2), sheffer.laguerre_orthogonal(TWO, 2)):
        d = fam.lifted
        expect = d.alphas[1] * pairing(omega, xi) + d.lambdas[1] * TWO.integral(xi)
        assert sheffer.marked_partition_eval(fam, omega, xi, 1) == expect
    her = sheffer.hermite(TWO, 2)
    assert sheffer.marked_partition_eval(her, omega, xi, 2) == pairing(omega, xi) ** 2 - TWO.integral(
        pointwise_power(xi, 2))
    with pytest.raises(PreconditionError):
        sheffer.marked_partition_eval(sheffer.appell(her.tau), omega, xi, 1)


def test_marked_permutations_for_laguerre():
    lag = sheffer.laguerre_orthogonal(TWO, 4)
    omega, xi = (F(3, 2), F(1)), (F(-1), F(2, 3))
    for n in range(5):
        assert sheffer.marked_permutation_eval(TWO, omega, xi, n) == st_eval_power(lag.S(omega, n), xi)


def test_moments():
    one = SiteSpace(1)
    assert sheffer.measure_moment(sheffer.MeasureSpec(sheffer.GAUSSIAN, one), (1, 1, 1, 1)) == 3
    assert sheffer.measure_moment(sheffer.MeasureSpec(sheffer.POISSON, one), (1, 1)) == 2
    assert sheffer.measure_moment(sheffer.MeasureSpec(sheffer.GAMMA, one), (1, 1)) == 2
    # independent sites multiply
    sp = SiteSpace(2, (F(2), F(1, 2)))
    assert sheffer.measure_moment(sheffer.MeasureSpec(sheffer.POISSON, sp), (1, 2, 2)) == 2 * (F(1, 2) + F(1, 4))
    assert sheffer.measure_moment(sheffer.MeasureSpec(sheffer.GAUSSIAN, sp), (1, 2)) == 0
    with pytest.raises(DimensionError):
        sheffer.measure_moment(sheffer.MeasureSpec(sheffer.GAMMA, sp), (3,))
    with pytest.raises(ValueError):
        sheffer.MeasureSpec("cauchy", sp)


def test_orthogonality_examples():
    ch = sheffer.charlier(ONE, 2)
    pois = sheffer.MeasureSpec(sheffer.POISSON, ONE)
    s1 = PolyInBasis.single(S_BASIS, SymTensor.from_vector((1,)))
    assert sheffer.orth_inner(ch, pois, s1, s1) == 1
    her = sheffer.hermite(TWO, 3)
    gauss = sheffer.MeasureSpec(sheffer.GAUSSIAN, TWO)
    xi = (F(1), F(-2))
    s = TWO.l2(xi, xi)
    f2 = PolyInBasis.single(S_BASIS, st_from_power(xi, 2))
    f1 = PolyInBasis.single(S_BASIS, st_from_power(xi, 1))
    assert sheffer.orth_inner(her, gauss, f2, f2) == 2 * s ** 2
    assert sheffer.orth_inner(her, gauss, f2, f1) == 0
    with pytest.raises(PreconditionError) as err:
        sheffer.orth_inner(her, pois, f1, f1)
    assert err.value.precondition == "matched-measure"


def test_json_dump():
    obj = sheffer.hermite(TWO, 2).to_json()
    assert obj["name"] == "hermite" and len(obj["rho"]) == 3 and len(obj["kappa"]) == 3


@settings(max_examples=6)
@given(seeds)
def test_random_lifted_families(seed):
    r = sampling.rng(seed)
    N, m = 4, 2
    space = SiteSpace(m, tuple(F(r.randint(1, 5), r.randint(1, 3)) for _ in range(m)))
    a = sampling.series1d(r, N, const=0, linear=1)
    c = sampling.series1d(r, N, const=0)
    fam = sheffer.sh_lift(a, c, space, N)
    omega, zeta, xi = (sampling.vector(r, m) for _ in range(3))
    for n in range(N + 1):
        assert sheffer.sh_binomial_identity_check(fam, omega, zeta, n)
        assert sheffer.kappa_inversion_check(fam, omega, n)
        assert sheffer.reciprocity_check(fam, n)
        assert fam.rho[n] == sheffer.rho_from_tau(fam.base, fam.tau)[n]
        value = st_eval_power(fam.S(omega, n), xi)
        assert value == oracles.lifted_generating_coefficient(a, omega, xi, n, c, space.weights)
        assert value == sheffer.marked_partition_eval(fam, omega, xi, n)
    p = sampling.poly(r, S_BASIS, m, N)
    low = sheffer.sh_lower(fam, zeta, p)
    assert low.same_as(PolyInBasis(S_BASIS, m, tuple(annihilate(zeta, f) for f in p.coeffs[1:])))
    # converting through the monomial basis agrees with direct evaluation
    pm = sheffer.sh_to_basis(fam, p, MONOMIAL)
    direct = sum((st_pair(fam.S(omega, k), f) for k, f in enumerate(p.coeffs)), F(0))
    assert poly_eval(fam.base, pm, omega) == direct


def test_charlier_dual_expansions():
    ch = sheffer.charlier(TWO, 5)
    fall = lifted.falling(2, 5).family
    omega, xi = (F(3), F(1, 2)), (F(2), F(-1, 3))
    s = TWO.integral(xi)
    for n in range(6):
        lhs = st_eval_power(ch.S(omega, n), xi)
        assert lhs == sum((comb(n, k) * (-s) ** k * st_eval_power(fall.P(omega, n - k), xi) for k in range(n + 1)), F(0))
        assert st_eval_power(bf_eval_P(fall, omega, n), xi) == sum(
            (comb(n, k) * s ** k * st_eval_power(ch.S(omega, n - k), xi) for k in range(n + 1)), F(0))


def test_cycle_sum_small():
    sp = SiteSpace(1, (F(2),))
    # n=2: identity gives <xi psi>^2, the transposition <(xi psi)^2>
    assert sheffer.cycle_sum(sp, (F(1),), (F(3),), 2) == 36 + 18
    assert sheffer.cycle_sum(sp, (F(1),), (F(3),), 0) == 1
