from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import seeds
from umbra import lifted, sampling
from umbra.errors import DimensionError, PreconditionError
from umbra.families import (
    MONOMIAL,
    P_BASIS,
    PolyInBasis,
    ShiftInvariantOp,
    bf_eval_P,
    bf_from_A,
    bf_lower,
    bf_monomial_to_P,
    bf_P_to_monomial,
    bf_shift,
    binomial_identity_holds,
    boole_shift,
    bt3_lowering,
    monomial_family,
    op_apply,
    op_from_action,
    op_invert,
    op_J_product,
    op_shift,
    poly_eval,
    poly_expand,
)
from umbra.symtensor import SymLinearMap, SymTensor, pairing, st_diag_embed, st_eval_power, st_from_power, st_sym_product
from umbra.tenseries import SymToVecMap, identity_vseries, lift
from umbra.series1d import log1p_series

M, N = 2, 4


def mono(*coeffs):
    return PolyInBasis(MONOMIAL, 1, tuple(SymTensor(k, 1, {(k,): c}) for k, c in enumerate(coeffs)))


def in_P(*coeffs):
    return PolyInBasis(P_BASIS, 1, tuple(SymTensor(k, 1, {(k,): c}) for k, c in enumerate(coeffs)))


def vector_poly(v, n, basis=MONOMIAL):
    return PolyInBasis.single(basis, st_from_power(v, n))


@pytest.fixture(scope="module")
def falling1():
    return lifted.falling(1, 5).family


@pytest.fixture(scope="module")
def falling2():
    return lifted.falling(2, 5).family


def test_monomial_family_structure():
    fam = monomial_family(M, N)
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            U = fam.U.get((n, k))
            if k == n:
                assert U == SymLinearMap.identity(n, M)
            else:
                assert U is None or U == SymLinearMap.zero(k, n, M)
    omega = (F(2), F(-1, 3))
    assert all(bf_eval_P(fam, omega, n) == st_from_power(omega, n) for n in range(N + 1))


def test_falling_structure(falling2):
    omega = (F(2), F(1))
    assert falling2.U[(2, 1)].apply(SymTensor.from_vector(omega)) == -st_diag_embed(omega, 2)
    assert bf_eval_P(falling2, omega, 2) == SymTensor.from_sites(2, 2, {(1, 1): 2, (1, 2): 2, (2, 2): 0})
    assert bf_eval_P(falling2, (0, 0), 2).is_zero()


def test_basis_change_examples(falling1):
    t2 = mono(0, 0, 1)
    assert bf_monomial_to_P(falling1, t2).same_as(in_P(0, 1, 1))
    assert bf_P_to_monomial(falling1, in_P(0, 0, 1)).same_as(mono(0, -1, 1))
    const = mono(F(7, 2))
    assert bf_monomial_to_P(falling1, const).same_as(const.relabel(P_BASIS))
    fam = monomial_family(M, N)
    p = sampling.poly(sampling.rng(0), MONOMIAL, M, 3)
    assert bf_monomial_to_P(fam, p).same_as(p.relabel(P_BASIS))


def test_lowering_examples(falling2):
    omega, zeta, xi = (F(1), F(2)), (F(3), F(-1)), (F(1, 2), F(5))
    fam = monomial_family(M, N)
    low = bf_lower(fam, zeta, vector_poly(xi, 2))
    assert poly_eval(fam, low, omega) == 2 * pairing(zeta, xi) * pairing(omega, xi)
    r = sampling.rng(11)
    p = sampling.poly(r, MONOMIAL, M, 4)
    rising = lifted.rising(M, 5).family
    for x in (1, 2):
        d = tuple(F(int(s == x - 1)) for s in range(M))
        plus = tuple(a + b for a, b in zip(omega, d))
        minus = tuple(a - b for a, b in zip(omega, d))
        assert poly_eval(falling2, bf_lower(falling2, d, p), omega) == (
            poly_eval(falling2, p, plus) - poly_eval(falling2, p, omega))
        assert poly_eval(rising, bf_lower(rising, d, p), omega) == (
            poly_eval(rising, p, omega) - poly_eval(rising, p, minus))


def test_lowering_law(falling2):
    xi = (F(2), F(-1, 3))
    for n in range(1, 5):
        p = bf_P_to_monomial(falling2, vector_poly(xi, n, P_BASIS))
        for x in (0, 1):
            d = tuple(F(int(s == x)) for s in range(M))
            expect = bf_P_to_monomial(falling2, vector_poly(xi, n - 1, P_BASIS).scale(n * xi[x]))
            assert bf_lower(falling2, d, p).same_as(expect)


def test_shift_examples(falling2):
    r = sampling.rng(12)
    p = sampling.poly(r, MONOMIAL, M, 4)
    assert bf_shift(falling2, (0, 0), p).same_as(p)
    z, e = sampling.vector(r, M), sampling.vector(r, M)
    s = tuple(a + b for a, b in zip(z, e))
    assert bf_shift(falling2, z, bf_shift(falling2, e, p)).same_as(bf_shift(falling2, s, p))
    omega = sampling.vector(r, M)
    assert poly_eval(falling2, bf_shift(falling2, z, p), omega) == poly_eval(
        falling2, p, tuple(a + b for a, b in zip(omega, z)))
    assert boole_shift(z, p).same_as(bf_shift(falling2, z, p))


def test_operator_examples(falling2):
    r = sampling.rng(13)
    p = sampling.poly(r, P_BASIS, M, 4)
    unit = ShiftInvariantOp.unit(M, 5)
    assert op_apply(unit, falling2, p).same_as(p)
    z = sampling.vector(r, M)
    assert op_apply(op_shift(falling2, z), falling2, p).same_as(bf_shift(falling2, z, p))
    fam = monomial_family(M, 5)
    D = ShiftInvariantOp.lowering(z, 5)
    q = sampling.poly(r, MONOMIAL, M, 4)
    assert op_apply(D, fam, q).same_as(bf_lower(fam, z, q))
    eta = sampling.vector(r, M)
    prod = op_J_product(D, ShiftInvariantOp.lowering(eta, 5))
    two = st_sym_product(SymTensor.from_vector(z), SymTensor.from_vector(eta)).scale(2)
    assert prod.G[2] == two and all(g.is_zero() for k, g in enumerate(prod.G) if k != 2)
    assert op_J_product(unit, D) == D


def test_invert_examples(falling2):
    unit = ShiftInvariantOp.unit(M, 5)
    assert op_invert(unit) == unit
    z = (F(3, 2), F(-2))
    assert op_invert(op_shift(falling2, z)) == op_shift(falling2, (-z[0], -z[1]))
    with pytest.raises(PreconditionError) as err:
        op_invert(ShiftInvariantOp.lowering(z, 5))
    assert err.value.precondition == "T1-nonzero"


def test_non_monic_rejected():
    A = identity_vseries(M, N)
    bad = type(A)(M, (SymToVecMap.diagonal(1, M, 2),) + A.maps[1:])
    with pytest.raises(PreconditionError) as err:
        bf_from_A(bad)
    assert err.value.precondition == "monic-linear-term"


def test_degree_guard(falling2):
    with pytest.raises(DimensionError):
        bf_eval_P(falling2, (1, 1), 6)


def test_family_json(falling2):
    obj = falling2.to_json()
    assert {"A", "B", "U", "R"} <= set(obj)
    assert obj["A"] == lift(log1p_series(5), 2).to_json()
    p = sampling.poly(sampling.rng(3), MONOMIAL, 2, 3)
    assert PolyInBasis.from_json(p.to_json()).same_as(p)


@settings(max_examples=10)
@given(seeds)
def test_random_family_axioms(seed):
    r = sampling.rng(seed)
    fam = bf_from_A(sampling.vector_series(r, M, N, monic=True, density=0.7))
    omega, zeta, xi = (sampling.vector(r, M) for _ in range(3))
    for n in range(N + 1):
        assert binomial_identity_holds(fam, omega, zeta, n)
    one = PolyInBasis.single(MONOMIAL, SymTensor.scalar(1, M))
    assert bf_lower(fam, zeta, one).same_as(PolyInBasis.zero(MONOMIAL, M, 0))
    lin = vector_poly(xi, 1)
    assert bf_lower(fam, zeta, lin).same_as(PolyInBasis.single(MONOMIAL, SymTensor.scalar(pairing(zeta, xi), M)))
    p = sampling.poly(r, MONOMIAL, M, N, density=0.7)
    assert bf_lower(fam, zeta, bf_shift(fam, omega, p)).same_as(bf_shift(fam, omega, bf_lower(fam, zeta, p)))
    assert bt3_lowering(fam, zeta, p).same_as(bf_lower(fam, zeta, p))
    assert poly_expand(fam, p).same_as(bf_monomial_to_P(fam, p))
    assert st_eval_power(bf_eval_P(fam, omega, 0), xi) == 1


@settings(max_examples=10)
@given(seeds)
def test_operator_isomorphism(seed):
    r = sampling.rng(seed)
    fam = bf_from_A(sampling.vector_series(r, M, N, monic=True, density=0.7))
    S = sampling.operator(r, M, N, density=0.7)
    T = sampling.operator(r, M, N, density=0.7)
    p = sampling.poly(r, MONOMIAL, M, N, density=0.7)
    assert op_apply(op_J_product(S, T), fam, p).same_as(op_apply(S, fam, op_apply(T, fam, p)))
    assert op_J_product(S, T) == op_J_product(T, S)
    assert op_from_action(fam, lambda q: op_apply(S, fam, q)) == S
    if S.G[0].value():
        assert op_apply(op_invert(S), fam, op_apply(S, fam, p)).same_as(p)
