from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions, vectors
from umbra import linalg, sampling
from umbra.errors import DimensionError
from umbra.symtensor import (
    SiteSpace,
    SymLinearMap,
    SymTensor,
    annihilate,
    monomial,
    mult,
    multisets,
    pairing,
    st_contract,
    st_diag_embed,
    st_eval_power,
    st_from_power,
    st_mult,
    st_pair,
    st_sym_product,
)


@st.composite
def tensors(draw, order, m):
    return SymTensor(order, m, {c: draw(fractions) for c in multisets(m, order)})


@st.composite
def tensor_pairs(draw, m=2, max_order=3):
    i = draw(st.integers(0, max_order))
    j = draw(st.integers(0, max_order))
    return draw(tensors(i, m)), draw(tensors(j, m))


def e(m, x):
    return tuple(F(int(s == x - 1)) for s in range(m))


def test_multiplicities():
    assert st_mult((1, 1)) == 1
    assert st_mult((1, 2)) == 2
    assert st_mult((1, 2, 2)) == 3
    assert st_mult((2, 1, 2)) == 3


def test_multisets_count():
    # C(m+n-1, n)
    assert [len(multisets(3, n)) for n in range(5)] == [1, 3, 6, 10, 15]


def test_eval_power_examples():
    assert st_eval_power(SymTensor.from_sites(2, 2, {(1, 1): 1}), (3, 5)) == 9
    assert st_eval_power(SymTensor.from_sites(2, 2, {(1, 2): F(1, 2)}), (1, 1)) == 1
    assert st_eval_power(SymTensor.scalar(F(7, 3), 2), (4, 4)) == F(7, 3)


def test_from_power_examples():
    t = st_from_power((2, 1), 2)
    assert (t[1, 1], t[1, 2], t[2, 2]) == (4, 2, 1)
    assert st_from_power((2, 1), 0) == SymTensor.scalar(1, 2)
    assert st_from_power(e(2, 1), 3) == SymTensor.from_sites(3, 2, {(1, 1, 1): 1})


def test_sym_product_examples():
    d12 = st_sym_product(SymTensor.from_vector(e(2, 1)), SymTensor.from_vector(e(2, 2)))
    assert d12 == SymTensor.from_sites(2, 2, {(1, 2): F(1, 2)})
    t = st_from_power((1, 3), 2)
    assert st_sym_product(t, SymTensor.scalar(5, 2)) == t.scale(5)
    w = (F(2), F(-1, 3))
    assert st_sym_product(st_from_power(w, 2), st_from_power(w, 1)) == st_from_power(w, 3)


def test_diag_embed_examples():
    a, b = F(3), F(-2)
    assert st_diag_embed((a, b), 2) == SymTensor.from_sites(2, 2, {(1, 1): a, (2, 2): b})
    assert st_diag_embed((a, b), 1) == SymTensor.from_vector((a, b))
    assert st_diag_embed(e(2, 2), 3) == SymTensor.from_sites(3, 2, {(2, 2, 2): 1})


def test_pair_examples():
    d12 = SymTensor.from_sites(2, 2, {(1, 2): F(1, 2)})
    assert st_pair(d12, d12) == F(1, 2)
    assert st_pair(d12, SymTensor.zero(2, 2)) == 0
    w, x = (F(1), F(2)), (F(-3), F(1, 2))
    assert st_pair(st_from_power(w, 2), st_from_power(x, 2)) == pairing(w, x) ** 2


def test_shape_errors():
    with pytest.raises(DimensionError):
        SymTensor.zero(1, 2) + SymTensor.zero(2, 2)
    with pytest.raises(DimensionError):
        st_contract(SymTensor.zero(1, 2), SymTensor.zero(2, 2))
    with pytest.raises(DimensionError):
        SiteSpace(2, (1,))
    with pytest.raises(ValueError):
        SiteSpace(2, (1, 0))


def test_json_round_trip():
    t = SymTensor.from_sites(2, 3, {(1, 3): F(-5, 2), (2, 2): 1})
    obj = t.to_json()
    assert obj == {"order": 2, "m": 3, "coeffs": {"1,3": "-5/2", "2,2": "1"}}
    assert SymTensor.from_json(obj) == t
    assert list(t.to_json(dense=True)["coeffs"]) == ["1,1", "1,2", "1,3", "2,2", "2,3", "3,3"]


def test_site_space():
    s = SiteSpace(3, (F(1, 2), 2, 1))
    assert s.integral((2, 1, 0)) == 3
    assert s.volume((1, 2)) == F(5, 2)
    assert s.l2((1, 1, 1), (2, 0, 4)) == 5


@given(tensor_pairs(), vectors(2))
def test_eval_homomorphism(pair, xi):
    f, g = pair
    assert st_eval_power(st_sym_product(f, g), xi) == st_eval_power(f, xi) * st_eval_power(g, xi)


@given(tensors(1, 2), tensors(2, 2), tensors(1, 2))
def test_sym_product_commutative_associative_unital(f, g, h):
    assert st_sym_product(f, g) == st_sym_product(g, f)
    assert st_sym_product(st_sym_product(f, g), h) == st_sym_product(f, st_sym_product(g, h))
    assert st_sym_product(f, SymTensor.scalar(1, 2)) == f


def _spanning_points(m, n):
    """Rank-one test vectors whose powers span Sym^n (integer grid, greedy)."""
    cols = multisets(m, n)
    chosen, rows = [], []
    for xi in product(range(n + 1), repeat=m):
        row = [mult(c) * monomial(xi, c) for c in cols]
        if linalg.rank(rows + [row]) > len(rows):
            chosen.append(xi)
            rows.append(row)
        if len(rows) == len(cols):
            return chosen, rows
    raise AssertionError("grid does not span")


@pytest.mark.parametrize("m,n", [(1, 4), (2, 3), (2, 4), (3, 3), (3, 4)])
def test_polarization_determines_tensor(m, n):
    points, rows = _spanning_points(m, n)
    inv = linalg.inverse(rows)
    r = sampling.rng(m * 10 + n)
    for _ in range(3):
        t = sampling.tensor(r, n, m)
        values = [st_eval_power(t, xi) for xi in points]
        solved = linalg.matvec(inv, values)
        assert SymTensor(n, m, dict(zip(multisets(m, n), solved))) == t


@given(tensors(2, 2), tensors(3, 2), vectors(2))
def test_annihilation_is_a_derivation_on_powers(f, g, zeta):
    # A(zeta) xi^n = n <zeta, xi> xi^(n-1) pairs as a derivative
    xi = (F(2), F(-1, 2))
    lhs = st_eval_power(annihilate(zeta, st_from_power(xi, 3)), xi)
    assert lhs == 3 * pairing(zeta, xi) * st_eval_power(st_from_power(xi, 2), xi)
    # annihilation is adjoint to multiplication by zeta, up to the order of g
    assert st_pair(annihilate(zeta, g), f) == 3 * st_pair(g, st_sym_product(SymTensor.from_vector(zeta), f))


@given(st.data())
def test_linear_map_adjoint(data):
    m = 2
    k, n = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    rows = {lam: {a: data.draw(fractions) for a in multisets(m, k)} for lam in multisets(m, n)}
    M = SymLinearMap(k, n, m, rows)
    f = data.draw(tensors(k, m))
    g = data.draw(tensors(n, m))
    assert st_pair(M.apply(f), g) == st_pair(f, M.adjoint().apply(g))
    assert M.adjoint().adjoint() == M


def test_contract_matches_definition():
    G = SymTensor.from_vector((F(1), F(2)))
    f = st_from_power((F(1), F(3)), 3)
    h = st_contract(f, G)
    # h = <G, (1,3)> (1,3)^2 for a power
    assert h == st_from_power((F(1), F(3)), 2).scale(7)
