"""Diagonal lifts of one-dimensional binomial sequences and the named families.

A one-dimensional delta series ``a(u)`` with ``a(0) = 0, a'(0) = 1`` lifts to
``A_k = a_k D_k`` where ``D_k f = f(x, ..., x)``. Evaluations along a test
function reduce to sums over set partitions with weights ``alpha_k = a_k k!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .combinatorics import partition_type_count, partition_types, set_partitions
from .config import TENSOR_DEGREE
from .errors import DimensionError, PreconditionError
from .families import BinomialFamily, bf_eval_P, bf_from_A
from .series1d import (
    PowerSeries1D,
    abel_inverse_series,
    as_fraction,
    geometric_ratio_series,
    identity_series,
    log1p_series,
    neg_log1m_series,
    ps_comp_inverse,
)
from .symtensor import (
    ZERO,
    SymTensor,
    exps_to_sites,
    mult,
    multisets,
    pairing,
    pointwise_power,
    st_eval_power,
    st_from_power,
    st_pair,
    st_sym_product,
    vec,
)
from .tenseries import lift


@dataclass(frozen=True)
class LiftedBinomialSpec:
    a: PowerSeries1D
    q: PowerSeries1D  # compositional inverse of a, q(t) = sum b_k t^k / k!
    family: BinomialFamily
    name: str = ""

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        """``alpha_k = a_k k!``."""
        return self.a.divided_powers()

    @property
    def b(self) -> tuple[Fraction, ...]:
        """``b_k = q_k k!``, so that ``B_k = b_k D_k^*``."""
        return self.q.divided_powers()

    @property
    def m(self) -> int:
        return self.family.m

    @property
    def degree(self) -> int:
        return self.family.degree

    def P(self, omega, n) -> SymTensor:
        return bf_eval_P(self.family, omega, n)


def lift_binomial(a: PowerSeries1D, m: int, degree: int | None = None, name: str = "") -> LiftedBinomialSpec:
    N = a.degree if degree is None else degree
    a = a.truncate(N)
    if a.coeffs[0] != 0 or N < 1 or a.coeffs[1] != 1:
        raise PreconditionError("normalized-delta-series", "need a_0 = 0 and a_1 = 1")
    fam = bf_from_A(lift(a, m), name=name)
    return LiftedBinomialSpec(a, ps_comp_inverse(a), fam, name)


# -- named one-dimensional series -------------------------------------------


def falling_series(degree: int) -> PowerSeries1D:
    return log1p_series(degree)


def rising_series(degree: int) -> PowerSeries1D:
    return neg_log1m_series(degree)


def abel_series(alpha, degree: int) -> PowerSeries1D:
    return abel_inverse_series(alpha, degree)


def laguerre_binomial_series(degree: int) -> PowerSeries1D:
    """``u / (1 + u)``, inverse of ``q(u) = u / (1 - u)``."""
    return geometric_ratio_series(-1, degree)


def monomial_series(degree: int) -> PowerSeries1D:
    return identity_series(degree)


def falling(m: int, degree: int = TENSOR_DEGREE) -> LiftedBinomialSpec:
    return lift_binomial(falling_series(degree), m, name="falling")


def rising(m: int, degree: int = TENSOR_DEGREE) -> LiftedBinomialSpec:
    return lift_binomial(rising_series(degree), m, name="rising")


def abel(alpha, m: int, degree: int = TENSOR_DEGREE) -> LiftedBinomialSpec:
    return lift_binomial(abel_series(alpha, degree), m, name=f"abel({as_fraction(alpha)})")


def laguerre_binomial(m: int, degree: int = TENSOR_DEGREE) -> LiftedBinomialSpec:
    return lift_binomial(laguerre_binomial_series(degree), m, name="laguerre-binomial")


def monomials(m: int, degree: int = TENSOR_DEGREE) -> LiftedBinomialSpec:
    return lift_binomial(monomial_series(degree), m, name="monomial")


NAMED_SERIES = {
    "falling": falling_series,
    "charlier-binomial": falling_series,
    "rising": rising_series,
    "laguerre-binomial": laguerre_binomial_series,
    "laguerre_binomial": laguerre_binomial_series,
    "monomial": monomial_series,
}


def named_series(name: str, degree: int, alpha=1) -> PowerSeries1D:
    if name == "abel":
        return abel_series(alpha, degree)
    try:
        return NAMED_SERIES[name](degree)
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


def named(name: str, m: int, degree: int = TENSOR_DEGREE, alpha=1) -> LiftedBinomialSpec:
    label = f"abel({as_fraction(alpha)})" if name == "abel" else name
    return lift_binomial(named_series(name, degree, alpha), m, name=label)


# -- partition evaluators -----------------------------------------------------


def _block_moments(weights_vec: Sequence[Fraction], xi: Sequence[Fraction], n: int) -> list[Fraction]:
    """``<v, xi^k>`` for k = 0..n."""
    return [pairing(weights_vec, pointwise_power(xi, k)) for k in range(n + 1)]


def partition_sum(coef: Sequence[Fraction], moments: Sequence[Fraction], n: int) -> Fraction:
    """``sum_{pi} prod_{B in pi} coef_{|B|} moments_{|B|}`` by explicit set partitions."""
    total = ZERO
    for pi in set_partitions(n):
        term = Fraction(1)
        for block in pi:
            k = len(block)
            term *= coef[k] * moments[k]
            if not term:
                break
        total += term
    return total


def partition_type_sum(coef: Sequence[Fraction], moments: Sequence[Fraction], n: int) -> Fraction:
    """Same sum grouped by block-size type with multinomial counts."""
    total = ZERO
    for j in partition_types(n):
        term = Fraction(partition_type_count(j))
        for k, jk in enumerate(j, start=1):
            if jk:
                term *= (coef[k] * moments[k]) ** jk
        total += term
    return total


def lifted_eval_partition(spec: LiftedBinomialSpec, omega: Sequence, xi: Sequence, n: int,
                          method: str = "enumerate") -> Fraction:
    """``<P^(n)(omega), xi^n> = sum_pi prod_B alpha_|B| <omega, xi^|B|>``."""
    if n > spec.degree:
        raise DimensionError(f"degree {n} exceeds {spec.degree}")
    omega, xi = vec(omega), vec(xi)
    moments = _block_moments(omega, xi, n)
    alphas = spec.alphas
    if method == "enumerate":
        return partition_sum(alphas, moments, n)
    if method == "types":
        return partition_type_sum(alphas, moments, n)
    raise ValueError(f"unknown method {method!r}")


# -- falling and rising factorials ---------------------------------------------


def falling_factorial_product(omega: Sequence, n: int) -> SymTensor:
    """Entry at ``(x_1..x_n)``: ``prod_j (omega(x_j) - #{i < j : x_i = x_j})``."""
    omega = vec(omega)
    m = len(omega)
    coeffs = {}
    for c in multisets(m, n):
        sites = exps_to_sites(c)
        entry = Fraction(1)
        for j, x in enumerate(sites):
            entry *= omega[x - 1] - sum(1 for i in range(j) if sites[i] == x)
            if not entry:
                break
        coeffs[c] = entry
    return SymTensor(n, m, coeffs)


def square_insert(F: SymTensor) -> SymTensor:
    """Tensor of order ``n+1`` pairing with ``xi^{n+1}`` as ``F`` pairs with ``xi^2 (.) xi^{n-1}``."""
    n, m = F.order, F.m
    if n == 0:
        raise DimensionError("need order >= 1")
    out: dict = {}
    for c, v in F.coeffs.items():
        mc = mult(c)
        for s in range(m):
            if c[s] == 0:
                continue
            g = tuple(k + (1 if t == s else 0) for t, k in enumerate(c))
            out[g] = out.get(g, ZERO) + Fraction(c[s] * mc, n) * v
    return SymTensor(n + 1, m, {g: v / mult(g) for g, v in out.items()})


def falling_factorial_recurrence(omega: Sequence, n: int) -> SymTensor:
    """``(omega)_{k+1} = (omega)_k (.) omega - k * square_insert((omega)_k)``."""
    omega = vec(omega)
    m = len(omega)
    cur = SymTensor.scalar(1, m)
    w = SymTensor.from_vector(omega)
    for k in range(n):
        nxt = st_sym_product(cur, w)
        if k >= 1:
            nxt = nxt - square_insert(cur).scale(k)
        cur = nxt
    return cur


def rising_factorial(omega: Sequence, n: int) -> SymTensor:
    """``(omega)^n = (-1)^n (-omega)_n``."""
    return falling_factorial_product(tuple(-x for x in vec(omega)), n).scale((-1) ** n)


def binom_choose(gamma: Sequence[int], n: int) -> SymTensor:
    """``gamma choose n = (gamma)_n / n!``."""
    if any(int(g) != g or g < 0 for g in gamma):
        raise ValueError("a configuration has non-negative integer masses")
    return falling_factorial_product(gamma, n).scale(Fraction(1, factorial(n)))


def simple_choose(gamma: Sequence[int], n: int) -> SymTensor:
    """``sum`` over n-subsets of occupied sites of ``delta_{x_1} (.) ... (.) delta_{x_n}``."""
    m = len(gamma)
    if any(g not in (0, 1) for g in gamma):
        raise ValueError("only simple (0/1) configurations")
    occupied = [s for s in range(m) if gamma[s]]
    acc = SymTensor.zero(n, m)
    for subset in combinations(occupied, n):
        t = SymTensor.scalar(1, m)
        for s in subset:
            t = st_sym_product(t, SymTensor.from_vector(tuple(int(u == s) for u in range(m))))
        acc = acc + t
    return acc


def restrict_to_box(F: SymTensor, box: Iterable[int]) -> Fraction:
    """Mass of ``F`` on ``box^n`` for a set of 1-based sites."""
    inside = {s - 1 for s in box}
    total = ZERO
    for c, v in F.coeffs.items():
        if all(k == 0 or s in inside for s, k in enumerate(c)):
            total += mult(c) * v
    return total


def disjoint_support_check(spec: LiftedBinomialSpec, omega, xi, phi, k: int, n: int) -> bool:
    """``<P^(k+n), xi^k (.) phi^n> == <P^(k), xi^k> <P^(n), phi^n>`` for disjoint supports."""
    xi, phi = vec(xi), vec(phi)
    if any(a * b for a, b in zip(xi, phi)):
        raise PreconditionError("disjoint-supports", "xi and phi overlap")
    lhs_tensor = st_sym_product(st_from_power(xi, k), st_from_power(phi, n))
    lhs = st_pair(spec.P(omega, k + n), lhs_tensor)
    rhs = st_eval_power(spec.P(omega, k), xi) * st_eval_power(spec.P(omega, n), phi)
    return lhs == rhs


# -- binomial Laguerre: sets of ordered blocks ----------------------------------


def ordered_block_sum(omega: Sequence, xi: Sequence, n: int) -> Fraction:
    """``sum`` over sets of ordered blocks of ``{1..n}`` of ``prod_b <-omega, (-xi)^{|b|}>``.

    Each block of a set partition is listed in every one of its internal orders.
    """
    omega, xi = vec(omega), vec(xi)
    neg_omega = tuple(-x for x in omega)
    neg_xi = tuple(-x for x in xi)
    weight = [pairing(neg_omega, pointwise_power(neg_xi, k)) for k in range(n + 1)]
    total = ZERO
    for pi in set_partitions(n):
        for ordered in product(*(permutations(block) for block in pi)):
            total += prod((weight[len(b)] for b in ordered), start=Fraction(1))
    return total
