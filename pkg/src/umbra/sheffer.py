"""Sheffer sequences over a binomial family, lifted Sheffer families and orthogonality.

A Sheffer family is fixed by a binomial family (series ``A``) and a scalar
series ``tau`` with ``tau(0) = 1``; its generating function is
``exp<omega, A(xi)> / tau(A(xi))``. Two exponential sequences carry it:
``kappa`` (expansion of ``tau(A(xi))``) and ``rho`` (of ``1/tau(A(xi))``), and
``S^(n)(omega) = sum_k C(n,k) rho^(k) (.) P^(n-k)(omega)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from .combinatorics import double_factorial_odd, permutations_with_cycles, set_partitions, stirling2
from .config import TENSOR_DEGREE
from .errors import DimensionError, PreconditionError
from .families import (
    MONOMIAL,
    P_BASIS,
    S_BASIS,
    BinomialFamily,
    PolyInBasis,
    ShiftInvariantOp,
    bf_eval_P,
    bf_monomial_to_P,
    bf_P_to_monomial,
    lower_P_coeffs,
    monomial_family,
    op_apply_P,
)
from .lifted import lift_binomial
from .series1d import (
    PowerSeries1D,
    exp_series,
    expm1_series,
    geometric_ratio_series,
    half_square_series,
    identity_series,
    log1p_series,
    neg_log1m_series,
    ps_compose,
)
from .symtensor import (
    ZERO,
    SiteSpace,
    SymTensor,
    multisets,
    pairing,
    pointwise_power,
    st_diag_embed,
    st_pair,
    st_sym_product,
    tsum,
    vec,
)
from .tenseries import (
    ScalarTensorSeries,
    lift_scalar,
    ts_compose_1d_scalar,
    ts_scalar_reciprocal,
    ts_scalar_vector_compose,
)


@dataclass(frozen=True)
class LiftedData:
    """One-dimensional data behind a lifted Sheffer family."""

    a: PowerSeries1D
    c: PowerSeries1D
    lam: PowerSeries1D  # lambda(u) = -c(a(u))
    space: SiteSpace

    @property
    def alphas(self):
        return self.a.divided_powers()

    @property
    def lambdas(self):
        return self.lam.divided_powers()


@dataclass(frozen=True)
class ShefferFamily:
    base: BinomialFamily
    tau: ScalarTensorSeries  # slot k holds tau^(k)/k!
    rho: tuple[SymTensor, ...]
    kappa: tuple[SymTensor, ...]
    name: str = ""
    lifted: LiftedData | None = None

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def degree(self) -> int:
        return self.base.degree

    def tau_tensor(self, k: int) -> SymTensor:
        """``tau^(k)`` without the ``1/k!``."""
        return self.tau.terms[k].scale(factorial(k))

    def S(self, omega, n) -> SymTensor:
        return sh_eval_S(self, omega, n)

    def basis_tensor(self, basis: str, omega: Sequence, k: int) -> SymTensor:
        if basis == S_BASIS:
            return sh_eval_S(self, omega, k)
        return self.base.basis_tensor(basis, omega, k)

    def kappa_op(self) -> ShiftInvariantOp:
        return ShiftInvariantOp(self.m, self.kappa)

    def rho_op(self) -> ShiftInvariantOp:
        return ShiftInvariantOp(self.m, self.rho)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "m": self.m,
            "degree": self.degree,
            "tau": self.tau.to_json(),
            "rho": [t.to_json() for t in self.rho],
            "kappa": [t.to_json() for t in self.kappa],
        }


def _exp_slots(F: ScalarTensorSeries) -> tuple[SymTensor, ...]:
    return tuple(t.scale(factorial(k)) for k, t in enumerate(F.terms))


def kappa_from_tau(base: BinomialFamily, tau: ScalarTensorSeries) -> tuple[SymTensor, ...]:
    return _exp_slots(ts_scalar_vector_compose(tau, base.A))


def rho_from_tau(base: BinomialFamily, tau: ScalarTensorSeries) -> tuple[SymTensor, ...]:
    return _exp_slots(ts_scalar_vector_compose(ts_scalar_reciprocal(tau), base.A))


def sh_from_tau(base: BinomialFamily, tau: ScalarTensorSeries, name: str = "") -> ShefferFamily:
    if tau.degree != base.degree or tau.m != base.m:
        raise DimensionError("tau and the base family differ in degree or site count")
    if tau.constant() != 1:
        raise PreconditionError("tau(0) == 1", f"got tau(0) = {tau.constant()}")
    return ShefferFamily(base, tau, rho_from_tau(base, tau), kappa_from_tau(base, tau), name)


def rho_by_partitions(lam: PowerSeries1D, weights: Sequence, n: int) -> SymTensor:
    """``rho^(n) = sum_pi (.)_{B in pi} lambda_|B| D_|B|^* w`` over set partitions of ``{1..n}``."""
    w = vec(weights)
    m = len(w)
    lambdas = lam.divided_powers()
    factors = {k: st_diag_embed(w, k).scale(lambdas[k]) for k in range(1, n + 1)}
    cache: dict[tuple[int, ...], SymTensor] = {}
    acc = SymTensor.zero(n, m) if n else SymTensor.zero(0, m)
    for pi in set_partitions(n):
        sizes = tuple(sorted(len(b) for b in pi))
        t = cache.get(sizes)
        if t is None:
            t = SymTensor.scalar(1, m)
            for k in sizes:
                t = st_sym_product(t, factors[k])
            cache[sizes] = t
        acc = acc + t
    if n == 0:
        return SymTensor.scalar(1, m)
    return acc


def sh_lift(a: PowerSeries1D, c: PowerSeries1D, space: SiteSpace, degree: int | None = None,
            name: str = "") -> ShefferFamily:
    """Lift of the one-dimensional Sheffer pair ``exp[t a(u) - c(a(u))]``."""
    N = a.degree if degree is None else degree
    a, c = a.truncate(N), c.truncate(N)
    if c.coeffs[0] != 0:
        raise PreconditionError("normalized-c-series", "need c_0 = 0")
    spec = lift_binomial(a, space.m, N, name=name)
    lam = -ps_compose(c, a)
    tau = ts_compose_1d_scalar(exp_series(N), lift_scalar(c, space.weights, N))
    rho = tuple(rho_by_partitions(lam, space.weights, n) for n in range(N + 1))
    kappa = kappa_from_tau(spec.family, tau)
    return ShefferFamily(spec.family, tau, rho, kappa, name, LiftedData(a, c, lam, space))


def hermite(space: SiteSpace, degree: int = TENSOR_DEGREE) -> ShefferFamily:
    return sh_lift(identity_series(degree), half_square_series(degree), space, degree, "hermite")


def charlier(space: SiteSpace, degree: int = TENSOR_DEGREE) -> ShefferFamily:
    return sh_lift(log1p_series(degree), expm1_series(degree), space, degree, "charlier")


def laguerre_orthogonal(space: SiteSpace, degree: int = TENSOR_DEGREE) -> ShefferFamily:
    return sh_lift(geometric_ratio_series(-1, degree), neg_log1m_series(degree), space, degree, "laguerre")


def appell(tau: ScalarTensorSeries, name: str = "appell") -> ShefferFamily:
    return sh_from_tau(monomial_family(tau.m, tau.degree), tau, name)


NAMED = {"hermite": hermite, "charlier": charlier, "laguerre": laguerre_orthogonal,
         "laguerre-orthogonal": laguerre_orthogonal, "laguerre_orthogonal": laguerre_orthogonal}


def named(name: str, space: SiteSpace, degree: int = TENSOR_DEGREE) -> ShefferFamily:
    try:
        return NAMED[name](space, degree)
    except KeyError:
        raise ValueError(f"unknown Sheffer family {name!r}") from None


# -- evaluation and basis changes ------------------------------------------------


def sh_eval_S(fam: ShefferFamily, omega: Sequence, n: int) -> SymTensor:
    if n < 0 or n > fam.degree:
        raise DimensionError(f"degree {n} outside 0..{fam.degree}")
    m = fam.m
    terms = []
    for k in range(n + 1):
        r = fam.rho[k]
        if r.is_zero():
            continue
        terms.append(st_sym_product(r, bf_eval_P(fam.base, omega, n - k)).scale(comb(n, k)))
    return tsum(terms, n, m)


def S_to_P(fam: ShefferFamily, p: PolyInBasis) -> PolyInBasis:
    """``<S^(n), f> = sum_k C(n,k) <P^(n-k), contract(f, rho^(k))>``."""
    if p.basis != S_BASIS:
        raise DimensionError("expected an S-basis polynomial")
    return op_apply_P(fam.rho_op(), p.relabel(P_BASIS))


def P_to_S(fam: ShefferFamily, p: PolyInBasis) -> PolyInBasis:
    """``<P^(n), f> = sum_k C(n,k) <S^(n-k), contract(f, kappa^(k))>``."""
    if p.basis != P_BASIS:
        raise DimensionError("expected a P-basis polynomial")
    return op_apply_P(fam.kappa_op(), p).relabel(S_BASIS)


def sh_to_basis(fam: ShefferFamily, p: PolyInBasis, basis: str) -> PolyInBasis:
    if p.basis == basis:
        return p
    if p.basis == S_BASIS:
        hub = S_to_P(fam, p)
    elif p.basis == MONOMIAL:
        hub = bf_monomial_to_P(fam.base, p)
    else:
        hub = p
    if basis == P_BASIS:
        return hub
    if basis == MONOMIAL:
        return bf_P_to_monomial(fam.base, hub)
    return P_to_S(fam, hub)


def sh_T_apply(fam: ShefferFamily, p: PolyInBasis) -> PolyInBasis:
    """``T`` with J-coordinates ``kappa``; the result is in the P basis."""
    return op_apply_P(fam.kappa_op(), sh_to_basis(fam, p, P_BASIS))


def sh_T_inverse_apply(fam: ShefferFamily, p: PolyInBasis) -> PolyInBasis:
    """``T^{-1}`` with J-coordinates ``rho``; the result is in the P basis."""
    return op_apply_P(fam.rho_op(), sh_to_basis(fam, p, P_BASIS))


def sh_lower(fam: ShefferFamily, zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """The family's lowering operator ``Q(zeta)``; keeps the basis of ``p``."""
    low = lower_P_coeffs(zeta, sh_to_basis(fam, p, P_BASIS))
    return sh_to_basis(fam, low, p.basis)


def sh_binomial_identity_check(fam: ShefferFamily, omega, zeta, n: int) -> bool:
    """``S^(n)(omega+zeta) == sum_k C(n,k) S^(k)(omega) (.) P^(n-k)(zeta)``."""
    s = tuple(Fraction(a) + Fraction(b) for a, b in zip(omega, zeta))
    rhs = tsum((st_sym_product(sh_eval_S(fam, omega, k), bf_eval_P(fam.base, zeta, n - k)).scale(comb(n, k))
                for k in range(n + 1)), n, fam.m)
    return sh_eval_S(fam, s, n) == rhs


def kappa_inversion_check(fam: ShefferFamily, omega, n: int) -> bool:
    """``P^(n)(omega) == sum_k C(n,k) kappa^(k) (.) S^(n-k)(omega)``."""
    rhs = tsum((st_sym_product(fam.kappa[k], sh_eval_S(fam, omega, n - k)).scale(comb(n, k))
                for k in range(n + 1)), n, fam.m)
    return bf_eval_P(fam.base, omega, n) == rhs


def reciprocity_check(fam: ShefferFamily, n: int) -> bool:
    """``sum_k C(n,k) kappa^(k) (.) rho^(n-k) == 0`` for ``n >= 1``."""
    acc = tsum((st_sym_product(fam.kappa[k], fam.rho[n - k]).scale(comb(n, k)) for k in range(n + 1)), n, fam.m)
    return acc == (SymTensor.scalar(1, fam.m) if n == 0 else SymTensor.zero(n, fam.m))


# -- combinatorial evaluators ------------------------------------------------------


def marked_partition_eval(fam: "ShefferFamily | LiftedData", omega, xi, n: int) -> Fraction:
    """Sum over set partitions with a +/- mark on each block.

    ``+`` blocks give ``alpha_|B| <omega, xi^|B|>``, ``-`` blocks give ``lambda_|B| <xi^|B|>``.
    """
    data = fam if isinstance(fam, LiftedData) else fam.lifted
    if data is None:
        raise PreconditionError("lifted-family", "marked partitions need a lifted Sheffer family")
    omega, xi = vec(omega), vec(xi)
    alphas, lambdas = data.alphas, data.lambdas
    plus = [alphas[k] * pairing(omega, pointwise_power(xi, k)) for k in range(n + 1)]
    minus = [lambdas[k] * data.space.integral(pointwise_power(xi, k)) for k in range(n + 1)]
    total = ZERO
    for pi in set_partitions(n):
        for marks in product("+-", repeat=len(pi)):
            term = Fraction(1)
            for block, mark in zip(pi, marks):
                term *= plus[len(block)] if mark == "+" else minus[len(block)]
            total += term
    return total


def marked_permutation_eval(space: SiteSpace, omega, xi, n: int) -> Fraction:
    """Orthogonal Laguerre value by a sum over permutations with marked cycles.

    ``+`` cycles give ``|nu| <-omega, (-xi)^|nu|>``, ``-`` cycles give ``<(-xi)^|nu|>``.
    """
    omega, xi = vec(omega), vec(xi)
    neg_omega = tuple(-x for x in omega)
    neg_xi = tuple(-x for x in xi)
    plus = [k * pairing(neg_omega, pointwise_power(neg_xi, k)) for k in range(n + 1)]
    minus = [space.integral(pointwise_power(neg_xi, k)) for k in range(n + 1)]
    total = ZERO
    for _, cyc in permutations_with_cycles(n):
        for marks in product("+-", repeat=len(cyc)):
            term = Fraction(1)
            for nu, mark in zip(cyc, marks):
                term *= plus[len(nu)] if mark == "+" else minus[len(nu)]
            total += term
    return total


# -- measures and moments ------------------------------------------------------------

GAUSSIAN, POISSON, GAMMA = "gaussian", "poisson", "gamma"
MATCHING_MEASURE = {"hermite": GAUSSIAN, "charlier": POISSON, "laguerre": GAMMA}


@dataclass(frozen=True)
class MeasureSpec:
    """Product measure over sites: Gaussian variance ``w_x``, Poisson intensity ``w_x``
    or Gamma with shape ``w_x`` and unit scale."""

    kind: str
    space: SiteSpace

    def __post_init__(self):
        if self.kind not in (GAUSSIAN, POISSON, GAMMA):
            raise ValueError(f"unknown measure {self.kind!r}")


@lru_cache(maxsize=None)
def moment_1d(kind: str, w: Fraction, p: int) -> Fraction:
    if kind == GAUSSIAN:
        return ZERO if p % 2 else double_factorial_odd(p // 2) * w ** (p // 2)
    if kind == POISSON:
        return sum((stirling2(p, j) * w**j for j in range(p + 1)), ZERO)
    if kind == GAMMA:
        return prod((w + i for i in range(p)), start=Fraction(1))
    raise ValueError(kind)


def measure_moment(spec: MeasureSpec, idx: Sequence[int]) -> Fraction:
    """``E[prod_i omega_{idx_i}]`` for 1-based sites."""
    counts = [0] * spec.space.m
    for s in idx:
        if not 1 <= s <= spec.space.m:
            raise DimensionError(f"site {s} outside 1..{spec.space.m}")
        counts[s - 1] += 1
    return prod((moment_1d(spec.kind, w, c) for w, c in zip(spec.space.weights, counts)), start=Fraction(1))


def moment_tensor(spec: MeasureSpec, n: int) -> SymTensor:
    """``E[omega^{(x) n}]``."""
    m = spec.space.m
    return SymTensor(n, m, {c: prod((moment_1d(spec.kind, w, k) for w, k in zip(spec.space.weights, c)),
                                    start=Fraction(1)) for c in multisets(m, n)})


def poly_mul_monomial(p: PolyInBasis, q: PolyInBasis) -> PolyInBasis:
    if p.basis != MONOMIAL or q.basis != MONOMIAL:
        raise DimensionError("pointwise products are formed in the monomial basis")
    d = p.degree + q.degree
    out = []
    for n in range(d + 1):
        terms = [st_sym_product(p.coeffs[i], q.coeffs[n - i]) for i in range(n + 1)
                 if i <= p.degree and n - i <= q.degree]
        out.append(tsum(terms, n, p.m))
    return PolyInBasis(MONOMIAL, p.m, tuple(out))


def expectation(spec: MeasureSpec, p: PolyInBasis) -> Fraction:
    if p.basis != MONOMIAL:
        raise DimensionError("expectation is taken in the monomial basis")
    return sum((st_pair(moment_tensor(spec, n), f) for n, f in enumerate(p.coeffs) if not f.is_zero()), ZERO)


def orth_inner(fam: ShefferFamily, spec: MeasureSpec, p: PolyInBasis, q: PolyInBasis) -> Fraction:
    """``E[p(omega) q(omega)]`` by exact moments of the product measure."""
    expected = MATCHING_MEASURE.get(fam.name)
    if expected is not None and expected != spec.kind:
        raise PreconditionError("matched-measure", f"{fam.name} is orthogonal for {expected}, not {spec.kind}")
    if fam.lifted is not None and fam.lifted.space != spec.space:
        raise PreconditionError("matched-measure", "family and measure use different site weights")
    pm = sh_to_basis(fam, p, MONOMIAL)
    qm = sh_to_basis(fam, q, MONOMIAL)
    return expectation(spec, poly_mul_monomial(pm, qm))


def cycle_sum(space: SiteSpace, xi, psi, n: int) -> Fraction:
    """``sum_{pi in S_n} prod_{cycles nu} <(xi psi)^|nu|>``."""
    prodvec = tuple(Fraction(a) * Fraction(b) for a, b in zip(xi, psi))
    moments = [space.integral(pointwise_power(prodvec, k)) for k in range(n + 1)]
    return sum((prod((moments[len(nu)] for nu in cyc), start=Fraction(1))
                for _, cyc in permutations_with_cycles(n)), ZERO)
