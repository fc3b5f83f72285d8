"""Polynomial sequences of binomial type built from a vector series ``A``.

``P^(n)(omega) = sum_k U_{n,k} omega^k`` with
``U_{n,k} = (n!/k!) sum_{i_1+...+i_k=n} Sym(A_{i_1}^* (.) ... (.) A_{i_k}^*)``.
Polynomials are coefficient sequences of test-function tensors in a tagged
basis, and every operator here acts on those coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping, Sequence

from .errors import DimensionError, PreconditionError
from .symtensor import (
    ZERO,
    SymLinearMap,
    SymTensor,
    annihilate,
    mult,
    multisets,
    st_contract,
    st_from_power,
    st_pair,
    st_sym_product,
    tsum,
    vec,
)
from .tenseries import (
    ScalarTensorSeries,
    VectorTensorSeries,
    identity_vseries,
    ts_scalar_reciprocal,
    ts_vector_inverse,
)

MONOMIAL = "monomial"
P_BASIS = "P"
S_BASIS = "S"
BASES = (MONOMIAL, P_BASIS, S_BASIS)


@dataclass(frozen=True)
class PolyInBasis:
    """``p(omega) = sum_k <B^(k)(omega), f^(k)>`` for the basis named by ``basis``."""

    basis: str
    m: int
    coeffs: tuple[SymTensor, ...]

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        coeffs = tuple(self.coeffs)
        for k, f in enumerate(coeffs):
            if f.order != k or f.m != self.m:
                raise DimensionError(f"slot {k} holds order {f.order} on {f.m} sites")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, basis: str, m: int, degree: int) -> "PolyInBasis":
        return cls(basis, m, tuple(SymTensor.zero(k, m) for k in range(degree + 1)))

    @classmethod
    def single(cls, basis: str, f: SymTensor, degree: int | None = None) -> "PolyInBasis":
        """The polynomial ``<B^(n), f>`` for ``f`` of order ``n``."""
        d = f.order if degree is None else degree
        return cls(basis, f.m, tuple(f if k == f.order else SymTensor.zero(k, f.m) for k in range(d + 1)))

    def relabel(self, basis: str) -> "PolyInBasis":
        return PolyInBasis(basis, self.m, self.coeffs)

    def padded(self, degree: int) -> "PolyInBasis":
        if degree < self.degree:
            raise DimensionError("cannot pad to a smaller degree")
        return PolyInBasis(
            self.basis, self.m, self.coeffs + tuple(SymTensor.zero(k, self.m) for k in range(self.degree + 1, degree + 1))
        )

    def trimmed(self) -> "PolyInBasis":
        d = self.degree
        while d > 0 and self.coeffs[d].is_zero():
            d -= 1
        return PolyInBasis(self.basis, self.m, self.coeffs[: d + 1])

    def same_as(self, other: "PolyInBasis") -> bool:
        """Equal basis and equal coefficients up to trailing zeros."""
        a, b = self.trimmed(), other.trimmed()
        return a.basis == b.basis and a.coeffs == b.coeffs

    def __add__(self, other: "PolyInBasis") -> "PolyInBasis":
        if other.basis != self.basis:
            raise DimensionError("cannot add polynomials in different bases")
        d = max(self.degree, other.degree)
        a, b = self.padded(d), other.padded(d)
        return PolyInBasis(self.basis, self.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def scale(self, s) -> "PolyInBasis":
        return PolyInBasis(self.basis, self.m, tuple(f.scale(s) for f in self.coeffs))

    def to_json(self) -> dict:
        return {"basis": self.basis, "m": self.m, "coeffs": [f.to_json() for f in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PolyInBasis":
        return cls(obj["basis"], int(obj["m"]), tuple(SymTensor.from_json(f) for f in obj["coeffs"]))


@dataclass(frozen=True)
class ShiftInvariantOp:
    """A shift-invariant operator in the J-coordinates of a fixed family.

    ``G[k]`` is ``G^(k)``; the associated exponential sequence is ``G^(k)/k!``.
    """

    m: int
    G: tuple[SymTensor, ...]

    def __post_init__(self):
        G = tuple(self.G)
        for k, g in enumerate(G):
            if g.order != k or g.m != self.m:
                raise DimensionError(f"slot {k} holds order {g.order}")
        object.__setattr__(self, "G", G)

    @property
    def degree(self) -> int:
        return len(self.G) - 1

    @classmethod
    def unit(cls, m: int, degree: int) -> "ShiftInvariantOp":
        return cls(m, (SymTensor.scalar(1, m),) + tuple(SymTensor.zero(k, m) for k in range(1, degree + 1)))

    @classmethod
    def lowering(cls, zeta: Sequence, degree: int) -> "ShiftInvariantOp":
        """``Q(zeta)`` of the family the coordinates refer to: ``G^(1) = zeta``."""
        z = vec(zeta)
        m = len(z)
        return cls(m, tuple(
            SymTensor.from_vector(z) if k == 1 else SymTensor.zero(k, m) for k in range(degree + 1)
        ))

    def exponential_series(self) -> ScalarTensorSeries:
        return ScalarTensorSeries(self.m, tuple(g.scale(Fraction(1, factorial(k))) for k, g in enumerate(self.G)))

    @classmethod
    def from_exponential_series(cls, F: ScalarTensorSeries) -> "ShiftInvariantOp":
        return cls(F.m, tuple(t.scale(factorial(k)) for k, t in enumerate(F.terms)))

    def to_json(self) -> dict:
        return {"m": self.m, "G": [g.to_json() for g in self.G]}


@dataclass(frozen=True)
class BinomialFamily:
    """Coefficient maps of one binomial-type sequence.

    ``U[(n, k)]`` maps order-``k`` tensors to order ``n`` on the distribution side,
    ``V[(k, n)] = U[(n, k)]^*`` and ``R[(k, n)]`` act on test-function
    coefficients, and ``B`` is the compositional inverse of ``A``.
    """

    m: int
    degree: int
    A: VectorTensorSeries
    B: VectorTensorSeries
    U: Mapping[tuple[int, int], SymLinearMap]
    V: Mapping[tuple[int, int], SymLinearMap]
    R: Mapping[tuple[int, int], SymLinearMap]
    name: str = ""

    def P(self, omega: Sequence, n: int) -> SymTensor:
        return bf_eval_P(self, omega, n)

    def B_map(self, k: int, zeta: Sequence) -> SymTensor:
        """``B_k zeta``, recovered from the stored slot ``B_k^*/k!``."""
        return self.B[k].adjoint(zeta).scale(factorial(k))

    def basis_tensor(self, basis: str, omega: Sequence, k: int) -> SymTensor:
        if basis == MONOMIAL:
            return st_from_power(omega, k)
        if basis == P_BASIS:
            return bf_eval_P(self, omega, k)
        raise DimensionError(f"a binomial family has no {basis!r} basis")

    def to_json(self) -> dict:
        def arr(d):
            return [{"row": i, "col": j, "map": mp.to_json()} for (i, j), mp in sorted(d.items())]

        return {
            "name": self.name,
            "m": self.m,
            "degree": self.degree,
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "U": arr(self.U),
            "R": arr(self.R),
        }


def _is_identity(A1, m) -> bool:
    return A1.matrix() == [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]


def bf_from_A(A: VectorTensorSeries, name: str = "") -> BinomialFamily:
    m, N = A.m, A.degree
    if N < 1 or not _is_identity(A[1], m):
        raise PreconditionError("monic-linear-term", "A_1 must be the identity")
    kern = A.kernels()
    U: dict[tuple[int, int], SymLinearMap] = {(0, 0): SymLinearMap.identity(0, m)}
    for n in range(1, N + 1):
        U[(n, 0)] = SymLinearMap.zero(0, n, m)
        for k in range(1, n + 1):
            scale = Fraction(factorial(n), factorial(k))
            rows = {}
            for lam in multisets(m, n):
                ker = kern.kernel(k, lam)
                if not ker.is_zero():
                    rows[lam] = {a: scale * mult(a) * v for a, v in ker.coeffs.items()}
            U[(n, k)] = SymLinearMap(k, n, m, rows)
    V = {(k, n): U[(n, k)].adjoint() for (n, k) in U}
    R: dict[tuple[int, int], SymLinearMap] = {}
    for k in range(N + 1):
        R[(k, k)] = SymLinearMap.identity(k, m)
        for n in range(k + 1, N + 1):
            acc = SymLinearMap.zero(n, k, m)
            for j in range(k, n):
                acc = acc + R[(k, j)].compose(V[(j, n)])
            R[(k, n)] = -acc
    return BinomialFamily(m, N, A, ts_vector_inverse(A), U, V, R, name)


def monomial_family(m: int, degree: int) -> BinomialFamily:
    return bf_from_A(identity_vseries(m, degree), name="monomial")


def _check_degree(fam: BinomialFamily, n: int):
    if n < 0 or n > fam.degree:
        raise DimensionError(f"degree {n} outside 0..{fam.degree}")


def bf_eval_P(fam: BinomialFamily, omega: Sequence, n: int) -> SymTensor:
    _check_degree(fam, n)
    omega = vec(omega)
    if len(omega) != fam.m:
        raise DimensionError("distribution length differs from site count")
    if n == 0:
        return SymTensor.scalar(1, fam.m)
    return tsum((fam.U[(n, k)].apply(st_from_power(omega, k)) for k in range(1, n + 1)), n, fam.m)


def poly_eval(fam, p: PolyInBasis, omega: Sequence) -> Fraction:
    """Value of ``p`` at ``omega``; ``fam`` supplies the basis tensors."""
    return sum((st_pair(fam.basis_tensor(p.basis, omega, k), f) for k, f in enumerate(p.coeffs) if not f.is_zero()), ZERO)


def _need_degree(fam: BinomialFamily, p: PolyInBasis):
    if p.degree > fam.degree:
        raise DimensionError(f"polynomial degree {p.degree} exceeds family degree {fam.degree}")
    if p.m != fam.m:
        raise DimensionError("polynomial and family live on different site counts")


def bf_monomial_to_P(fam: BinomialFamily, p: PolyInBasis) -> PolyInBasis:
    if p.basis != MONOMIAL:
        raise DimensionError("expected a polynomial in the monomial basis")
    _need_degree(fam, p)
    d = p.degree
    out = [
        tsum((fam.R[(k, n)].apply(p.coeffs[n]) for n in range(k, d + 1)), k, p.m) for k in range(d + 1)
    ]
    return PolyInBasis(P_BASIS, p.m, tuple(out))


def bf_P_to_monomial(fam: BinomialFamily, p: PolyInBasis) -> PolyInBasis:
    if p.basis != P_BASIS:
        raise DimensionError("expected a polynomial in the P basis")
    _need_degree(fam, p)
    d = p.degree
    out = [
        tsum((fam.V[(k, n)].apply(p.coeffs[n]) for n in range(k, d + 1)), k, p.m) for k in range(d + 1)
    ]
    return PolyInBasis(MONOMIAL, p.m, tuple(out))


def to_P(fam: BinomialFamily, p: PolyInBasis) -> PolyInBasis:
    if p.basis == P_BASIS:
        return p
    if p.basis == MONOMIAL:
        return bf_monomial_to_P(fam, p)
    raise DimensionError("S-basis polynomials need a Sheffer family to convert")


def from_P(fam: BinomialFamily, p: PolyInBasis, basis: str) -> PolyInBasis:
    if basis == P_BASIS:
        return p
    if basis == MONOMIAL:
        return bf_P_to_monomial(fam, p)
    raise DimensionError("S-basis polynomials need a Sheffer family to convert")


def lower_P_coeffs(zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """Annihilation on every slot: slot ``n`` feeds ``A(zeta) f^(n)`` into slot ``n-1``."""
    if p.degree == 0:
        return PolyInBasis(p.basis, p.m, (SymTensor.zero(0, p.m),))
    return PolyInBasis(p.basis, p.m, tuple(annihilate(zeta, f) for f in p.coeffs[1:]))


def bf_lower(fam: BinomialFamily, zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """Lowering operator ``Q(zeta)``; the result keeps the basis of ``p``."""
    return from_P(fam, lower_P_coeffs(zeta, to_P(fam, p)), p.basis)


def shift_monomial_coeffs(zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """``omega -> p(omega + zeta)`` for monomial-basis coefficients.

    Expanding ``(omega + zeta)^n = sum_k C(n,k) omega^k (.) zeta^{n-k}`` sends
    ``C(n,k) <contract(f^(n), zeta^{n-k})>`` into slot ``k``.
    """
    z = vec(zeta)
    d = p.degree
    powers = [st_from_power(z, j) for j in range(d + 1)]
    out = []
    for k in range(d + 1):
        terms = [st_contract(p.coeffs[n], powers[n - k]).scale(comb(n, k)) for n in range(k, d + 1)
                 if not p.coeffs[n].is_zero()]
        out.append(tsum(terms, k, p.m))
    return PolyInBasis(MONOMIAL, p.m, tuple(out))


def bf_shift(fam: BinomialFamily, zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """Shift operator ``E(zeta)``; the result keeps the basis of ``p``."""
    mono = p if p.basis == MONOMIAL else bf_P_to_monomial(fam, p)
    shifted = shift_monomial_coeffs(zeta, mono)
    return shifted if p.basis == MONOMIAL else bf_monomial_to_P(fam, shifted)


def boole_shift(zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """``E(zeta) = sum_j D(zeta)^j / j!`` on monomial-basis coefficients."""
    if p.basis != MONOMIAL:
        raise DimensionError("Boole's formula is applied in the monomial basis")
    acc = p
    term = p
    for j in range(1, p.degree + 1):
        term = lower_P_coeffs(zeta, term).scale(Fraction(1, j))
        acc = acc + term
    return acc.padded(p.degree) if acc.degree < p.degree else acc


def op_apply_P(T: ShiftInvariantOp, p: PolyInBasis) -> PolyInBasis:
    """Operator expansion on P-basis coefficients.

    ``g^(j) = sum_{n >= j} C(n, n-j) contract(f^(n), G^(n-j))``.
    """
    d = p.degree
    if T.degree < d:
        raise DimensionError(f"operator known to degree {T.degree}, polynomial has degree {d}")
    out = []
    for j in range(d + 1):
        terms = []
        for n in range(j, d + 1):
            f, g = p.coeffs[n], T.G[n - j]
            if f.is_zero() or g.is_zero():
                continue
            terms.append(st_contract(f, g).scale(comb(n, n - j)))
        out.append(tsum(terms, j, p.m))
    return PolyInBasis(p.basis, p.m, tuple(out))


def op_apply(T: ShiftInvariantOp, fam: BinomialFamily, p: PolyInBasis) -> PolyInBasis:
    """Apply ``T`` (J-coordinates relative to ``fam``); the result keeps the basis of ``p``."""
    return from_P(fam, op_apply_P(T, to_P(fam, p)), p.basis)


def op_J_product(S: ShiftInvariantOp, T: ShiftInvariantOp) -> ShiftInvariantOp:
    """J-coordinates of ``ST``: ``sum_i C(n,i) G_S^(i) (.) G_T^(n-i)``."""
    if S.m != T.m:
        raise DimensionError("operators on different site counts")
    N = min(S.degree, T.degree)
    out = []
    for n in range(N + 1):
        terms = [st_sym_product(S.G[i], T.G[n - i]).scale(comb(n, i)) for i in range(n + 1)
                 if not (S.G[i].is_zero() or T.G[n - i].is_zero())]
        out.append(tsum(terms, n, S.m))
    return ShiftInvariantOp(S.m, tuple(out))


def op_invert(T: ShiftInvariantOp) -> ShiftInvariantOp:
    if T.G[0].value() == 0:
        raise PreconditionError("T1-nonzero", "a shift-invariant operator with T1 = 0 is not invertible")
    return ShiftInvariantOp.from_exponential_series(ts_scalar_reciprocal(T.exponential_series()))


def op_shift(fam: BinomialFamily, zeta: Sequence, degree: int | None = None) -> ShiftInvariantOp:
    """J-coordinates of ``E(zeta)``: ``G^(k) = P^(k)(zeta)``."""
    N = fam.degree if degree is None else degree
    return ShiftInvariantOp(fam.m, tuple(bf_eval_P(fam, zeta, k) for k in range(N + 1)))


def op_from_action(fam: BinomialFamily, action: Callable[[PolyInBasis], PolyInBasis],
                   degree: int | None = None) -> ShiftInvariantOp:
    """Read J-coordinates off an operator: ``G^(k)_b = (T <P^(k), e_b>)(0) / mult(b)``."""
    N = fam.degree if degree is None else degree
    m = fam.m
    G = []
    for k in range(N + 1):
        coeffs = {}
        for b in multisets(m, k):
            e = SymTensor(k, m, {b: 1})
            image = to_P(fam, action(PolyInBasis.single(P_BASIS, e)))
            coeffs[b] = image.coeffs[0].value() / mult(b)
        G.append(SymTensor(k, m, coeffs))
    return ShiftInvariantOp(m, tuple(G))


def poly_expand(fam: BinomialFamily, p: PolyInBasis) -> PolyInBasis:
    """P-basis coefficients from lowering: ``g^(k)_lam = (Q(x_1)...Q(x_k) p)(0) / k!``."""
    _need_degree(fam, p)
    m = p.m
    start = to_P(fam, p)
    out = []
    frontier = {(0,) * m: start}
    for k in range(p.degree + 1):
        coeffs = {}
        for lam, q in frontier.items():
            coeffs[lam] = q.coeffs[0].value() / factorial(k)
        out.append(SymTensor(k, m, coeffs))
        if k == p.degree:
            break
        nxt = {}
        for lam, q in frontier.items():
            for x in range(m):
                if any(lam[s] for s in range(x + 1, m)):
                    continue  # build each multiset once, in sorted-site order
                lam2 = tuple(c + (1 if s == x else 0) for s, c in enumerate(lam))
                delta = tuple(Fraction(int(s == x)) for s in range(m))
                nxt[lam2] = lower_P_coeffs(delta, q)
        frontier = nxt
    return PolyInBasis(P_BASIS, m, tuple(out))


def bt3_lowering(fam: BinomialFamily, zeta: Sequence, p: PolyInBasis) -> PolyInBasis:
    """``Q(zeta) = sum_k (1/k!) <B_k zeta, D(x_1)...D(x_k)>`` applied in the monomial basis."""
    mono = p if p.basis == MONOMIAL else bf_P_to_monomial(fam, p)
    N = max(mono.degree, 1)
    G = [SymTensor.zero(0, fam.m)] + [fam.B_map(k, zeta) if k <= fam.degree else SymTensor.zero(k, fam.m)
                                      for k in range(1, N + 1)]
    out = op_apply_P(ShiftInvariantOp(fam.m, tuple(G)), mono)
    return out if p.basis == MONOMIAL else bf_monomial_to_P(fam, out)


def binomial_identity_holds(fam: BinomialFamily, omega: Sequence, zeta: Sequence, n: int) -> bool:
    """``P^(n)(omega+zeta) == sum_k C(n,k) P^(k)(omega) (.) P^(n-k)(zeta)``."""
    s = tuple(Fraction(a) + Fraction(b) for a, b in zip(omega, zeta))
    lhs = bf_eval_P(fam, s, n)
    rhs = tsum(
        (st_sym_product(bf_eval_P(fam, omega, k), bf_eval_P(fam, zeta, n - k)).scale(comb(n, k)) for k in range(n + 1)),
        n, fam.m,
    )
    return lhs == rhs


def generating_series(fam: BinomialFamily, omega: Sequence) -> ScalarTensorSeries:
    """``sum_n P^(n)(omega)/n!`` as a scalar series."""
    return ScalarTensorSeries(fam.m, tuple(bf_eval_P(fam, omega, n).scale(Fraction(1, factorial(n)))
                                           for n in range(fam.degree + 1)))
