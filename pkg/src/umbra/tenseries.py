"""Truncated formal tensor power series.

A scalar series ``F(xi) = sum_n <F^(n), xi^n>`` keeps one symmetric tensor per
degree. A vector series ``A(xi) = sum_k A_k xi^k`` keeps one map
``Sym^k -> sites`` per degree ``k >= 1``.

Maps are stored by their kernel: column ``col(alpha)`` is the vector
``K(.; alpha)`` with ``A_k f = sum_alpha mult(alpha) f_alpha col(alpha)``.
With this convention the adjoint is plain contraction,
``(A_k^* omega)_alpha = <omega, col(alpha)>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Sequence

from . import linalg
from .errors import DimensionError, PreconditionError
from .series1d import PowerSeries1D
from .symtensor import (
    ZERO,
    Exps,
    SymTensor,
    exps_to_sites,
    key_str,
    monomial,
    mult,
    multisets,
    parse_key,
    st_diag_embed,
    st_eval_power,
    st_from_power,
    st_pair,
    st_sym_product,
    sub_multisets,
    vec,
)

Vector = tuple  # of Fraction, length m


def _zero_vec(m):
    return (ZERO,) * m


@dataclass(frozen=True)
class SymToVecMap:
    order: int
    m: int
    cols: Mapping[Exps, Vector] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for c, v in self.cols.items():
            if len(c) != self.m or sum(c) != self.order:
                raise DimensionError(f"column {c} does not fit order {self.order}")
            v = vec(v)
            if len(v) != self.m:
                raise DimensionError("column length differs from site count")
            if any(v):
                clean[c] = v
        object.__setattr__(self, "cols", clean)

    @classmethod
    def zero(cls, order: int, m: int) -> "SymToVecMap":
        return cls(order, m, {})

    @classmethod
    def diagonal(cls, order: int, m: int, scale=1) -> "SymToVecMap":
        """``scale`` times the diagonal map ``f -> f(x, ..., x)``."""
        s = Fraction(scale)
        cols = {}
        for x in range(m):
            c = tuple(order if t == x else 0 for t in range(m))
            cols[c] = tuple(s if t == x else ZERO for t in range(m))
        return cls(order, m, cols)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> "SymToVecMap":
        """Order-1 map from an ``m x m`` matrix acting on vectors."""
        m = len(matrix)
        cols = {}
        for y in range(m):
            c = tuple(1 if t == y else 0 for t in range(m))
            cols[c] = tuple(Fraction(matrix[x][y]) for x in range(m))
        return cls(1, m, cols)

    def col(self, c: Exps) -> Vector:
        return self.cols.get(c) or _zero_vec(self.m)

    def matrix(self) -> list[list[Fraction]]:
        if self.order != 1:
            raise DimensionError("matrix() needs an order-1 map")
        out = [[ZERO] * self.m for _ in range(self.m)]
        for c, v in self.cols.items():
            y = c.index(1)
            for x in range(self.m):
                out[x][y] = v[x]
        return out

    def apply(self, f: SymTensor) -> Vector:
        if f.order != self.order or f.m != self.m:
            raise DimensionError(f"map of order {self.order} applied to order {f.order}")
        acc = [ZERO] * self.m
        for c, v in self.cols.items():
            a = f.coeffs.get(c)
            if a is None:
                continue
            w = mult(c) * a
            for x in range(self.m):
                if v[x]:
                    acc[x] += w * v[x]
        return tuple(acc)

    def adjoint(self, omega: Sequence) -> SymTensor:
        """``A^* omega`` with ``<A^* omega, f> == <omega, A f>``."""
        omega = vec(omega)
        if len(omega) != self.m:
            raise DimensionError("distribution length differs from site count")
        return SymTensor(
            self.order, self.m,
            {c: sum((o * x for o, x in zip(omega, v)), ZERO) for c, v in self.cols.items()},
        )

    def eval_power(self, xi: Sequence) -> Vector:
        """``A_k xi^{(x) k}``."""
        xi = vec(xi)
        acc = [ZERO] * self.m
        for c, v in self.cols.items():
            w = mult(c) * monomial(xi, c)
            if w:
                for x in range(self.m):
                    acc[x] += w * v[x]
        return tuple(acc)

    def scale(self, s) -> "SymToVecMap":
        s = Fraction(s)
        return SymToVecMap(self.order, self.m, {c: tuple(s * x for x in v) for c, v in self.cols.items()})

    def __add__(self, other: "SymToVecMap") -> "SymToVecMap":
        if other.order != self.order or other.m != self.m:
            raise DimensionError("incompatible maps")
        cols = dict(self.cols)
        for c, v in other.cols.items():
            cols[c] = tuple(a + b for a, b in zip(self.col(c), v))
        return SymToVecMap(self.order, self.m, cols)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def to_json(self) -> dict:
        matrix = {}
        for x in range(self.m):
            row = {
                key_str(c): str(v[x])
                for c, v in sorted(self.cols.items(), key=lambda kv: exps_to_sites(kv[0]))
                if v[x]
            }
            if row:
                matrix[str(x + 1)] = row
        return {"order": self.order, "matrix": matrix}

    @classmethod
    def from_json(cls, obj: Mapping, m: int) -> "SymToVecMap":
        k = int(obj["order"])
        cols: dict[Exps, list[Fraction]] = {}
        for site, row in obj.get("matrix", {}).items():
            x = int(site) - 1
            if not 0 <= x < m:
                raise DimensionError(f"site {site} outside 1..{m}")
            for key, val in row.items():
                c = parse_key(key, m)
                if sum(c) != k:
                    raise DimensionError(f"multiset {key} does not have size {k}")
                cols.setdefault(c, [ZERO] * m)[x] = Fraction(val)
        return cls(k, m, {c: tuple(v) for c, v in cols.items()})


class PowerKernels:
    """Symmetrized kernels of ``M_{k_1} (x) ... (x) M_{k_p}`` summed over compositions.

    For an input multiset ``lam`` of size ``n``, ``kernel(p, lam)`` is the order-``p``
    tensor ``sum_{k_1+...+k_p=n} Sym_n(M_{k_1} (x) ... (x) M_{k_p})`` read at the
    input coordinate ``lam``. Summing the ordered compositions first part by first
    part gives the recursion

        W_p(lam) = sum_{0 < mu <= lam} mult(mu) col_{|mu|}(mu) (.) W_{p-1}(lam - mu),

    with ``W_p(lam) = mult(lam) kernel(p, lam)``.
    """

    def __init__(self, m: int, get_map: Callable[[int], SymToVecMap | None]):
        self.m = m
        self.get_map = get_map
        self._memo: dict[tuple[int, Exps], SymTensor] = {}
        self._vec_cache: dict[Exps, SymTensor | None] = {}

    def _col_tensor(self, mu: Exps) -> SymTensor | None:
        if mu in self._vec_cache:
            return self._vec_cache[mu]
        mp = self.get_map(sum(mu))
        t = None
        if mp is not None:
            v = mp.cols.get(mu)
            if v is not None:
                t = SymTensor.from_vector(v).scale(mult(mu))
        self._vec_cache[mu] = t
        return t

    def weighted(self, p: int, lam: Exps) -> SymTensor:
        key = (p, lam)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        n = sum(lam)
        if p == 0:
            out = SymTensor.scalar(1 if n == 0 else 0, self.m)
        elif p > n:
            out = SymTensor.zero(p, self.m)
        else:
            acc: dict[Exps, Fraction] = {}
            zero = (0,) * self.m
            for mu in sub_multisets(lam):
                if mu == zero:
                    continue
                rest = tuple(a - b for a, b in zip(lam, mu))
                if sum(rest) < p - 1:
                    continue
                head = self._col_tensor(mu)
                if head is None:
                    continue
                tail = self.weighted(p - 1, rest)
                if tail.is_zero():
                    continue
                for c, v in st_sym_product(head, tail).coeffs.items():
                    acc[c] = acc.get(c, ZERO) + v
            out = SymTensor(p, self.m, acc)
        self._memo[key] = out
        return out

    def kernel(self, p: int, lam: Exps) -> SymTensor:
        return self.weighted(p, lam).scale(Fraction(1, mult(lam)))


# -- series types -----------------------------------------------------------


@dataclass(frozen=True)
class ScalarTensorSeries:
    m: int
    terms: tuple[SymTensor, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise DimensionError("a scalar series needs at least the constant slot")
        for n, t in enumerate(terms):
            if t.order != n or t.m != self.m:
                raise DimensionError(f"slot {n} holds order {t.order} on {t.m} sites")
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, n: int) -> SymTensor:
        return self.terms[n]

    @classmethod
    def unit(cls, m: int, degree: int) -> "ScalarTensorSeries":
        return cls(m, (SymTensor.scalar(1, m),) + tuple(SymTensor.zero(n, m) for n in range(1, degree + 1)))

    @classmethod
    def zero(cls, m: int, degree: int) -> "ScalarTensorSeries":
        return cls(m, tuple(SymTensor.zero(n, m) for n in range(degree + 1)))

    @classmethod
    def from_slots(cls, m: int, degree: int, slots: Mapping[int, SymTensor]) -> "ScalarTensorSeries":
        return cls(m, tuple(slots.get(n, SymTensor.zero(n, m)) for n in range(degree + 1)))

    def constant(self) -> Fraction:
        return self.terms[0].value()

    def eval(self, xi: Sequence) -> Fraction:
        """Sum of all slots at ``xi`` (a polynomial, since the series is truncated)."""
        return sum((st_eval_power(t, xi) for t in self.terms), ZERO)

    def _check(self, other):
        if self.m != other.m or self.degree != other.degree:
            raise DimensionError("series differ in site count or degree")

    def __add__(self, other):
        self._check(other)
        return ScalarTensorSeries(self.m, tuple(a + b for a, b in zip(self.terms, other.terms)))

    def __sub__(self, other):
        self._check(other)
        return ScalarTensorSeries(self.m, tuple(a - b for a, b in zip(self.terms, other.terms)))

    def scale(self, s) -> "ScalarTensorSeries":
        return ScalarTensorSeries(self.m, tuple(t.scale(s) for t in self.terms))

    def to_json(self) -> dict:
        return {"m": self.m, "degree": self.degree, "slots": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ScalarTensorSeries":
        return cls(int(obj["m"]), tuple(SymTensor.from_json(s) for s in obj["slots"]))


@dataclass(frozen=True)
class VectorTensorSeries:
    m: int
    maps: tuple[SymToVecMap, ...]

    def __post_init__(self):
        maps = tuple(self.maps)
        for k, a in enumerate(maps, start=1):
            if a.order != k or a.m != self.m:
                raise DimensionError(f"slot {k} holds an order-{a.order} map on {a.m} sites")
        object.__setattr__(self, "maps", maps)

    @property
    def degree(self) -> int:
        return len(self.maps)

    def __getitem__(self, k: int) -> SymToVecMap:
        """Map of order ``k`` (1-based, matching the series index)."""
        if k < 1:
            raise IndexError("vector series start at degree 1")
        return self.maps[k - 1]

    def get(self, k: int) -> SymToVecMap | None:
        return self.maps[k - 1] if 1 <= k <= len(self.maps) else None

    def kernels(self) -> PowerKernels:
        return PowerKernels(self.m, self.get)

    def eval(self, xi: Sequence) -> Vector:
        acc = [ZERO] * self.m
        for a in self.maps:
            for x, v in enumerate(a.eval_power(xi)):
                acc[x] += v
        return tuple(acc)

    def _check(self, other):
        if self.m != other.m or self.degree != other.degree:
            raise DimensionError("series differ in site count or degree")

    def __add__(self, other):
        self._check(other)
        return VectorTensorSeries(self.m, tuple(a + b for a, b in zip(self.maps, other.maps)))

    def __sub__(self, other):
        self._check(other)
        return VectorTensorSeries(self.m, tuple(a - b for a, b in zip(self.maps, other.maps)))

    def to_json(self) -> dict:
        return {"m": self.m, "degree": self.degree, "maps": [a.to_json() for a in self.maps]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "VectorTensorSeries":
        m = int(obj["m"])
        maps = [SymToVecMap.from_json(a, m) for a in obj["maps"]]
        maps.sort(key=lambda a: a.order)
        degree = int(obj.get("degree", len(maps)))
        by_order = {a.order: a for a in maps}
        return cls(m, tuple(by_order.get(k, SymToVecMap.zero(k, m)) for k in range(1, degree + 1)))


# -- constructors -----------------------------------------------------------


def identity_vseries(m: int, degree: int) -> VectorTensorSeries:
    return VectorTensorSeries(
        m, tuple(SymToVecMap.diagonal(1, m) if k == 1 else SymToVecMap.zero(k, m) for k in range(1, degree + 1))
    )


def lift(s: PowerSeries1D, m: int, degree: int | None = None) -> VectorTensorSeries:
    """Diagonal lift: slot ``k`` is ``s_k`` times the diagonal map of order ``k``."""
    if s.coeffs[0] != 0:
        raise PreconditionError("constant-term-nonzero", "only series vanishing at 0 lift to vector series")
    N = s.degree if degree is None else degree
    return VectorTensorSeries(
        m, tuple(SymToVecMap.diagonal(k, m, s.coeffs[k] if k <= s.degree else 0) for k in range(1, N + 1))
    )


def linear_form(v: Sequence, degree: int) -> ScalarTensorSeries:
    """The series ``<v, xi>``."""
    v = vec(v)
    m = len(v)
    return ScalarTensorSeries.from_slots(m, degree, {1: SymTensor.from_vector(v)})


def exp_linear(omega: Sequence, degree: int) -> ScalarTensorSeries:
    """``exp[<omega, xi>]``: slot ``n`` is ``omega^n / n!``."""
    omega = vec(omega)
    return ScalarTensorSeries(
        len(omega), tuple(st_from_power(omega, n).scale(Fraction(1, factorial(n))) for n in range(degree + 1))
    )


# -- algebra ----------------------------------------------------------------


def ts_scalar_mul(F: ScalarTensorSeries, G: ScalarTensorSeries) -> ScalarTensorSeries:
    F._check(G)
    N, m = F.degree, F.m
    out = []
    for n in range(N + 1):
        acc: dict[Exps, Fraction] = {}
        for i in range(n + 1):
            a, b = F.terms[i], G.terms[n - i]
            if a.is_zero() or b.is_zero():
                continue
            for c, v in st_sym_product(a, b).coeffs.items():
                acc[c] = acc.get(c, ZERO) + v
        out.append(SymTensor(n, m, acc))
    return ScalarTensorSeries(m, tuple(out))


def ts_scalar_reciprocal(F: ScalarTensorSeries) -> ScalarTensorSeries:
    f0 = F.constant()
    if f0 == 0:
        raise PreconditionError("zero-constant-term", "reciprocal needs F(0) != 0")
    m = F.m
    g = [SymTensor.scalar(1 / f0, m)]
    for n in range(1, F.degree + 1):
        acc: dict[Exps, Fraction] = {}
        for i in range(n):
            a = F.terms[n - i]
            if a.is_zero() or g[i].is_zero():
                continue
            for c, v in st_sym_product(a, g[i]).coeffs.items():
                acc[c] = acc.get(c, ZERO) + v
        g.append(SymTensor(n, m, acc).scale(-1 / f0))
    return ScalarTensorSeries(m, tuple(g))


def ts_compose_1d_scalar(R: PowerSeries1D, F: ScalarTensorSeries) -> ScalarTensorSeries:
    """``R(F(xi))``: slot ``n`` is ``sum_p r_p (F^p)_n``, ``F^p`` the ``p``-fold product."""
    if not F.terms[0].is_zero():
        raise PreconditionError("constant-term-nonzero", "inner series must vanish at 0")
    N, m = F.degree, F.m
    out = ScalarTensorSeries.unit(m, N).scale(R.coeffs[0])
    power = F
    for p in range(1, N + 1):
        r = R.coeffs[p] if p <= R.degree else ZERO
        if r:
            out = out + power.scale(r)
        power = ts_scalar_mul(power, F)
    return out


def ts_vector_compose(A: VectorTensorSeries, B: VectorTensorSeries) -> VectorTensorSeries:
    """``A(B(xi))``: ``C_n = sum_p sum_{k_1+...+k_p=n} A_p(B_{k_1} (.) ... (.) B_{k_p})``."""
    A._check(B)
    m, N = A.m, A.degree
    kern = B.kernels()
    maps = []
    for n in range(1, N + 1):
        cols = {}
        for lam in multisets(m, n):
            acc = [ZERO] * m
            for p in range(1, n + 1):
                T = kern.kernel(p, lam)
                if T.is_zero():
                    continue
                for x, v in enumerate(A[p].apply(T)):
                    acc[x] += v
            cols[lam] = tuple(acc)
        maps.append(SymToVecMap(n, m, cols))
    return VectorTensorSeries(m, tuple(maps))


def ts_scalar_vector_compose(F: ScalarTensorSeries, A: VectorTensorSeries) -> ScalarTensorSeries:
    """``F(A(xi))``: ``G^(n) = sum_p sum_{k_1+...+k_p=n} (A_{k_1}^* (.) ... (.) A_{k_p}^*) F^(p)``."""
    if F.m != A.m or F.degree != A.degree:
        raise DimensionError("series differ in site count or degree")
    m, N = F.m, F.degree
    kern = A.kernels()
    out = [F.terms[0]]
    for n in range(1, N + 1):
        coeffs = {}
        for lam in multisets(m, n):
            s = ZERO
            for p in range(1, n + 1):
                if F.terms[p].is_zero():
                    continue
                T = kern.kernel(p, lam)
                if not T.is_zero():
                    s += st_pair(F.terms[p], T)
            coeffs[lam] = s
        out.append(SymTensor(n, m, coeffs))
    return ScalarTensorSeries(m, tuple(out))


def ts_vector_inverse(A: VectorTensorSeries) -> VectorTensorSeries:
    """Two-sided compositional inverse.

    ``B_1 = A_1^{-1}`` and ``B_n = -A_1^{-1} sum_{p>=2} sum A_p(B_{k_1} (.) ... (.) B_{k_p})``.
    """
    m, N = A.m, A.degree
    if N == 0:
        return VectorTensorSeries(m, ())
    inv = linalg.inverse(A[1].matrix())
    maps: list[SymToVecMap] = [SymToVecMap.from_matrix(inv)]
    kern = PowerKernels(m, lambda k: maps[k - 1] if k <= len(maps) else None)
    for n in range(2, N + 1):
        cols = {}
        for lam in multisets(m, n):
            acc = [ZERO] * m
            for p in range(2, n + 1):
                T = kern.kernel(p, lam)
                if T.is_zero():
                    continue
                for x, v in enumerate(A[p].apply(T)):
                    acc[x] += v
            cols[lam] = tuple(-v for v in linalg.matvec(inv, acc))
        maps.append(SymToVecMap(n, m, cols))
    return VectorTensorSeries(m, tuple(maps))


def lift_scalar(s: PowerSeries1D, weights: Sequence, degree: int | None = None) -> ScalarTensorSeries:
    """``sum_k s_k <w, xi^k>``: slot ``k`` is ``s_k`` times the diagonal embedding of ``w``."""
    w = vec(weights)
    m = len(w)
    N = s.degree if degree is None else degree
    slots = {0: SymTensor.scalar(s.coeffs[0], m)}
    for k in range(1, N + 1):
        if k <= s.degree and s.coeffs[k]:
            slots[k] = st_diag_embed(w, k).scale(s.coeffs[k])
    return ScalarTensorSeries.from_slots(m, N, slots)
