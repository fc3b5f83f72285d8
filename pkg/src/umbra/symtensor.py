"""Symmetric tensors over a finite set of weighted sites.

A symmetric tensor of order ``n`` over ``m`` sites is stored by its multiset
coordinates: one rational per multiset of sites, holding the common entry at
every permutation of that index tuple. Internally a multiset is an exponent
vector ``c`` of length ``m`` (``c[s]`` copies of site ``s``); the public
helpers also accept sorted 1-based site tuples such as ``(1, 2, 2)``.

Pairings reinstate orbit sizes, so ``<F, f> = sum_c mult(c) F_c f_c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError

Exps = tuple  # exponent vector, length m

ZERO = Fraction(0)
ONE = Fraction(1)


# -- multiset bookkeeping ---------------------------------------------------


@lru_cache(maxsize=None)
def multisets(m: int, n: int) -> tuple[Exps, ...]:
    """All exponent vectors of length ``m`` summing to ``n``, in sorted-site order."""
    if m == 0:
        return ((),) if n == 0 else ()
    out = []

    def rec(prefix, s, remaining):
        if s == m - 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for c in range(remaining, -1, -1):
            prefix.append(c)
            rec(prefix, s + 1, remaining - c)
            prefix.pop()

    rec([], 0, n)
    return tuple(out)


@lru_cache(maxsize=None)
def mult(c: Exps) -> int:
    """Orbit size ``n! / prod c_s!`` of a multiset given by exponents."""
    return factorial(sum(c)) // prod(factorial(k) for k in c)


def sites_to_exps(sites: Sequence[int], m: int) -> Exps:
    c = [0] * m
    for s in sites:
        if not 1 <= s <= m:
            raise DimensionError(f"site {s} outside 1..{m}")
        c[s - 1] += 1
    return tuple(c)


def exps_to_sites(c: Exps) -> tuple[int, ...]:
    return tuple(s + 1 for s, k in enumerate(c) for _ in range(k))


def st_mult(idx: Sequence[int]) -> int:
    """Number of distinct permutations of a 1-based site tuple."""
    counts: dict[int, int] = {}
    for s in idx:
        counts[s] = counts.get(s, 0) + 1
    return factorial(len(idx)) // prod(factorial(k) for k in counts.values())


def sub_multisets(c: Exps) -> Iterator[Exps]:
    """Every exponent vector ``mu`` with ``0 <= mu <= c`` componentwise."""

    def rec(s):
        if s == len(c):
            yield ()
            return
        for rest in rec(s + 1):
            for k in range(c[s] + 1):
                yield (k,) + rest

    yield from rec(0)


def split_weight(lam: Exps, mu: Exps) -> int:
    """``prod_s C(lam_s, mu_s)``."""
    return prod(comb(a, b) for a, b in zip(lam, mu))


def monomial(xi: Sequence[Fraction], c: Exps) -> Fraction:
    out = ONE
    for x, k in zip(xi, c):
        if k:
            out *= x**k
    return out


def key_str(c: Exps) -> str:
    return ",".join(str(s) for s in exps_to_sites(c))


def parse_key(text: str, m: int) -> Exps:
    text = text.strip()
    sites = [int(t) for t in text.split(",")] if text else []
    return sites_to_exps(sites, m)


# -- sites ------------------------------------------------------------------


@dataclass(frozen=True)
class SiteSpace:
    """``m`` sites with positive weights modelling the reference measure."""

    m: int
    weights: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise DimensionError("need at least one site")
        w = self.weights or (ONE,) * self.m
        w = tuple(Fraction(x) for x in w)
        if len(w) != self.m:
            raise DimensionError(f"expected {self.m} weights, got {len(w)}")
        if any(x <= 0 for x in w):
            raise ValueError("site weights must be positive")
        object.__setattr__(self, "weights", w)

    def integral(self, xi: Sequence) -> Fraction:
        """``<xi> = sum_x w_x xi_x``."""
        self.check(xi)
        return sum((w * Fraction(x) for w, x in zip(self.weights, xi)), ZERO)

    def l2(self, f: Sequence, g: Sequence) -> Fraction:
        self.check(f)
        self.check(g)
        return sum((w * Fraction(a) * Fraction(b) for w, a, b in zip(self.weights, f, g)), ZERO)

    def volume(self, box: Iterable[int]) -> Fraction:
        """Weight of a set of 1-based sites."""
        return sum((self.weights[s - 1] for s in set(box)), ZERO)

    def delta(self, site: int) -> tuple[Fraction, ...]:
        return tuple(ONE if s == site - 1 else ZERO for s in range(self.m))

    def check(self, vec: Sequence):
        if len(vec) != self.m:
            raise DimensionError(f"vector of length {len(vec)} on {self.m} sites")

    def to_json(self) -> dict:
        return {"m": self.m, "weights": [str(w) for w in self.weights]}


def pairing(omega: Sequence, xi: Sequence) -> Fraction:
    """Unweighted ``<omega, xi> = sum omega_x xi_x``."""
    if len(omega) != len(xi):
        raise DimensionError("pairing of vectors with different lengths")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(omega, xi)), ZERO)


def vec(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def pointwise_power(xi: Sequence, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) ** k for x in xi)


# -- tensors ----------------------------------------------------------------


@dataclass(frozen=True)
class SymTensor:
    order: int
    m: int
    coeffs: Mapping[Exps, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for c, v in self.coeffs.items():
            if len(c) != self.m or sum(c) != self.order:
                raise DimensionError(f"key {c} does not fit order {self.order} on {self.m} sites")
            v = Fraction(v)
            if v:
                clean[c] = v
        object.__setattr__(self, "coeffs", clean)

    # construction

    @classmethod
    def scalar(cls, value, m: int) -> "SymTensor":
        return cls(0, m, {(0,) * m: Fraction(value)})

    @classmethod
    def zero(cls, order: int, m: int) -> "SymTensor":
        return cls(order, m, {})

    @classmethod
    def from_vector(cls, v: Sequence) -> "SymTensor":
        m = len(v)
        return cls(1, m, {tuple(1 if t == s else 0 for t in range(m)): x for s, x in enumerate(v)})

    @classmethod
    def from_sites(cls, order: int, m: int, entries: Mapping[Sequence[int], object]) -> "SymTensor":
        """Build from 1-based site tuples (any order within a tuple)."""
        return cls(order, m, {sites_to_exps(k, m): Fraction(v) for k, v in entries.items()})

    # access

    def __getitem__(self, sites) -> Fraction:
        if isinstance(sites, int):
            sites = (sites,)
        return self.coeffs.get(sites_to_exps(sites, self.m), ZERO)

    def get(self, c: Exps) -> Fraction:
        return self.coeffs.get(c, ZERO)

    def items_by_sites(self):
        return sorted((exps_to_sites(c), v) for c, v in self.coeffs.items())

    def value(self) -> Fraction:
        """The number held by an order-0 tensor."""
        if self.order != 0:
            raise DimensionError("value() needs an order-0 tensor")
        return self.coeffs.get((0,) * self.m, ZERO)

    def as_vector(self) -> tuple[Fraction, ...]:
        if self.order != 1:
            raise DimensionError("as_vector() needs an order-1 tensor")
        return tuple(self.get(tuple(1 if t == s else 0 for t in range(self.m))) for s in range(self.m))

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic

    def _same(self, other: "SymTensor"):
        if self.order != other.order or self.m != other.m:
            raise DimensionError(
                f"tensor shapes differ: order {self.order}/{other.order}, sites {self.m}/{other.m}"
            )

    def __add__(self, other: "SymTensor") -> "SymTensor":
        self._same(other)
        out = dict(self.coeffs)
        for c, v in other.coeffs.items():
            out[c] = out.get(c, ZERO) + v
        return SymTensor(self.order, self.m, out)

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return self + (-other)

    def __neg__(self) -> "SymTensor":
        return SymTensor(self.order, self.m, {c: -v for c, v in self.coeffs.items()})

    def scale(self, a) -> "SymTensor":
        a = Fraction(a)
        if a == 0:
            return SymTensor.zero(self.order, self.m)
        return SymTensor(self.order, self.m, {c: a * v for c, v in self.coeffs.items()})

    def __mul__(self, a):
        if isinstance(a, (int, Fraction)):
            return self.scale(a)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.order == other.order and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.m, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = ", ".join(f"{exps_to_sites(c)}: {v}" for c, v in sorted(self.coeffs.items(), reverse=True))
        return f"SymTensor(order={self.order}, m={self.m}, {{{body}}})"

    # serialization

    def to_json(self, dense: bool = False) -> dict:
        """Sparse by default; ``dense`` lists every multiset, zeros included."""
        keys = multisets(self.m, self.order) if dense else self.coeffs
        keys = sorted(keys, key=exps_to_sites)
        return {"order": self.order, "m": self.m, "coeffs": {key_str(c): str(self.get(c)) for c in keys}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymTensor":
        m = int(obj["m"])
        return cls(int(obj["order"]), m, {parse_key(k, m): Fraction(v) for k, v in obj["coeffs"].items()})


def tsum(tensors: Iterable[SymTensor], order: int, m: int) -> SymTensor:
    out: dict[Exps, Fraction] = {}
    for t in tensors:
        if t.order != order or t.m != m:
            raise DimensionError("cannot sum tensors of different shapes")
        for c, v in t.coeffs.items():
            out[c] = out.get(c, ZERO) + v
    return SymTensor(order, m, out)


def st_eval_power(F: SymTensor, xi: Sequence) -> Fraction:
    """``<F, xi^{(x) n}>``."""
    if len(xi) != F.m:
        raise DimensionError(f"test function has {len(xi)} entries, tensor lives on {F.m} sites")
    xi = vec(xi)
    return sum((mult(c) * v * monomial(xi, c) for c, v in F.coeffs.items()), ZERO)


def st_from_power(omega: Sequence, n: int) -> SymTensor:
    """``omega^{(x) n}``: entry ``prod_i omega_{x_i}``."""
    if n < 0:
        raise DimensionError("order must be non-negative")
    omega = vec(omega)
    m = len(omega)
    support = [s for s in range(m) if omega[s]]
    out = {}
    for sub in multisets(len(support), n):
        c = [0] * m
        for s, k in zip(support, sub):
            c[s] = k
        c = tuple(c)
        out[c] = monomial(omega, c)
    if n == 0:
        out = {(0,) * m: ONE}
    return SymTensor(n, m, out)


def st_sym_product(F: SymTensor, G: SymTensor) -> SymTensor:
    """``F (.) G = Sym(F (x) G)``."""
    if F.m != G.m:
        raise DimensionError("tensors on different site spaces")
    i, j = F.order, G.order
    n = i + j
    norm = Fraction(1, comb(n, i))
    out: dict[Exps, Fraction] = {}
    for mu, a in F.coeffs.items():
        for nu, b in G.coeffs.items():
            lam = tuple(x + y for x, y in zip(mu, nu))
            out[lam] = out.get(lam, ZERO) + a * b * split_weight(lam, mu)
    return SymTensor(n, F.m, {c: v * norm for c, v in out.items()})


def st_sym_product_many(tensors: Sequence[SymTensor], m: int) -> SymTensor:
    out = SymTensor.scalar(1, m)
    for t in tensors:
        out = st_sym_product(out, t)
    return out


def st_diag_embed(omega: Sequence, k: int) -> SymTensor:
    """Adjoint of the diagonal map: ``omega_x`` at ``(x, ..., x)``."""
    if k < 1:
        raise DimensionError("diagonal embedding needs k >= 1")
    omega = vec(omega)
    m = len(omega)
    return SymTensor(k, m, {tuple(k if t == s else 0 for t in range(m)): omega[s] for s in range(m)})


def st_pair(F: SymTensor, f: SymTensor) -> Fraction:
    """Dual pairing ``sum_c mult(c) F_c f_c``."""
    F._same(f)
    if len(F.coeffs) > len(f.coeffs):
        F, f = f, F
    return sum((mult(c) * v * f.coeffs[c] for c, v in F.coeffs.items() if c in f.coeffs), ZERO)


def st_contract(f: SymTensor, G: SymTensor) -> SymTensor:
    """Insert ``G`` (order k) into ``k`` arguments of ``f`` (order n >= k).

    ``h_beta = sum_alpha mult(alpha) G_alpha f_{alpha+beta}``, so that for
    ``f = xi^n`` the result is ``<G, xi^k> xi^{n-k}``.
    """
    if f.m != G.m:
        raise DimensionError("tensors on different site spaces")
    k, n = G.order, f.order
    if k > n:
        raise DimensionError(f"cannot contract order {k} into order {n}")
    out: dict[Exps, Fraction] = {}
    for gam, v in f.coeffs.items():
        for alpha, g in G.coeffs.items():
            beta = tuple(a - b for a, b in zip(gam, alpha))
            if min(beta, default=0) < 0:
                continue
            out[beta] = out.get(beta, ZERO) + mult(alpha) * g * v
    return SymTensor(n - k, f.m, out)


def annihilate(zeta: Sequence, f: SymTensor) -> SymTensor:
    """Annihilation operator: ``n`` times the contraction of ``f`` with ``zeta``."""
    if f.order == 0:
        return SymTensor.zero(0, f.m)
    return st_contract(f, SymTensor.from_vector(vec(zeta))).scale(f.order)


# -- linear maps between symmetric powers -----------------------------------


@dataclass(frozen=True)
class SymLinearMap:
    """Linear map ``Sym^k -> Sym^n`` in multiset coordinates.

    ``rows[lam][alpha]`` is the coefficient of input coordinate ``alpha`` in
    output coordinate ``lam``: ``(M F)_lam = sum_alpha rows[lam][alpha] F_alpha``.
    """

    in_order: int
    out_order: int
    m: int
    rows: Mapping[Exps, Mapping[Exps, Fraction]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, row in self.rows.items():
            r = {a: Fraction(v) for a, v in row.items() if v}
            if r:
                clean[lam] = r
        object.__setattr__(self, "rows", clean)

    @classmethod
    def identity(cls, order: int, m: int) -> "SymLinearMap":
        return cls(order, order, m, {c: {c: ONE} for c in multisets(m, order)})

    @classmethod
    def zero(cls, in_order: int, out_order: int, m: int) -> "SymLinearMap":
        return cls(in_order, out_order, m, {})

    def apply(self, F: SymTensor) -> SymTensor:
        if F.order != self.in_order or F.m != self.m:
            raise DimensionError(f"map expects order {self.in_order}, got {F.order}")
        out = {}
        for lam, row in self.rows.items():
            s = ZERO
            for a, v in row.items():
                x = F.coeffs.get(a)
                if x is not None:
                    s += v * x
            if s:
                out[lam] = s
        return SymTensor(self.out_order, self.m, out)

    def compose(self, inner: "SymLinearMap") -> "SymLinearMap":
        """``self o inner``."""
        if inner.out_order != self.in_order or inner.m != self.m:
            raise DimensionError("incompatible maps")
        rows = {}
        for lam, row in self.rows.items():
            acc: dict[Exps, Fraction] = {}
            for mid, v in row.items():
                for a, w in inner.rows.get(mid, {}).items():
                    acc[a] = acc.get(a, ZERO) + v * w
            rows[lam] = acc
        return SymLinearMap(inner.in_order, self.out_order, self.m, rows)

    def __add__(self, other: "SymLinearMap") -> "SymLinearMap":
        if (self.in_order, self.out_order, self.m) != (other.in_order, other.out_order, other.m):
            raise DimensionError("incompatible maps")
        rows = {lam: dict(r) for lam, r in self.rows.items()}
        for lam, r in other.rows.items():
            tgt = rows.setdefault(lam, {})
            for a, v in r.items():
                tgt[a] = tgt.get(a, ZERO) + v
        return SymLinearMap(self.in_order, self.out_order, self.m, rows)

    def scale(self, s) -> "SymLinearMap":
        s = Fraction(s)
        return SymLinearMap(
            self.in_order, self.out_order, self.m,
            {lam: {a: s * v for a, v in r.items()} for lam, r in self.rows.items()},
        )

    def __neg__(self):
        return self.scale(-1)

    def adjoint(self) -> "SymLinearMap":
        """Adjoint for the multiplicity-weighted pairing.

        ``<M F, f> == <F, M^* f>``: ``(M^*)[alpha][lam] = mult(lam) M[lam][alpha] / mult(alpha)``.
        This is the only place that convention is spelled out.
        """
        rows: dict[Exps, dict[Exps, Fraction]] = {}
        for lam, r in self.rows.items():
            ml = mult(lam)
            for a, v in r.items():
                rows.setdefault(a, {})[lam] = Fraction(ml, mult(a)) * v
        return SymLinearMap(self.out_order, self.in_order, self.m, rows)

    def __eq__(self, other):
        if not isinstance(other, SymLinearMap):
            return NotImplemented
        return (self.in_order, self.out_order, self.m, self.rows) == (
            other.in_order, other.out_order, other.m, other.rows)

    def to_json(self) -> dict:
        return {
            "in_order": self.in_order,
            "out_order": self.out_order,
            "m": self.m,
            "rows": {
                key_str(lam): {key_str(a): str(v) for a, v in sorted(r.items(), key=lambda kv: exps_to_sites(kv[0]))}
                for lam, r in sorted(self.rows.items(), key=lambda kv: exps_to_sites(kv[0]))
            },
        }
