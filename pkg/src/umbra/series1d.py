"""Truncated formal power series in one variable with exact rational coefficients.

Series are stored by plain coefficients ``c[k]`` of ``u**k``. The divided-power
convention ``alpha_k = c_k * k!`` is available through explicit helpers only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .config import default_degree
from .errors import DimensionError, PreconditionError


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class PowerSeries1D:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise DimensionError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, values: Iterable, degree: int | None = None) -> "PowerSeries1D":
        """Build from leading coefficients, zero-padding or truncating to ``degree``."""
        vals = [as_fraction(v) for v in values]
        if degree is None:
            degree = max(len(vals) - 1, 0)
        vals = vals[: degree + 1] + [Fraction(0)] * (degree + 1 - len(vals))
        return cls(tuple(vals))

    @classmethod
    def from_divided_powers(cls, alphas: Sequence, degree: int | None = None) -> "PowerSeries1D":
        """Inverse of :meth:`divided_powers`: ``c_k = alpha_k / k!``."""
        return cls.from_coeffs(
            [as_fraction(a) / factorial(k) for k, a in enumerate(alphas)], degree
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def divided_powers(self) -> tuple[Fraction, ...]:
        """``alpha_k = c_k * k!``."""
        return tuple(c * factorial(k) for k, c in enumerate(self.coeffs))

    def truncate(self, degree: int) -> "PowerSeries1D":
        return PowerSeries1D.from_coeffs(self.coeffs, degree)

    def _check(self, other):
        if not isinstance(other, PowerSeries1D):
            return NotImplemented
        if other.degree != self.degree:
            raise DimensionError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PowerSeries1D(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PowerSeries1D(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return PowerSeries1D(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "PowerSeries1D":
        c = as_fraction(c)
        return PowerSeries1D(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PowerSeries1D):
            return ps_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return "PowerSeries1D(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "PowerSeries1D":
        return cls.from_coeffs(obj["coeffs"], obj.get("degree"))


def ps_mul(f: PowerSeries1D, g: PowerSeries1D) -> PowerSeries1D:
    """Cauchy product truncated to the common degree."""
    if f.degree != g.degree:
        raise DimensionError(f"degree mismatch: {f.degree} vs {g.degree}")
    N = f.degree
    out = [Fraction(0)] * (N + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j in range(N + 1 - i):
            b = g.coeffs[j]
            if b:
                out[i + j] += a * b
    return PowerSeries1D(tuple(out))


def ps_compose(r: PowerSeries1D, f: PowerSeries1D) -> PowerSeries1D:
    """``r(f(u))``; requires ``f(0) == 0``."""
    if r.degree != f.degree:
        raise DimensionError(f"degree mismatch: {r.degree} vs {f.degree}")
    if f.coeffs[0] != 0:
        raise PreconditionError("constant-term-nonzero", "inner series must vanish at 0")
    N = f.degree
    out = [Fraction(0)] * (N + 1)
    out[0] = r.coeffs[0]
    power = f  # f**m, starting at m = 1
    for m in range(1, N + 1):
        rm = r.coeffs[m]
        if rm:
            for n in range(m, N + 1):
                out[n] += rm * power.coeffs[n]
        power = ps_mul(power, f)
    return PowerSeries1D(tuple(out))


def ps_comp_inverse(q: PowerSeries1D) -> PowerSeries1D:
    """Compositional inverse ``a`` with ``q(a(u)) == u == a(q(u))``."""
    if q.coeffs[0] != 0:
        raise PreconditionError("constant-term-nonzero", "series must vanish at 0")
    if q.degree >= 1 and q.coeffs[1] == 0:
        raise PreconditionError("zero-linear-coefficient", "series is not invertible")
    N = q.degree
    b = [Fraction(0)] * (N + 1)
    if N == 0:
        return PowerSeries1D(tuple(b))
    inv1 = 1 / q.coeffs[1]
    b[1] = inv1
    for n in range(2, N + 1):
        # degree-n coefficient of sum_{m>=2} q_m b^m uses b_1..b_{n-1} only
        current = PowerSeries1D(tuple(b))
        acc = Fraction(0)
        power = ps_mul(current, current)
        for m in range(2, n + 1):
            if q.coeffs[m]:
                acc += q.coeffs[m] * power.coeffs[n]
            power = ps_mul(power, current)
        b[n] = -inv1 * acc
    return PowerSeries1D(tuple(b))


def ps_reciprocal(f: PowerSeries1D) -> PowerSeries1D:
    if f.coeffs[0] == 0:
        raise PreconditionError("zero-constant-term", "reciprocal needs f(0) != 0")
    N = f.degree
    g = [Fraction(0)] * (N + 1)
    g[0] = 1 / f.coeffs[0]
    for n in range(1, N + 1):
        s = sum((f.coeffs[n - i] * g[i] for i in range(n)), Fraction(0))
        g[n] = -g[0] * s
    return PowerSeries1D(tuple(g))


# -- named series ----------------------------------------------------------


def _deg(degree):
    return default_degree() if degree is None else degree


def identity_series(degree=None) -> PowerSeries1D:
    return PowerSeries1D.from_coeffs([0, 1], _deg(degree))


def one_series(degree=None) -> PowerSeries1D:
    return PowerSeries1D.from_coeffs([1], _deg(degree))


def exp_series(degree=None) -> PowerSeries1D:
    """``sum t**n / n!``"""
    N = _deg(degree)
    return PowerSeries1D(tuple(Fraction(1, factorial(n)) for n in range(N + 1)))


def expm1_series(degree=None) -> PowerSeries1D:
    """``e**u - 1``"""
    N = _deg(degree)
    return PowerSeries1D((Fraction(0),) + tuple(Fraction(1, factorial(n)) for n in range(1, N + 1)))


def log1p_series(degree=None) -> PowerSeries1D:
    """``log(1 + t) = sum (-1)**(n+1) t**n / n``"""
    N = _deg(degree)
    return PowerSeries1D((Fraction(0),) + tuple(Fraction((-1) ** (n + 1), n) for n in range(1, N + 1)))


def neg_log1m_series(degree=None) -> PowerSeries1D:
    """``-log(1 - u) = sum u**n / n``"""
    N = _deg(degree)
    return PowerSeries1D((Fraction(0),) + tuple(Fraction(1, n) for n in range(1, N + 1)))


def geometric_ratio_series(sign: int = 1, degree=None) -> PowerSeries1D:
    """``u / (1 - sign*u)``: sign=+1 gives ``sum u**k``, sign=-1 gives ``u/(1+u)``."""
    N = _deg(degree)
    return PowerSeries1D((Fraction(0),) + tuple(Fraction(sign) ** (k - 1) for k in range(1, N + 1)))


def abel_inverse_series(alpha, degree=None) -> PowerSeries1D:
    """``W(alpha u) / alpha`` with degree-k coefficient ``(-alpha k)**(k-1) / k!``."""
    alpha = as_fraction(alpha)
    if alpha == 0:
        raise PreconditionError("abel-parameter-nonzero", "alpha must be nonzero")
    N = _deg(degree)
    return PowerSeries1D(
        (Fraction(0),) + tuple((-alpha * k) ** (k - 1) / factorial(k) for k in range(1, N + 1))
    )


def abel_delta_series(alpha, degree=None) -> PowerSeries1D:
    """``u e**(alpha u)``, the symbol of the Abel delta operator."""
    alpha = as_fraction(alpha)
    N = _deg(degree)
    return PowerSeries1D(
        (Fraction(0),) + tuple(alpha ** (k - 1) / factorial(k - 1) for k in range(1, N + 1))
    )


def half_square_series(degree=None) -> PowerSeries1D:
    return PowerSeries1D.from_coeffs([0, 0, Fraction(1, 2)], _deg(degree))


EXP = exp_series()
LOG1P = log1p_series()
