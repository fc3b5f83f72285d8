"""Independent reference computations.

Everything here works along a ray: a concrete rational test function ``xi``
is fixed and ``t xi`` is substituted into the series, so all arithmetic is
one-variable series arithmetic in ``t``. Nothing here touches multiset
kernels, composition sums or the U/R/V arrays, which makes these routines
usable as oracles for the tensor-level code.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .series1d import PowerSeries1D, exp_series, ps_compose, ps_mul
from .symtensor import monomial, mult, st_eval_power, vec
from .tenseries import ScalarTensorSeries, VectorTensorSeries

ZERO = Fraction(0)


def _zero(N):
    return PowerSeries1D((ZERO,) * (N + 1))


def _pow(s: PowerSeries1D, k: int) -> PowerSeries1D:
    out = PowerSeries1D.from_coeffs([1], s.degree)
    for _ in range(k):
        out = ps_mul(out, s)
    return out


def scalar_ray(F: ScalarTensorSeries, xi: Sequence) -> PowerSeries1D:
    """``t -> F(t xi)``."""
    return PowerSeries1D(tuple(st_eval_power(t, xi) for t in F.terms))


def vector_ray(A: VectorTensorSeries, xi: Sequence) -> list[PowerSeries1D]:
    """``t -> A(t xi)`` as one series per site."""
    m, N = A.m, A.degree
    coeffs = [[ZERO] * (N + 1) for _ in range(m)]
    for k in range(1, N + 1):
        for x, v in enumerate(A[k].eval_power(xi)):
            coeffs[x][k] = v
    return [PowerSeries1D(tuple(c)) for c in coeffs]


def _monomial_series(v: list[PowerSeries1D], c) -> PowerSeries1D:
    N = v[0].degree
    out = PowerSeries1D.from_coeffs([1], N)
    for s, k in enumerate(c):
        if k:
            out = ps_mul(out, _pow(v[s], k))
    return out


def substitute_vector(A: VectorTensorSeries, v: list[PowerSeries1D]) -> list[PowerSeries1D]:
    """``A(v(t))`` for site-wise series ``v`` vanishing at ``t = 0``."""
    m, N = A.m, A.degree
    acc = [[ZERO] * (N + 1) for _ in range(m)]
    for k in range(1, N + 1):
        for c, col in A[k].cols.items():
            s = _monomial_series(v, c)
            w = mult(c)
            for x in range(m):
                if col[x]:
                    for n in range(N + 1):
                        acc[x][n] += w * col[x] * s.coeffs[n]
    return [PowerSeries1D(tuple(a)) for a in acc]


def substitute_scalar(F: ScalarTensorSeries, v: list[PowerSeries1D]) -> PowerSeries1D:
    """``F(v(t))``."""
    N = F.degree
    acc = [ZERO] * (N + 1)
    acc[0] = F.terms[0].value()
    for k in range(1, N + 1):
        for c, a in F.terms[k].coeffs.items():
            s = _monomial_series(v, c)
            for n in range(N + 1):
                acc[n] += mult(c) * a * s.coeffs[n]
    return PowerSeries1D(tuple(acc))


def compose_ray(A: VectorTensorSeries, B: VectorTensorSeries, xi: Sequence) -> list[PowerSeries1D]:
    """``t -> A(B(t xi))``."""
    return substitute_vector(A, vector_ray(B, xi))


def scalar_compose_ray(F: ScalarTensorSeries, A: VectorTensorSeries, xi: Sequence) -> PowerSeries1D:
    return substitute_scalar(F, vector_ray(A, xi))


def generating_coefficient(A: VectorTensorSeries, omega: Sequence, xi: Sequence, n: int) -> Fraction:
    """``n! [t^n] exp<omega, A(t xi)>``."""
    v = vector_ray(A, xi)
    N = A.degree
    lin = _zero(N)
    for o, s in zip(vec(omega), v):
        lin = lin + s.scale(o)
    return ps_compose(exp_series(N), lin).coeffs[n] * factorial(n)


def lifted_generating_coefficient(a: PowerSeries1D, omega: Sequence, xi: Sequence, n: int,
                                  c: PowerSeries1D | None = None, weights: Sequence | None = None) -> Fraction:
    """``n! [t^n] exp[sum_x omega_x a(t xi_x) - sum_x w_x c(a(t xi_x))]``.

    With ``c`` omitted this is the binomial-type generating function.
    """
    N = a.degree
    exponent = _zero(N)
    omega, xi = vec(omega), vec(xi)
    w = vec(weights) if weights is not None else (Fraction(1),) * len(omega)
    ca = ps_compose(c, a) if c is not None else None
    for x in range(len(omega)):
        ray = PowerSeries1D.from_coeffs([0, xi[x]], N)
        exponent = exponent + ps_compose(a, ray).scale(omega[x])
        if ca is not None:
            exponent = exponent - ps_compose(ca, ray).scale(w[x])
    return ps_compose(exp_series(N), exponent).coeffs[n] * factorial(n)


def onedim_sheffer_poly(a: PowerSeries1D, n: int, c: PowerSeries1D | None = None,
                        volume=0) -> list[Fraction]:
    """Coefficients in ``t`` of ``n! [u^n] exp[t a(u) - volume c(a(u))]``."""
    N = a.degree
    damp = PowerSeries1D.from_coeffs([1], N)
    if c is not None and volume:
        damp = ps_compose(exp_series(N), ps_compose(c, a).scale(-Fraction(volume)))
    out = []
    power = PowerSeries1D.from_coeffs([1], N)
    for j in range(n + 1):
        out.append(ps_mul(power, damp).coeffs[n] * Fraction(factorial(n), factorial(j)))
        power = ps_mul(power, a)
    return out


def poly_at(coeffs: Sequence[Fraction], t) -> Fraction:
    t = Fraction(t)
    return sum((c * t**j for j, c in enumerate(coeffs)), ZERO)


def tensor_ray_value(coeffs_by_multiset: dict, xi: Sequence) -> Fraction:
    """``sum_c mult(c) T_c xi^c`` straight from a raw coefficient dict."""
    xi = vec(xi)
    return sum((mult(c) * v * monomial(xi, c) for c, v in coeffs_by_multiset.items()), ZERO)
