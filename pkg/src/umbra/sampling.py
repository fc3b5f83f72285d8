"""Seeded random inputs over small rationals (|numerator| <= 9, denominator <= 4)."""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .families import PolyInBasis, ShiftInvariantOp
from .series1d import PowerSeries1D
from .symtensor import SymTensor, multisets
from .tenseries import ScalarTensorSeries, SymToVecMap, VectorTensorSeries

MAX_NUM = 9
MAX_DEN = 4


def rng(seed: int = 0) -> random.Random:
    return random.Random(seed)


def rational(r: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(r.randint(-MAX_NUM, MAX_NUM), r.randint(1, MAX_DEN))
        if x or not nonzero:
            return x


def small_int(r: random.Random, lo: int = 0, hi: int = 4) -> int:
    return r.randint(lo, hi)


def vector(r: random.Random, m: int, nonzero: bool = False) -> tuple[Fraction, ...]:
    while True:
        v = tuple(rational(r) for _ in range(m))
        if any(v) or not nonzero:
            return v


def tensor(r: random.Random, order: int, m: int, density: float = 1.0) -> SymTensor:
    return SymTensor(order, m, {c: rational(r) for c in multisets(m, order) if r.random() < density})


def series1d(r: random.Random, degree: int, const=None, linear=None) -> PowerSeries1D:
    coeffs = [rational(r) for _ in range(degree + 1)]
    if const is not None:
        coeffs[0] = Fraction(const)
    if linear is not None and degree >= 1:
        coeffs[1] = Fraction(linear)
    return PowerSeries1D(tuple(coeffs))


def scalar_series(r: random.Random, m: int, degree: int, const=None, density: float = 1.0) -> ScalarTensorSeries:
    terms = [tensor(r, n, m, density) for n in range(degree + 1)]
    if const is not None:
        terms[0] = SymTensor.scalar(const, m)
    return ScalarTensorSeries(m, tuple(terms))


def invertible_matrix(r: random.Random, m: int) -> list[list[Fraction]]:
    while True:
        M = [[rational(r) for _ in range(m)] for _ in range(m)]
        if linalg.rank(M) == m:
            return M


def vector_map(r: random.Random, order: int, m: int, density: float = 1.0) -> SymToVecMap:
    return SymToVecMap(order, m, {c: vector(r, m) for c in multisets(m, order) if r.random() < density})


def vector_series(r: random.Random, m: int, degree: int, monic: bool = False,
                  density: float = 1.0) -> VectorTensorSeries:
    """Random series with invertible linear part (the identity when ``monic``)."""
    first = SymToVecMap.diagonal(1, m) if monic else SymToVecMap.from_matrix(invertible_matrix(r, m))
    rest = [vector_map(r, k, m, density) for k in range(2, degree + 1)]
    return VectorTensorSeries(m, tuple([first] + rest))


def poly(r: random.Random, basis: str, m: int, degree: int, density: float = 1.0) -> PolyInBasis:
    return PolyInBasis(basis, m, tuple(tensor(r, k, m, density) for k in range(degree + 1)))


def operator(r: random.Random, m: int, degree: int, const=None, density: float = 1.0) -> ShiftInvariantOp:
    G = [tensor(r, k, m, density) for k in range(degree + 1)]
    if const is not None:
        G[0] = SymTensor.scalar(const, m)
    return ShiftInvariantOp(m, tuple(G))


def integer_masses(r: random.Random, m: int, lo: int = 0, hi: int = 4) -> tuple[int, ...]:
    return tuple(r.randint(lo, hi) for _ in range(m))
