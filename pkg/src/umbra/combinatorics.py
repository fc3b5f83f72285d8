"""Enumeration kernels: compositions, set partitions, partition types, permutations.

Set partitions are generated through restricted growth strings: a string
``a[0..n-1]`` with ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])`` encodes the
partition whose block ``b`` holds every ``i`` with ``a[i] == b``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterator


def compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``n``.

    With ``parts`` given only tuples of that length are produced.
    """
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts is not None and (parts <= 0 or parts > n):
        return

    def rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(1, remaining - slots + 2):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    if parts is None:
        for p in range(1, n + 1):
            yield from rec(n, p)
    else:
        yield from rec(n, parts)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    a = [0] * n
    maxes = [0] * n  # maxes[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        # rightmost position that can be incremented
        i = n - 1
        while i > 0 and a[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        maxes[i] = max(maxes[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            maxes[j] = maxes[i]


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``{0, ..., n-1}`` as tuples of blocks."""
    for s in restricted_growth_strings(n):
        k = max(s) + 1 if s else 0
        blocks = [[] for _ in range(k)]
        for i, b in enumerate(s):
            blocks[b].append(i)
        yield tuple(tuple(b) for b in blocks)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def partition_types(n: int) -> Iterator[tuple[int, ...]]:
    """Vectors ``(j_1, ..., j_n)`` with ``sum k * j_k == n``."""

    def rec(k, remaining):
        if k == 0:
            if remaining == 0:
                yield ()
            return
        for j in range(remaining // k + 1):
            for rest in rec(k - 1, remaining - j * k):
                yield rest + (j,)

    if n == 0:
        yield ()
        return
    yield from rec(n, n)


def partition_type_count(j: tuple[int, ...]) -> int:
    """Number of set partitions of ``{1..n}`` with ``j_k`` blocks of size ``k``."""
    n = sum((k + 1) * jk for k, jk in enumerate(j))
    denom = prod(factorial(jk) * factorial(k + 1) ** jk for k, jk in enumerate(j))
    return factorial(n) // denom


def cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(tuple(cyc))
    return out


def permutations_with_cycles(n: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    for p in permutations(range(n)):
        yield p, cycles(p)


def falling(n: int, k: int) -> int:
    """Falling factorial ``n (n-1) ... (n-k+1)``."""
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def double_factorial_odd(r: int) -> int:
    """``(2r-1)!!``, with ``(-1)!! = 1``."""
    return prod(range(1, 2 * r, 2))
