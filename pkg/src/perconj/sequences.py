"""Bernoulli, Genocchi, median Genocchi and Euler numbers, and Kreweras' triangle."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

# Reduced fractions with positive denominator.
ExactRational = Fraction


class SequenceError(ArithmeticError):
    pass


_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        for m in range(len(_bernoulli), n + 1):
            s = sum(comb(m + 1, k) * _bernoulli[k] for k in range(m))
            _bernoulli.append(-s / (m + 1))
        return _bernoulli[n]


def genocchi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    g = 2 * (1 - 2 ** n) * bernoulli(n)
    if g.denominator != 1:
        raise SequenceError(f"G_{n} = {g} is not an integer")
    return g.numerator


@lru_cache(maxsize=None)
def median_genocchi(odd_index: int) -> int:
    """H_{2n-1} = (-1)^n sum_j C(n, 2j+1) G_{2n-2j}."""
    if odd_index < 1 or odd_index % 2 == 0:
        raise ValueError(f"median Genocchi numbers have odd positive index, got {odd_index}")
    n = (odd_index + 1) // 2
    s = sum(comb(n, 2 * j + 1) * genocchi(2 * n - 2 * j) for j in range((n - 1) // 2 + 1))
    return (-1) ** n * s


def normalized_median_genocchi(n: int) -> int:
    """h_n = H_{2n+1} / 2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q, r = divmod(median_genocchi(2 * n + 1), 2 ** n)
    if r:
        raise SequenceError(f"H_{2 * n + 1} is not divisible by 2^{n}")
    return q


@lru_cache(maxsize=None)
def _boustrophedon_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _boustrophedon_row(n - 1)
    row = [0]
    for x in reversed(prev):
        row.append(row[-1] + x)
    return tuple(row)


def euler_number(n: int) -> int:
    """E_n, coefficient of x^n/n! in sec x + tan x (Seidel-Entringer-Arnold triangle)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for k in range(0, n, 64):  # warm the cache iteratively to avoid deep recursion
        _boustrophedon_row(k)
    return _boustrophedon_row(n)[-1]


@dataclass(frozen=True)
class KrewerasRow:
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.m - 1:
            raise ValueError("Kreweras row m must have 2m - 1 entries")

    def __getitem__(self, k: int) -> int:
        """1-based access, matching K_{2m-1,k}."""
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_palindrome(self) -> bool:
        return self.values == self.values[::-1]


@lru_cache(maxsize=None)
def _kreweras_values(m: int) -> tuple[int, ...]:
    if m == 1:
        return (1,)
    prev = (0,) + _kreweras_values(m - 1) + (0,)  # prev[i] for i = 0..2m-2
    size = 2 * m - 1
    cur = [0] * (size + 2)  # cur[0] and cur[2m] are the zero boundaries
    for k in range(1, m + 1):
        cur[2 * k - 1] = cur[2 * k - 2] + sum(prev[2 * k - 2:2 * m - 2])
        if 2 * k <= size:
            cur[2 * k] = cur[2 * k - 1] - sum(prev[1:2 * k - 1])
    return tuple(cur[1:size + 1])


def kreweras_row(m: int) -> KrewerasRow:
    """Row m of Kreweras' triangle, from the alternating bottom-row-minor recurrences."""
    if m < 1:
        raise ValueError("m must be >= 1")
    for k in range(1, m, 64):
        _kreweras_values(k)
    return KrewerasRow(m, _kreweras_values(m))


SEQUENCES = {
    "bernoulli": (bernoulli, 0),
    "genocchi": (genocchi, 1),
    "median_genocchi": (lambda k: median_genocchi(2 * k - 1), 1),
    "normalized_h": (normalized_median_genocchi, 1),
    "euler": (euler_number, 0),
}


def sequence_table(name: str, upto: int) -> list[tuple[int, int | Fraction]]:
    """(index, value) pairs from the sequence's first index through ``upto``.

    For median_genocchi the index k stands for H_{2k-1}.
    """
    try:
        f, first = SEQUENCES[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None
    return [(k, f(k)) for k in range(first, upto + 1)]
