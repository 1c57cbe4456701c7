"""Exact permanent engines: brute force, Ryser (Gray code), and column-mask DP."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .matrices import IntMatrix

ENGINES = ("naive", "ryser", "dp")

# Size guards per engine; mutable so callers can tune them.
LIMITS = {"naive": 11, "ryser": 30, "dp": 28}
# Largest DP frontier (number of live column masks) before giving up.
DP_MAX_STATES = 1 << 23
# Ryser switches from the pure-integer loop to the vectorized modular kernel at this side.
RYSER_VECTOR_MIN = 12


class PermanentError(ValueError):
    pass


class SizeGuardError(PermanentError):
    pass


class MemoryBudgetError(PermanentError):
    pass


@dataclass(frozen=True)
class PermanentResult:
    value: int
    engine: str
    elapsed: float


def _check(a: IntMatrix, engine: str, limit: Optional[int]) -> int:
    if not a.is_square:
        raise PermanentError(f"permanent needs a square matrix, got {a.n_rows}x{a.n_cols}")
    limit = LIMITS[engine] if limit is None else limit
    if a.n_rows > limit:
        raise SizeGuardError(f"{engine} engine limited to side {limit}, got {a.n_rows}")
    return a.n_rows


def per_naive(a: IntMatrix, limit: Optional[int] = None) -> int:
    """Sum over all n! permutations of the entry products."""
    n = _check(a, "naive", limit)
    rows = a.rows
    return sum(math.prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


# ---------------------------------------------------------------------------
# Ryser

def ryser_segment(a: IntMatrix, start: int, stop: int) -> int:
    """Signed Ryser partial sum over Gray-code indices ``start <= t < stop``.

    The full permanent is ``(-1)**n`` times the sum over ``[0, 2**n)``, so
    disjoint contiguous segments can be evaluated independently and added.
    """
    n = a.n_rows
    cols = a.cols
    g = start ^ (start >> 1)
    sums = [sum(r[j] for j in range(n) if g >> j & 1) for r in a.rows]
    total = 0
    t = start
    if t < stop:
        p = math.prod(sums)
        total += -p if t & 1 else p
    for t in range(start + 1, stop):
        b = (t & -t).bit_length() - 1
        col = cols[b]
        g ^= 1 << b
        if g >> b & 1:
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        p = math.prod(sums)
        if p:
            total += -p if t & 1 else p
    return total


def _ryser_exact(a: IntMatrix) -> int:
    n = a.n_rows
    if n == 0:
        return 1
    total = ryser_segment(a, 0, 1 << n)
    return -total if n & 1 else total


_PRIMES: list[int] = []


def _primes_below_2_31(count: int) -> list[int]:
    """Largest primes below 2**31, by trial division."""
    c = _PRIMES[-1] - 2 if _PRIMES else (1 << 31) - 1
    while len(_PRIMES) < count:
        if all(c % d for d in range(3, math.isqrt(c) + 1, 2)):
            _PRIMES.append(c)
        c -= 2
    return _PRIMES[:count]


def permanent_bound(a: IntMatrix) -> int:
    """Upper bound on |per(a)|: the product of absolute row sums."""
    return math.prod(sum(abs(x) for x in r) for r in a.rows)


def _crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        # x + m*k = r (mod p)
        k = ((r - x) * pow(m, -1, p)) % p
        x += m * k
        m *= p
    return x if 2 * x < m else x - m


def _ryser_vectorized(a: IntMatrix) -> int:
    """Ryser over contiguous Gray-code segments in lockstep, modulo several primes.

    Segments are aligned on 2**low boundaries, so within every segment the
    flipped column at each step is the same; only the direction of the
    topmost low bit depends on the segment.  Residues are combined by CRT
    with enough primes to cover twice the permanent bound, so the result is
    exact.
    """
    n = a.n_rows
    if n < 2:
        return _ryser_exact(a)
    bound = permanent_bound(a)
    if bound == 0:
        return 0
    k, prod_p = 0, 1
    while prod_p <= 2 * bound:
        k += 1
        prod_p = math.prod(_primes_below_2_31(k))
    primes = np.array(_primes_below_2_31(k), dtype=np.int64)
    pcol = primes[:, None, None]

    low = max(1, min(n - 1, (n + 1) // 2 - 1))
    high = n - low
    n_seg = 1 << high

    # A reduced per prime: shape (k, n_rows, n_cols), residues in [0, p)
    mat = np.array([[[x % int(p) for x in r] for r in a.rows] for p in primes], dtype=np.int64)

    seg = np.arange(n_seg, dtype=np.int64)
    start_gray = ((seg ^ (seg >> 1)) << low) | ((seg & 1) << (low - 1))
    bits = ((start_gray[:, None] >> np.arange(n, dtype=np.int64)) & 1)
    # sums[q, s, i] = sum_j bits[s, j] * A_q[i, j]
    sums = np.einsum("sj,qij->qsi", bits, mat)
    seg_parity = np.where(seg & 1, 1, -1).astype(np.int64)[None, :, None]

    acc_total = np.zeros(k, dtype=np.int64)

    def add_products(sign: int) -> None:
        red = sums % pcol
        acc = red[:, :, 0].copy()
        for i in range(1, n):
            acc *= red[:, :, i]
            acc %= primes[:, None]
        s = acc.sum(axis=1) % primes
        acc_total[:] = (acc_total + (s if sign > 0 else primes - s)) % primes

    add_products(+1)
    g_low = 0  # gray bits below low-1 are shared by all segments
    for u in range(1, 1 << low):
        b = (u & -u).bit_length() - 1
        col = mat[:, :, b][:, None, :]
        if b == low - 1:
            # new value of gray bit b is (u_b xor seg_0); u_b is 1 here
            sums += np.where(seg_parity > 0, -1, 1) * col
        else:
            g_low ^= 1 << b
            if g_low >> b & 1:
                sums += col
            else:
                sums -= col
        add_products(-1 if u & 1 else 1)

    total = _crt([int(x) for x in acc_total], [int(p) for p in primes])
    return -total if n & 1 else total


def per_ryser(a: IntMatrix, limit: Optional[int] = None, vectorized: Optional[bool] = None) -> int:
    n = _check(a, "ryser", limit)
    if vectorized is None:
        vectorized = n >= RYSER_VECTOR_MIN
    return _ryser_vectorized(a) if vectorized else _ryser_exact(a)


# ---------------------------------------------------------------------------
# Column-mask dynamic programming

def _dp_frontier(rows: Sequence[Sequence[int]], n_cols: int, max_states: int) -> dict[int, int]:
    frontier = {0: 1}
    for r in rows:
        nz = [(1 << j, x) for j, x in enumerate(r) if x]
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, val in frontier.items():
            for bit, x in nz:
                if not mask & bit:
                    key = mask | bit
                    nxt[key] = get(key, 0) + val * x
        frontier = {m: v for m, v in nxt.items() if v}
        if len(frontier) > max_states:
            raise MemoryBudgetError(f"DP frontier exceeded {max_states} states")
        if not frontier:
            break
    return frontier


def per_dp(a: IntMatrix, limit: Optional[int] = None, max_states: Optional[int] = None) -> int:
    """Row-by-row expansion keyed on the set of used columns.

    Zero entries are never expanded, and rows are taken sparsest first, which
    keeps the frontier small on banded 0/1 families.
    """
    n = _check(a, "dp", limit)
    if n == 0:
        return 1
    rows = sorted(a.rows, key=lambda r: sum(1 for x in r if x))
    frontier = _dp_frontier(rows, n, DP_MAX_STATES if max_states is None else max_states)
    return frontier.get((1 << n) - 1, 0)


_ENGINE_FUNCS = {"naive": per_naive, "ryser": per_ryser, "dp": per_dp}


def choose_engine(n: int) -> str:
    if n <= 8:
        return "naive"
    if n <= 24:
        return "dp"
    return "ryser"


def per(a: IntMatrix, engine: Optional[str] = None) -> PermanentResult:
    """Permanent with engine dispatch and timing. ``engine`` may be None or 'auto'."""
    if not a.is_square:
        raise PermanentError(f"permanent needs a square matrix, got {a.n_rows}x{a.n_cols}")
    if engine in (None, "auto"):
        engine = choose_engine(a.n_rows)
    if engine not in _ENGINE_FUNCS:
        raise PermanentError(f"unknown engine {engine!r}")
    t0 = time.perf_counter()
    value = _ENGINE_FUNCS[engine](a)
    return PermanentResult(value, engine, time.perf_counter() - t0)


def permanent(a: IntMatrix, engine: Optional[str] = None) -> int:
    return per(a, engine).value


def bottom_row_minor_permanents(a: IntMatrix, engine: Optional[str] = None) -> list[int]:
    """Permanents of the minors obtained by deleting the last row and each column.

    Without an explicit engine, a single DP pass over the first n-1 rows
    yields every minor at once: the frontier mask missing column i holds the
    i-th minor's permanent.
    """
    if not a.is_square:
        raise PermanentError("bottom-row minors need a square matrix")
    n = a.n_rows
    if n == 0:
        raise PermanentError("empty matrix has no bottom row")
    if engine not in (None, "auto"):
        from .matrices import minor
        return [per(minor(a, n, i), engine).value for i in range(1, n + 1)]
    _check(a, "dp", None)
    frontier = _dp_frontier(a.rows[:-1], n, DP_MAX_STATES)
    full = (1 << n) - 1
    return [frontier.get(full ^ (1 << i), 0) for i in range(n)]
