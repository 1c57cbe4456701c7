"""Permutations, restricted classes, statistics, and bijections.

Permutations are in one-line notation over [n] = {1, ..., n}.  Everything
here is brute force by design: these counts serve as oracles for the
matrix-side computations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional, Sequence

BRUTE_FORCE_LIMIT = 10


class PermutationError(ValueError):
    pass


class Permutation(tuple):
    """A bijection on [n], stored as the tuple of images (pi(1), ..., pi(n))."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"{images} is not a permutation of [1..{len(images)}]")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """'315624' (single digits) or '3,1,5,6,2,4'."""
        text = text.strip()
        parts = text.replace(" ", ",").split(",") if ("," in text or " " in text) else list(text)
        return cls(int(x) for x in parts if x)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        return Permutation._trusted(tuple(self[v - 1] for v in other))

    def cycles(self) -> list[tuple[int, ...]]:
        """Standard cycle form: each cycle ends with its smallest element,
        cycles ordered by increasing smallest element."""
        seen = set()
        out = []
        for c in range(1, len(self) + 1):
            if c in seen:
                continue
            cyc = []
            x = self[c - 1]
            while True:
                cyc.append(x)
                seen.add(x)
                if x == c:
                    break
                x = self[x - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


# ---------------------------------------------------------------------------
# Statistics (all take any sequence of 1-based images)

def stat_exc(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v > i)


def stat_iexc(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v < i)


def stat_wexc(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v >= i)


def stat_fix(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if v == i)


def stat_des_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def stat_des(p: Sequence[int]) -> int:
    return len(stat_des_set(p))


def stat_exc_P(p: Sequence[int]) -> int:
    """Parity-twisted excedances: up-steps of odd length and down-steps of even length."""
    c = 0
    for i, v in enumerate(p, 1):
        d = v - i
        if (d > 0 and d % 2 == 1) or (d < 0 and d % 2 == 0):
            c += 1
    return c


def stat_exph(p: Sequence[int]) -> int:
    """Excedances read off the sign pattern of the inverse tangent-sign matrix.

    With half = len(p) / 2, position i counts when
      I   1 <= i < p(i) <= half
      II  half < i and i - half <= p(i) <= half
      III half < i < p(i)
      IV  i < p(i) - half, with p(i) > half
    """
    if len(p) % 2:
        raise PermutationError("exph is defined on permutations of even length")
    h = len(p) // 2
    c = 0
    for i, v in enumerate(p, 1):
        if i <= h:
            if i < v <= h or (v > h and i < v - h):
                c += 1
        elif i - h <= v <= h or v > i:
            c += 1
    return c


STATS: dict[str, Callable[[Sequence[int]], int]] = {
    "exc": stat_exc,
    "iexc": stat_iexc,
    "wexc": stat_wexc,
    "fix": stat_fix,
    "des": stat_des,
    "exc_P": stat_exc_P,
    "exph": stat_exph,
}


# ---------------------------------------------------------------------------
# Bijections

def phi_map(x: int, n: int) -> int:
    """Odd 2k-1 goes to n + k, even 2k goes to k, as a bijection on [2n]."""
    if not 1 <= x <= 2 * n:
        raise PermutationError(f"{x} outside [1, {2 * n}]")
    k, r = divmod(x + 1, 2)
    return n + k if r == 0 else x // 2


def bijection_Phi(p: Sequence[int]) -> Permutation:
    """Relabel both lines of the two-line notation by phi_map: sigma = phi o p o phi^-1."""
    if len(p) % 2:
        raise PermutationError("Phi is defined on permutations of even length")
    n = len(p) // 2
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[phi_map(i, n) - 1] = phi_map(v, n)
    return Permutation._trusted(tuple(out))


def foata_hat(p: Sequence[int]) -> Permutation:
    """Erase the parentheses of the standard cycle form and append 2m + 1."""
    if len(p) % 2:
        raise PermutationError("foata_hat is defined on permutations of even length")
    p = p if isinstance(p, Permutation) else Permutation(p)
    word = [x for cyc in p.cycles() for x in cyc]
    word.append(len(p) + 1)
    return Permutation._trusted(tuple(word))


# ---------------------------------------------------------------------------
# Classes

def _ceil_half(i: int) -> int:
    return (i + 1) // 2


def is_derangement(p: Sequence[int]) -> bool:
    return all(v != i for i, v in enumerate(p, 1))


def is_dumont1(p: Sequence[int]) -> bool:
    """Descent at i exactly when the letter p(i) is even, for i < n."""
    return all((p[i] > p[i + 1]) == (p[i] % 2 == 0) for i in range(len(p) - 1))


def is_dumont2(p: Sequence[int]) -> bool:
    """Even positions are strict anti-excedances, odd positions weak excedances."""
    return all((v < i) if i % 2 == 0 else (v >= i) for i, v in enumerate(p, 1))


def is_s_tilde(p: Sequence[int]) -> bool:
    n = len(p) // 2
    if len(p) % 2:
        return False
    if any(p[i - 1] < p[i] for i in range(1, 2 * n, 2)):
        return False
    return all(_ceil_half(i) <= v <= n + _ceil_half(i) for i, v in enumerate(p, 1))


def _m_of(p: Sequence[int]) -> int:
    return (len(p) + 1) // 2


def is_cor24(p: Sequence[int]) -> bool:
    """p(i) avoids [floor(i/2)+1, ceil(i/2)+m-2]; an empty interval is no constraint."""
    if len(p) % 2 == 0:
        return False
    m = _m_of(p)
    return all(not (i // 2 + 1 <= v <= _ceil_half(i) + m - 2) for i, v in enumerate(p, 1))


def is_cor25(p: Sequence[int]) -> bool:
    if len(p) % 2 == 0:
        return False
    m = _m_of(p)
    return all(_ceil_half(i) <= v <= m + i // 2 for i, v in enumerate(p, 1))


def is_cor26(p: Sequence[int]) -> bool:
    if len(p) % 2 == 0:
        return False
    last = len(p)
    return all((v > i) == (i < last and i % 2 == 1) for i, v in enumerate(p, 1))


@dataclass(frozen=True)
class PermClass:
    label: str
    predicate: Callable[[Sequence[int]], bool]
    # partial check on a prefix, used to prune; must never reject a prefix of a member
    prefix_ok: Optional[Callable[[tuple[int, ...], int], bool]] = None
    # 1-based position or value marked by the Kreweras corollaries
    marker: Optional[Callable[[Sequence[int]], int]] = field(default=None, compare=False)


def _prefix_derangement(prefix: tuple[int, ...], n: int) -> bool:
    return prefix[-1] != len(prefix)


def _prefix_dumont1(prefix: tuple[int, ...], n: int) -> bool:
    if len(prefix) < 2:
        return True
    a, b = prefix[-2], prefix[-1]
    return (a > b) == (a % 2 == 0)


def _prefix_dumont2(prefix: tuple[int, ...], n: int) -> bool:
    i, v = len(prefix), prefix[-1]
    return v < i if i % 2 == 0 else v >= i


def _prefix_s_tilde(prefix: tuple[int, ...], n: int) -> bool:
    i, v = len(prefix), prefix[-1]
    h = n // 2
    if not _ceil_half(i) <= v <= h + _ceil_half(i):
        return False
    return i % 2 == 1 or prefix[-2] > v


def _prefix_cor24(prefix: tuple[int, ...], n: int) -> bool:
    i, v, m = len(prefix), prefix[-1], (n + 1) // 2
    return not (i // 2 + 1 <= v <= _ceil_half(i) + m - 2)


def _prefix_cor25(prefix: tuple[int, ...], n: int) -> bool:
    i, v, m = len(prefix), prefix[-1], (n + 1) // 2
    return _ceil_half(i) <= v <= m + i // 2


def _prefix_cor26(prefix: tuple[int, ...], n: int) -> bool:
    i, v = len(prefix), prefix[-1]
    return (v > i) == (i < n and i % 2 == 1)


CLASSES: dict[str, PermClass] = {
    "all": PermClass("all", lambda p: True),
    "derangements": PermClass("derangements", is_derangement, _prefix_derangement),
    "dumont1": PermClass("dumont1", is_dumont1, _prefix_dumont1, lambda p: p[0] - 1),
    "dumont2": PermClass("dumont2", is_dumont2, _prefix_dumont2, lambda p: p[0] - 1),
    "s_tilde": PermClass("s_tilde", is_s_tilde, _prefix_s_tilde),
    "cor24": PermClass("cor24", is_cor24, _prefix_cor24, lambda p: p.index(len(p)) + 1),
    "cor25": PermClass("cor25", is_cor25, _prefix_cor25, lambda p: p.index(_m_of(p)) + 1),
    "cor26": PermClass("cor26", is_cor26, _prefix_cor26, lambda p: p[-1]),
}

# Classes only meaningful for one parity of n.
_EVEN_ONLY = {"dumont2", "s_tilde"}
_ODD_ONLY = {"cor24", "cor25", "cor26"}


def get_class(label: str) -> PermClass:
    try:
        return CLASSES[label]
    except KeyError:
        raise PermutationError(f"unknown class {label!r}; choose from {', '.join(CLASSES)}") from None


def _budget(n: int, limit: Optional[int]) -> None:
    limit = BRUTE_FORCE_LIMIT if limit is None else limit
    if n < 0:
        raise PermutationError("negative length")
    if n > limit:
        raise PermutationError(f"brute-force budget is n <= {limit}, got {n}")


def _filtered(cls: PermClass, n: int) -> Iterator[tuple[int, ...]]:
    for p in permutations(range(1, n + 1)):
        if cls.predicate(p):
            yield p


def _pruned(cls: PermClass, n: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic depth-first search, cutting prefixes that already fail."""
    if n == 0:
        yield ()
        return
    ok = cls.prefix_ok
    used = [False] * (n + 1)
    prefix: list[int] = []
    # stack of next candidate value to try at each depth
    nxt = [1]
    while nxt:
        depth = len(nxt) - 1
        v = nxt[-1]
        while v <= n and used[v]:
            v += 1
        if v > n:
            nxt.pop()
            if prefix:
                used[prefix.pop()] = False
            continue
        nxt[-1] = v + 1
        prefix.append(v)
        t = tuple(prefix)
        if ok(t, n):
            if depth + 1 == n:
                if cls.predicate(t):
                    yield t
                prefix.pop()
            else:
                used[v] = True
                nxt.append(1)
        else:
            prefix.pop()


def _raw(label: str, n: int, limit: Optional[int], prune: bool) -> Iterator[tuple[int, ...]]:
    _budget(n, limit)
    cls = get_class(label)
    if (label in _EVEN_ONLY and n % 2) or (label in _ODD_ONLY and n % 2 == 0):
        return iter(())
    if prune and cls.prefix_ok is not None:
        return _pruned(cls, n)
    return _filtered(cls, n)


def enumerate_class(label: str, n: int, limit: Optional[int] = None, prune: bool = True) -> Iterator[Permutation]:
    """Lazily yield the members of a class of permutations of [n], in lexicographic order."""
    return (Permutation._trusted(p) for p in _raw(label, n, limit, prune))


def count_class(label: str, n: int, limit: Optional[int] = None) -> int:
    return sum(1 for _ in _raw(label, n, limit, True))


def sign_balance(label: str, stat: str, n: int, limit: Optional[int] = None) -> int:
    """Sum of (-1)^stat over the class."""
    f = STATS[stat]
    return sum(-1 if f(p) & 1 else 1 for p in _raw(label, n, limit, True))


@dataclass
class StatDistribution:
    n: int
    stats: tuple[str, ...]
    entries: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def evaluate(self, *values: int) -> int:
        """Evaluate the generating polynomial sum c * x1^s1 * x2^s2 ... at integers."""
        total = 0
        for key, c in self.entries.items():
            term = c
            for x, e in zip(values, key):
                term *= x ** e
            total += term
        return total


def joint_distribution(label: str, stats: Sequence[str], n: int, limit: Optional[int] = None) -> StatDistribution:
    fs = [STATS[s] for s in stats]
    counts = Counter(tuple(f(p) for f in fs) for p in _raw(label, n, limit, True))
    return StatDistribution(n, tuple(stats), dict(sorted(counts.items())))


def marked_counts(label: str, n: int, limit: Optional[int] = None) -> list[int]:
    """Counts of class members by marked value k = 1..n-? (list index k-1).

    For dumont1 and dumont2 the marker is p(1) - 1; for the marked classes
    it is the position or value the corresponding statement fixes.
    """
    cls = get_class(label)
    if cls.marker is None:
        raise PermutationError(f"class {label!r} has no marker")
    c = Counter(cls.marker(p) for p in _raw(label, n, limit, True))
    size = n - 2 if label == "dumont1" else (n - 1 if label == "dumont2" else n)
    return [c.get(k, 0) for k in range(1, size + 1)]


def kreweras_count(m: int, k: int, limit: int = 11) -> int:
    """#{sigma in D_{2m+1} : sigma(1) = k + 1} by brute force."""
    if not 1 <= k <= 2 * m - 1:
        raise PermutationError(f"k must lie in [1, {2 * m - 1}]")
    _budget(2 * m + 1, limit)
    return sum(1 for p in _raw("dumont1", 2 * m + 1, limit, True) if p[0] == k + 1)


def dellac_count(n: int, limit: int = 6) -> int:
    """Number of Dellac configurations of size n.

    Rows r = 1..2n each get one dot, in a column c with c <= r <= n + c, and
    every column receives exactly two dots.  Counted row by row on the vector
    of column fill levels.
    """
    if n < 0:
        raise PermutationError("negative size")
    if n > limit:
        raise PermutationError(f"Dellac budget is n <= {limit}")
    states: Counter = Counter({(0,) * n: 1})
    for r in range(1, 2 * n + 1):
        nxt: Counter = Counter()
        for fill, cnt in states.items():
            for c in range(max(1, r - n), min(n, r) + 1):
                if fill[c - 1] < 2:
                    f = list(fill)
                    f[c - 1] += 1
                    nxt[tuple(f)] += cnt
        states = nxt
    return states.get((2,) * n, 0)


def dellac_configurations(n: int) -> Iterator[tuple[int, ...]]:
    """Each configuration as the column index chosen by rows 1..2n."""
    def rec(r: int, fill: list[int], acc: list[int]):
        if r > 2 * n:
            if all(f == 2 for f in fill):
                yield tuple(acc)
            return
        for c in range(max(1, r - n), min(n, r) + 1):
            if fill[c - 1] < 2:
                fill[c - 1] += 1
                acc.append(c)
                yield from rec(r + 1, fill, acc)
                acc.pop()
                fill[c - 1] -= 1
    yield from rec(1, [0] * n, [])


def dellac_reading(config: Sequence[int]) -> Permutation:
    """Read row heights column by column, left to right, top-down within a column."""
    n = len(config) // 2
    word = []
    for c in range(1, n + 1):
        word += sorted((r for r, cc in enumerate(config, 1) if cc == c), reverse=True)
    return Permutation(word)
