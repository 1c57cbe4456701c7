"""Integer matrix families and structural transforms.

All indices in the public interface are 1-based.  Trigonometric signs are
classified from integer residues, so every builder is bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


class MatrixError(ValueError):
    """Raised on bad dimensions or out-of-range indices."""


@dataclass(frozen=True)
class IntMatrix:
    n_rows: int
    n_cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise MatrixError("negative dimension")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise MatrixError(
                f"expected {self.n_rows * self.n_cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise MatrixError("ragged rows")
        return cls(n_rows, n_cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, f: Callable[[int, int], int]) -> "IntMatrix":
        """Build from ``f(i, j)`` evaluated at 1-based indices."""
        return cls(
            n_rows,
            n_cols,
            tuple(f(i, j) for i in range(1, n_rows + 1) for j in range(1, n_cols + 1)),
        )

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def rows(self) -> list[list[int]]:
        c = self.n_cols
        return [list(self.entries[r * c:(r + 1) * c]) for r in range(self.n_rows)]

    @property
    def cols(self) -> list[list[int]]:
        return [list(self.entries[j::self.n_cols]) for j in range(self.n_cols)] if self.n_rows else []

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based row ``i`` and column ``j``."""
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise MatrixError(f"index ({i}, {j}) out of range for {self.n_rows}x{self.n_cols}")
        return self.entries[(i - 1) * self.n_cols + (j - 1)]

    def row(self, i: int) -> list[int]:
        if not 1 <= i <= self.n_rows:
            raise MatrixError(f"row {i} out of range")
        return self.rows[i - 1]

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.n_rows, self.n_cols, tuple(-x for x in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same_shape(self, other)
        return IntMatrix(self.n_rows, self.n_cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return matmul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:>2}" for x in r) for r in self.rows)


def _check_same_shape(a: IntMatrix, b: IntMatrix) -> None:
    if (a.n_rows, a.n_cols) != (b.n_rows, b.n_cols):
        raise MatrixError(
            f"dimension mismatch: {a.n_rows}x{a.n_cols} vs {b.n_rows}x{b.n_cols}"
        )


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise MatrixError(f"{name} must be >= 1, got {n}")


def _require_even(two_n: int) -> int:
    if two_n < 2 or two_n % 2:
        raise MatrixError(f"dimension must be a positive even integer, got {two_n}")
    return two_n // 2


def sin_sign(k: int, m: int) -> int:
    """Sign of sin(k*pi/m) for integers k and m > 0."""
    r = k % (2 * m)
    if r == 0 or r == m:
        return 0
    return 1 if r < m else -1


def tan_sign(k: int, m: int) -> int:
    """Sign of tan(k*pi/m) for odd m, where tan has no pole at integer k."""
    if m % 2 == 0:
        raise MatrixError("tan_sign needs an odd modulus")
    r = k % m
    if r == 0:
        return 0
    return 1 if 2 * r < m else -1


# ---------------------------------------------------------------------------
# Floor matrices

def build_floor_L(n: int) -> IntMatrix:
    _require_positive(n)
    return IntMatrix.from_function(n, n, lambda j, k: (2 * j - k) // n)


def build_floor_M(two_n: int) -> IntMatrix:
    _require_even(two_n)
    return IntMatrix.from_function(two_n, two_n, lambda j, k: (2 * j - k - 1) // two_n)


def build_floor_JK(n: int, delta: int = 0) -> IntMatrix:
    """Matrix of floor((j + k - delta) / n)."""
    _require_positive(n)
    if delta not in (0, 1):
        raise MatrixError("delta must be 0 or 1")
    return IntMatrix.from_function(n, n, lambda j, k: (j + k - delta) // n)


# ---------------------------------------------------------------------------
# 0/1 matrices from the Genocchi side

def gamma(n: int, i: int) -> list[int]:
    """Row of length n: i zeros followed by n - i ones."""
    return [0] * i + [1] * (n - i)


def gamma_bar(n: int, i: int) -> list[int]:
    return [1] * i + [0] * (n - i)


def build_L_tilde(m: int) -> IntMatrix:
    _require_positive(m, "m")
    size = 2 * m - 1

    def ell(i: int, j: int) -> int:
        if 1 <= i <= m - 1 and 2 * i <= j <= size:
            return 1
        if m <= i <= 2 * m - 2 and 1 <= j <= 2 * (i - m) + 2:
            return 1
        return int(i == size)

    return IntMatrix.from_function(size, size, ell)


def gamma_stack_L_tilde(m: int) -> IntMatrix:
    """The same matrix as ``build_L_tilde`` assembled from gamma rows."""
    _require_positive(m, "m")
    n = 2 * m - 1
    rows = [gamma(n, i) for i in range(1, 2 * m - 2, 2)]
    rows += [gamma_bar(n, i) for i in range(2, 2 * m - 1, 2)]
    rows.append([1] * n)
    return IntMatrix.from_rows(rows)


def build_L_star(m: int) -> IntMatrix:
    """Row rearrangement: complemented even gammas, the ones row, odd gammas."""
    _require_positive(m, "m")
    n = 2 * m - 1
    rows = [gamma_bar(n, i) for i in range(2, 2 * m - 1, 2)]
    rows.append([1] * n)
    rows += [gamma(n, i) for i in range(1, 2 * m - 2, 2)]
    return IntMatrix.from_rows(rows)


def build_L_star2(size: int) -> IntMatrix:
    """Interleaved rearrangement.

    Odd ``size = 2m - 1`` gives (g1, ~g2, g3, ~g4, ..., ~g_{2m-2}, 1).
    Even ``size = 2m`` gives (1, ~g1, g2, ~g3, ..., g_{2m-2}, ~g_{2m-1}), whose
    permanent counts Dumont permutations of the second kind.
    """
    _require_positive(size, "size")
    n = size
    if size % 2:
        rows = [gamma(n, i) if i % 2 else gamma_bar(n, i) for i in range(1, n)]
        rows.append([1] * n)
    else:
        rows = [[1] * n]
        rows += [gamma_bar(n, i) if i % 2 else gamma(n, i) for i in range(1, n)]
    return IntMatrix.from_rows(rows)


def build_M_tilde(two_n: int) -> IntMatrix:
    n = _require_even(two_n)
    return IntMatrix.from_function(
        two_n, two_n, lambda i, j: int(-(-i // 2) <= j <= n + -(-i // 2))
    )


# ---------------------------------------------------------------------------
# Sign matrices

def build_P(n: int) -> IntMatrix:
    _require_positive(n)
    return IntMatrix.from_function(n, n, lambda i, j: sin_sign(i + j, n + 1))


def build_P_inverse(two_n: int) -> IntMatrix:
    _require_even(two_n)
    s = two_n + 1

    def x(i: int, j: int) -> int:
        if i + j == s:
            return 0
        same = (i - j) % 2 == 0
        if (i + j < s and same) or (i + j > s and not same):
            return 1
        return -1

    return IntMatrix.from_function(two_n, two_n, x)


def build_Q(n: int) -> IntMatrix:
    _require_positive(n)
    return IntMatrix.from_function(n, n, lambda i, j: sin_sign(i + 2 * j, n + 1))


def build_A(two_n: int) -> IntMatrix:
    _require_even(two_n)
    return IntMatrix.from_function(two_n, two_n, lambda i, j: tan_sign(i + j, two_n + 1))


def build_A_inverse(two_n: int) -> IntMatrix:
    n = _require_even(two_n)

    def a(i: int, j: int) -> int:
        s = i + j
        if s == 2 * n + 1:
            return 0
        if (
            (s >= n + 1 and max(i, j) <= n)
            or (s >= 2 * n + 2 and (i <= n or j <= n))
            or s >= 3 * n + 2
        ):
            return -1
        return 1

    return IntMatrix.from_function(two_n, two_n, a)


def build_J(n: int) -> IntMatrix:
    _require_positive(n)
    return IntMatrix.from_function(n, n, lambda i, j: int(i + j == n + 1))


def build_identity(n: int) -> IntMatrix:
    if n < 0:
        raise MatrixError("negative dimension")
    return IntMatrix.from_function(n, n, lambda i, j: int(i == j))


def build_ones(n_rows: int, n_cols: int | None = None) -> IntMatrix:
    n_cols = n_rows if n_cols is None else n_cols
    return IntMatrix(n_rows, n_cols, (1,) * (n_rows * n_cols))


def build_H_sign(n: int) -> IntMatrix:
    _require_positive(n)
    return IntMatrix.from_function(n, n, lambda i, j: -1 if (i + j) % 2 else 1)


def build_U_tilde(two_n: int) -> IntMatrix:
    n = _require_even(two_n)
    return IntMatrix.from_function(two_n, two_n, lambda i, j: 1 if (i <= n) == (j <= n) else -1)


def alpha(n: int, i: int) -> list[int]:
    """Column of length n with its zero at position n - i, ones above, minus ones below."""
    if not 0 <= i <= n - 1:
        raise MatrixError(f"alpha index {i} out of range for n={n}")
    z = n - i
    return [1] * (z - 1) + [0] + [-1] * (n - z)


def q_column_form(n: int) -> IntMatrix:
    """Q assembled column by column from the alpha vectors."""
    _require_positive(n)
    h, odd = divmod(n, 2)
    cols = [alpha(n, i) for i in range(1, 2 * h, 2)]
    if odd:
        cols.append([-1] * n)
        cols += [[-x for x in alpha(n, i)] for i in range(1, 2 * h, 2)]
    else:
        cols += [[-x for x in alpha(n, i)] for i in range(0, 2 * h - 1, 2)]
    return from_columns(cols)


def from_columns(cols: Sequence[Sequence[int]]) -> IntMatrix:
    if not cols:
        return IntMatrix(0, 0, ())
    return IntMatrix.from_rows([list(r) for r in zip(*cols)])


def block(blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a block matrix from a grid of equally shaped blocks."""
    rows: list[list[int]] = []
    for brow in blocks:
        for r in range(brow[0].n_rows):
            rows.append([x for b in brow for x in b.rows[r]])
    return IntMatrix.from_rows(rows)


def a_block_form(two_n: int) -> IntMatrix:
    n = _require_even(two_n)
    p, j = build_P(n), build_J(n)
    return block([[p - j, -p], [-p, p + j]])


def a_inverse_block_form(two_n: int) -> IntMatrix:
    n = _require_even(two_n)
    p, j = build_P(n), build_J(n)
    return block([[p - j, p], [p, p + j]])


# ---------------------------------------------------------------------------
# Transforms

def hadamard(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    _check_same_shape(a, b)
    return IntMatrix(a.n_rows, a.n_cols, tuple(x * y for x, y in zip(a.entries, b.entries)))


def phi_action(a: IntMatrix, k: int, l: int) -> IntMatrix:
    """Negate row ``k`` and column ``l``; entry (k, l) is negated twice."""
    if not (1 <= k <= a.n_rows and 1 <= l <= a.n_cols):
        raise MatrixError(f"phi index ({k}, {l}) out of range")
    return IntMatrix.from_function(
        a.n_rows, a.n_cols,
        lambda i, j: a.entry(i, j) * (-1 if i == k else 1) * (-1 if j == l else 1),
    )


def compose_phi(a: IntMatrix, pairs: Iterable[tuple[int, int]]) -> IntMatrix:
    """Apply phi_action for every pair, tracking only the sign parity per entry."""
    flips_row = [0] * (a.n_rows + 1)
    flips_col = [0] * (a.n_cols + 1)
    flips_cell: dict[tuple[int, int], int] = {}
    for k, l in pairs:
        if not (1 <= k <= a.n_rows and 1 <= l <= a.n_cols):
            raise MatrixError(f"phi index ({k}, {l}) out of range")
        flips_row[k] += 1
        flips_col[l] += 1
        flips_cell[(k, l)] = flips_cell.get((k, l), 0) + 1
    return IntMatrix.from_function(
        a.n_rows, a.n_cols,
        lambda i, j: a.entry(i, j)
        * (-1) ** ((flips_row[i] + flips_col[j] - 2 * flips_cell.get((i, j), 0)) % 2),
    )


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.n_cols != b.n_rows:
        raise MatrixError(f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}")
    bc = b.cols
    return IntMatrix.from_rows(
        [[sum(x * y for x, y in zip(r, c)) for c in bc] for r in a.rows]
    )


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(a.n_cols, a.n_rows, tuple(x for c in a.cols for x in c))


def flip_rows(a: IntMatrix) -> IntMatrix:
    return IntMatrix.from_rows(a.rows[::-1]) if a.n_rows else a


def flip_cols(a: IntMatrix) -> IntMatrix:
    return IntMatrix.from_rows([r[::-1] for r in a.rows]) if a.n_rows else a


def delete(a: IntMatrix, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> IntMatrix:
    """Remove the given 1-based rows and columns."""
    rows, cols = set(rows), set(cols)
    for i in rows:
        if not 1 <= i <= a.n_rows:
            raise MatrixError(f"row {i} out of range")
    for j in cols:
        if not 1 <= j <= a.n_cols:
            raise MatrixError(f"column {j} out of range")
    keep_c = [j for j in range(a.n_cols) if j + 1 not in cols]
    kept = [[r[j] for j in keep_c] for i, r in enumerate(a.rows) if i + 1 not in rows]
    return IntMatrix(len(kept), len(keep_c), tuple(x for r in kept for x in r))


def minor(a: IntMatrix, i: int, j: int) -> IntMatrix:
    return delete(a, rows=(i,), cols=(j,))


def permute_rows(a: IntMatrix, order: Sequence[int]) -> IntMatrix:
    """Rows of the result are rows ``order[0], order[1], ...`` (1-based) of ``a``."""
    rows = a.rows
    return IntMatrix.from_rows([rows[i - 1] for i in order])


def permute_cols(a: IntMatrix, order: Sequence[int]) -> IntMatrix:
    return transpose(permute_rows(transpose(a), order))


def scale_row(a: IntMatrix, i: int, c: int) -> IntMatrix:
    rows = a.rows
    rows[i - 1] = [c * x for x in rows[i - 1]]
    return IntMatrix.from_rows(rows)


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if not a.is_square:
        raise MatrixError("determinant of a non-square matrix")
    n = a.n_rows
    if n == 0:
        return 1
    m = a.rows
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# Families addressable by name from the CLI; each maps the user-facing n to a matrix.
FAMILIES: dict[str, Callable[[int], IntMatrix]] = {
    "L": build_floor_L,
    "M": build_floor_M,
    "L_tilde": build_L_tilde,
    "L_star": build_L_star,
    "L_star2": build_L_star2,
    "M_tilde": build_M_tilde,
    "P": build_P,
    "P_inv": build_P_inverse,
    "Q": build_Q,
    "A": build_A,
    "A_inv": build_A_inverse,
    "J": build_J,
    "H": build_H_sign,
    "U_tilde": build_U_tilde,
    "JK0": lambda n: build_floor_JK(n, 0),
    "JK1": lambda n: build_floor_JK(n, 1),
}


def build_family(family: str, n: int) -> IntMatrix:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise MatrixError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    return builder(n)
