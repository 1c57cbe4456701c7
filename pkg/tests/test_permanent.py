import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perconj import matrices as mx
from perconj import permanent as pm
from perconj.matrices import IntMatrix
from perconj.permanent import (
    MemoryBudgetError, PermanentError, SizeGuardError, bottom_row_minor_permanents, per,
    per_dp, per_naive, per_ryser, ryser_segment,
)

from conftest import sign_matrix

M = IntMatrix.from_rows


def square_matrices(max_side=6, values=st.integers(-1, 1)):
    return st.integers(1, max_side).flatmap(
        lambda n: st.lists(st.lists(values, min_size=n, max_size=n), min_size=n, max_size=n).map(M)
    )


def test_naive_examples():
    assert per_naive(M([[-1]])) == -1
    assert per_naive(M([[1, 1], [1, 1]])) == 2
    # the six permutation terms of [[0,0,-1],[1,0,0],[1,1,1]]: only 3->? ... 1->3, 2->1, 3->2
    assert per_naive(mx.build_floor_L(3)) == -1
    assert per_naive(IntMatrix(0, 0, ())) == 1


def test_ryser_examples():
    assert per_ryser(mx.build_L_tilde(3)) == 17
    assert per_ryser(mx.build_L_tilde(3)) == per_naive(mx.build_L_tilde(3))
    assert per_ryser(mx.build_floor_JK(6, 0)) == 33
    assert per_ryser(mx.build_floor_JK(7, 1)) == 1


def test_dp_examples():
    assert per_dp(mx.build_M_tilde(4)) == 8 == per_naive(mx.build_M_tilde(4))
    assert per_dp(mx.build_floor_M(4)) == 2
    assert per_dp(M([[0] * 3] * 3)) == 0


def test_dispatch_examples():
    assert per(mx.build_P(2)).value == -1
    assert per(mx.build_Q(1)).value == -1
    assert per(mx.build_A(2)).value == -1
    r = per(mx.build_P(4), "ryser")
    assert r.engine == "ryser" and r.value == 5 and r.elapsed >= 0


def test_dispatch_thresholds():
    assert pm.choose_engine(8) == "naive"
    assert pm.choose_engine(9) == "dp"
    assert pm.choose_engine(24) == "dp"
    assert pm.choose_engine(25) == "ryser"


def test_engine_agreement_seeded():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 8)
        a = sign_matrix(rng, n)
        v = per_naive(a)
        assert per_ryser(a, vectorized=False) == v
        assert per_ryser(a, vectorized=True) == v
        assert per_dp(a) == v


@settings(max_examples=150, deadline=None)
@given(square_matrices(6, st.integers(-50, 50)))
def test_engine_agreement_wide_entries(a):
    v = per_naive(a)
    assert per_ryser(a, vectorized=False) == v
    assert per_ryser(a, vectorized=True) == v
    assert per_dp(a) == v


def test_vectorized_ryser_big_entries():
    rng = random.Random(3)
    a = M([[rng.randint(-10 ** 12, 10 ** 12) for _ in range(6)] for _ in range(6)])
    assert per_ryser(a, vectorized=True) == per_naive(a)


@pytest.mark.parametrize("n", [9, 10, 12, 13])
def test_ryser_kernels_agree_midsize(n):
    a = sign_matrix(random.Random(n), n)
    assert per_ryser(a, vectorized=True) == per_ryser(a, vectorized=False) == per_dp(a)


def test_ryser_segments_sum():
    a = sign_matrix(random.Random(11), 7)
    cuts = [0, 5, 37, 64, 100, 128]
    parts = sum(ryser_segment(a, lo, hi) for lo, hi in zip(cuts, cuts[1:]))
    assert -parts == per_naive(a)


@settings(max_examples=60, deadline=None)
@given(square_matrices(6), st.data())
def test_row_and_column_permutation_invariance(a, data):
    n = a.n_rows
    order = data.draw(st.permutations(list(range(1, n + 1))))
    v = per_naive(a)
    assert per_naive(mx.permute_rows(a, order)) == v
    assert per_naive(mx.permute_cols(a, order)) == v
    assert per_naive(mx.transpose(a)) == v


@settings(max_examples=60, deadline=None)
@given(square_matrices(6), st.integers(-5, 5), st.data())
def test_row_scaling(a, c, data):
    i = data.draw(st.integers(1, a.n_rows))
    assert per_naive(mx.scale_row(a, i, c)) == c * per_naive(a)


@settings(max_examples=60, deadline=None)
@given(square_matrices(6), st.data())
def test_sign_action_and_hadamard_invariance(a, data):
    n = a.n_rows
    k = data.draw(st.integers(1, n))
    l = data.draw(st.integers(1, n))
    v = per_naive(a)
    assert per_naive(mx.phi_action(a, k, l)) == v
    assert per_naive(mx.hadamard(a, mx.build_H_sign(n))) == v
    if n % 2 == 0:
        assert per_naive(mx.hadamard(a, mx.build_U_tilde(n))) == v


def test_repeated_column_zero_replacement():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 6)
        rows = [[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)]
        c1, c2 = rng.sample(range(n), 2)
        z = rng.randrange(n)
        for r in rows:
            r[c2] = r[c1]
        rows[z][c1] = rows[z][c2] = 0
        before = per_naive(M(rows))
        rows[z][c1], rows[z][c2] = 1, -1
        assert per_naive(M(rows)) == before


def test_bottom_row_minors_on_L_tilde():
    assert bottom_row_minor_permanents(mx.build_L_tilde(2)) == [1, 1, 1]
    assert bottom_row_minor_permanents(mx.build_L_tilde(3)) == [3, 3, 5, 3, 3]
    assert bottom_row_minor_permanents(mx.build_L_tilde(4)) == [17, 17, 31, 25, 31, 17, 17]
    assert bottom_row_minor_permanents(mx.build_L_tilde(1)) == [1]


@pytest.mark.parametrize("engine", ["naive", "ryser", "dp"])
def test_bottom_row_minors_per_engine(engine):
    a = sign_matrix(random.Random(2), 6)
    assert bottom_row_minor_permanents(a, engine) == bottom_row_minor_permanents(a)


@settings(max_examples=40, deadline=None)
@given(square_matrices(6))
def test_bottom_row_expansion(a):
    n = a.n_rows
    ones = M(a.rows[:-1] + [[1] * n])
    assert sum(bottom_row_minor_permanents(ones)) == per_naive(ones)


def test_errors():
    with pytest.raises(PermanentError):
        per_naive(M([[1, 2]]))
    with pytest.raises(SizeGuardError):
        per_naive(mx.build_ones(12))
    with pytest.raises(SizeGuardError):
        per_ryser(mx.build_ones(5), limit=4)
    with pytest.raises(MemoryBudgetError):
        per_dp(mx.build_ones(10), max_states=50)
    with pytest.raises(PermanentError):
        per(mx.build_ones(3), "magic")


def test_dp_sparse_family_is_fast():
    # banded 0/1 families stay far below the dense frontier bound
    from perconj.permstats import dellac_count
    assert per_dp(mx.build_M_tilde(22)) == 2 ** 11 * dellac_count(11, limit=11)


def test_permanent_bound():
    a = M([[1, -2], [3, 0]])
    assert abs(per_naive(a)) <= pm.permanent_bound(a) == 3 * 3
