import pytest

from perconj import matrices as mx
from perconj.matrices import IntMatrix, MatrixError
from perconj.permanent import per_naive

M = IntMatrix.from_rows


def test_floor_L_examples():
    assert mx.build_floor_L(1) == M([[1]])
    # floor((2j - k) / 3) evaluated by hand
    assert mx.build_floor_L(3) == M([[0, 0, -1], [1, 0, 0], [1, 1, 1]])
    assert mx.build_floor_L(2).row(1) == [0, 0]


@pytest.mark.parametrize("n", range(1, 16))
def test_floor_L_entries_are_signs(n):
    assert set(mx.build_floor_L(n).entries) <= {-1, 0, 1}


def test_floor_M_examples():
    assert mx.build_floor_M(2) == M([[0, -1], [1, 0]])
    assert mx.build_floor_M(4).row(3) == [1, 0, 0, 0]
    assert mx.build_floor_M(4).entry(1, 4) == -1
    with pytest.raises(MatrixError):
        mx.build_floor_M(3)


def test_floor_JK_examples():
    assert mx.build_floor_JK(1, 0) == M([[2]])
    assert mx.build_floor_JK(2, 0) == M([[1, 1], [1, 2]])
    assert mx.build_floor_JK(2, 1) == M([[0, 1], [1, 1]])
    with pytest.raises(MatrixError):
        mx.build_floor_JK(3, 2)


def test_L_tilde_displayed():
    assert mx.build_L_tilde(1) == M([[1]])
    assert mx.build_L_tilde(2) == M([[0, 1, 1], [1, 1, 0], [1, 1, 1]])
    l5 = mx.build_L_tilde(3)
    assert l5.row(5) == [1] * 5
    assert l5.row(2) == [0, 0, 0, 1, 1]
    assert mx.build_L_tilde(4) == M([
        [0, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 1, 1],
        [1, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 0, 0, 0],
        [1, 1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 1, 1],
    ])


@pytest.mark.parametrize("m", range(1, 8))
def test_L_tilde_gamma_stacking(m):
    assert mx.build_L_tilde(m) == mx.gamma_stack_L_tilde(m)


def test_L_star_variants():
    assert mx.build_L_star(2) == M([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    assert mx.build_L_star(3) == M([
        [1, 1, 0, 0, 0], [1, 1, 1, 1, 0], [1, 1, 1, 1, 1], [0, 1, 1, 1, 1], [0, 0, 0, 1, 1],
    ])
    assert mx.build_L_star2(3) == M([[0, 1, 1], [1, 1, 0], [1, 1, 1]])
    assert mx.build_L_star2(5) == M([
        [0, 1, 1, 1, 1], [1, 1, 0, 0, 0], [0, 0, 0, 1, 1], [1, 1, 1, 1, 0], [1, 1, 1, 1, 1],
    ])
    assert mx.build_L_star2(4) == M([[1, 1, 1, 1], [1, 0, 0, 0], [0, 0, 1, 1], [1, 1, 1, 0]])
    assert mx.build_L_star2(6).row(4) == [1, 1, 1, 0, 0, 0]


@pytest.mark.parametrize("m", range(1, 6))
def test_L_star_rows_are_a_rearrangement(m):
    base = sorted(mx.build_L_tilde(m).rows)
    assert sorted(mx.build_L_star(m).rows) == base
    assert sorted(mx.build_L_star2(2 * m - 1).rows) == base


def test_M_tilde_displayed():
    assert mx.build_M_tilde(2) == M([[1, 1], [1, 1]])
    assert mx.build_M_tilde(4) == M([[1, 1, 1, 0], [1, 1, 1, 0], [0, 1, 1, 1], [0, 1, 1, 1]])
    assert mx.build_M_tilde(6).row(5) == [0, 0, 1, 1, 1, 1]
    with pytest.raises(MatrixError):
        mx.build_M_tilde(5)


@pytest.mark.parametrize("two_n", range(2, 14, 2))
def test_M_tilde_rows_pair_up(two_n):
    rows = mx.build_M_tilde(two_n).rows
    assert rows[0::2] == rows[1::2]


def test_P_displayed():
    assert mx.build_P(2) == M([[1, 0], [0, -1]])
    assert mx.build_P(4) == M([[1, 1, 1, 0], [1, 1, 0, -1], [1, 0, -1, -1], [0, -1, -1, -1]])
    assert mx.build_P(6).entry(6, 6) == -1


def test_P_inverse_displayed():
    assert mx.build_P_inverse(2) == M([[1, 0], [0, -1]])
    assert mx.build_P_inverse(4) == M([[1, -1, 1, 0], [-1, 1, 0, -1], [1, 0, -1, 1], [0, -1, 1, -1]])
    p6 = mx.build_P_inverse(6)
    assert [p6.entry(i, 7 - i) for i in range(1, 7)] == [0] * 6
    assert p6.row(3) == [1, -1, 1, 0, -1, 1]
    with pytest.raises(MatrixError):
        mx.build_P_inverse(3)


def test_Q_displayed():
    assert mx.build_Q(1) == M([[-1]])
    assert mx.build_Q(2) == M([[0, -1], [-1, 0]])
    assert mx.build_Q(3) == M([[1, -1, -1], [0, -1, 0], [-1, -1, 1]])
    assert mx.build_Q(5) == M([
        [1, 1, -1, -1, -1], [1, 0, -1, -1, 0], [1, -1, -1, -1, 1], [0, -1, -1, 0, 1], [-1, -1, -1, 1, 1],
    ])
    assert mx.build_Q(8).row(4) == [1, 1, -1, -1, -1, -1, 0, 1]


def test_A_examples():
    # signs of tan(k pi / 3) for k = 2, 3, 4
    assert mx.build_A(2) == M([[-1, 0], [0, 1]])
    assert mx.build_A_inverse(6).row(1) == [1, 1, -1, 1, 1, 0]
    assert mx.build_A_inverse(6) == M([
        [1, 1, -1, 1, 1, 0],
        [1, -1, -1, 1, 0, -1],
        [-1, -1, -1, 0, -1, -1],
        [1, 1, 0, 1, 1, 1],
        [1, 0, -1, 1, 1, -1],
        [0, -1, -1, 1, -1, -1],
    ])


def test_trig_signs_match_floating_point():
    import math
    for m in range(1, 30):
        for k in range(-3 * m, 3 * m):
            s = math.sin(k * math.pi / m)
            want = 0 if abs(s) < 1e-9 else (1 if s > 0 else -1)
            assert mx.sin_sign(k, m) == want
    for m in range(3, 30, 2):
        for k in range(-3 * m, 3 * m):
            t = math.tan(k * math.pi / m)
            want = 0 if abs(t) < 1e-9 else (1 if t > 0 else -1)
            assert mx.tan_sign(k, m) == want


@pytest.mark.parametrize("two_n", range(2, 26, 2))
def test_inverses_and_block_forms(two_n):
    ident = mx.build_identity(two_n)
    assert mx.build_P(two_n) @ mx.build_P_inverse(two_n) == ident
    assert mx.build_A(two_n) @ mx.build_A_inverse(two_n) == ident
    assert mx.build_A(two_n) == mx.a_block_form(two_n)
    assert mx.build_A_inverse(two_n) == mx.a_inverse_block_form(two_n)
    assert mx.build_P_inverse(two_n) == mx.hadamard(mx.build_P(two_n), mx.build_H_sign(two_n))
    assert mx.build_A_inverse(two_n) == mx.hadamard(mx.build_A(two_n), mx.build_U_tilde(two_n))


@pytest.mark.parametrize("n", range(1, 16))
def test_J_identities(n):
    J, P = mx.build_J(n), mx.build_P(n)
    assert J @ J == mx.build_identity(n)
    assert J @ P == -(P @ J)


@pytest.mark.parametrize("n", range(1, 16))
def test_Q_column_structure(n):
    assert mx.build_Q(n) == mx.q_column_form(n)


def test_alpha_example():
    assert mx.alpha(6, 2) == [1, 1, 1, 0, -1, -1]


def test_small_helpers():
    assert mx.build_J(2) == M([[0, 1], [1, 0]])
    assert mx.build_H_sign(2) == M([[1, -1], [-1, 1]])
    assert mx.build_U_tilde(4) == M([[1, 1, -1, -1], [1, 1, -1, -1], [-1, -1, 1, 1], [-1, -1, 1, 1]])


@pytest.mark.parametrize("family", sorted(set(mx.FAMILIES) - {"JK0"}))
def test_every_family_has_sign_entries(family):
    n = 6 if family != "L_star" else 3
    assert set(mx.build_family(family, n).entries) <= {-1, 0, 1}


def test_jk0_reaches_two():
    assert max(mx.build_floor_JK(6, 0).entries) == 2


def test_unknown_family():
    with pytest.raises(MatrixError):
        mx.build_family("Z", 3)


def test_hadamard(rng):
    from conftest import sign_matrix
    a = sign_matrix(rng, 5)
    assert mx.hadamard(a, mx.build_ones(5)) == a
    with pytest.raises(MatrixError):
        mx.hadamard(a, mx.build_ones(4))


def test_phi_action():
    assert mx.phi_action(M([[1]]), 1, 1) == M([[1]])
    assert mx.phi_action(M([[1, 1], [1, 1]]), 1, 2) == M([[-1, 1], [1, -1]])
    with pytest.raises(MatrixError):
        mx.phi_action(M([[1]]), 2, 1)


def test_phi_preserves_permanent(rng):
    from conftest import sign_matrix
    a = sign_matrix(rng, 5)
    for k in range(1, 6):
        for l in range(1, 6):
            assert per_naive(mx.phi_action(a, k, l)) == per_naive(a)


def test_compose_phi_matches_repeated_action(rng):
    from conftest import sign_matrix
    a = sign_matrix(rng, 4)
    pairs = [(1, 2), (3, 3), (1, 2), (4, 1)]
    b = a
    for k, l in pairs:
        b = mx.phi_action(b, k, l)
    assert mx.compose_phi(a, pairs) == b


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_product_gives_checkerboard(rng, n):
    from conftest import sign_matrix
    a = sign_matrix(rng, n)
    pairs = [(k, l) for k in range(1, n + 1) for l in range(1, n + 1) if k + l <= n]
    assert mx.compose_phi(a, pairs) == mx.hadamard(a, mx.build_H_sign(n))


@pytest.mark.parametrize("h", range(1, 6))
def test_phi_product_gives_block_signs(rng, h):
    from conftest import sign_matrix
    n = 2 * h
    a = sign_matrix(rng, n)
    pairs = [(k, l) for k in range(1, n + 1) for l in range(1, n + 1)
             if h + 1 <= k + l <= 2 * h or 3 * h + 2 <= k + l <= 4 * h]
    assert mx.compose_phi(a, pairs) == mx.hadamard(a, mx.build_U_tilde(n))


def test_plumbing():
    a = M([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mx.minor(a, 2, 1) == M([[2, 3], [8, 9]])
    assert mx.flip_rows(a).row(1) == [7, 8, 9]
    assert mx.flip_cols(a).row(1) == [3, 2, 1]
    assert mx.transpose(a).row(1) == [1, 4, 7]
    assert mx.matmul(a, mx.build_identity(3)) == a
    assert mx.minor(M([[5]]), 1, 1) == IntMatrix(0, 0, ())
    with pytest.raises(MatrixError):
        mx.minor(a, 4, 1)
    with pytest.raises(MatrixError):
        mx.matmul(a, M([[1, 2]]))
    with pytest.raises(MatrixError):
        IntMatrix(2, 2, (1, 2, 3))


@pytest.mark.parametrize("m", range(2, 8))
def test_L_tilde_flip_recursion(m):
    sub = mx.delete(mx.build_L_tilde(m), rows=(m, 2 * m - 1), cols=(1, 2))
    assert mx.flip_rows(mx.flip_cols(sub)) == mx.build_L_tilde(m - 1)


def test_determinant_small():
    assert mx.determinant(M([[2, 1], [1, 1]])) == 1
    assert mx.determinant(M([[0, 1], [1, 0]])) == -1
    assert mx.determinant(IntMatrix(0, 0, ())) == 1
    for two_n in (2, 4, 6):
        assert mx.determinant(mx.build_P(two_n)) * mx.determinant(mx.build_P_inverse(two_n)) == 1
