"""Exact linear algebra: rank, solve, kernel, and fraction-free determinants."""

import random
from fractions import Fraction

import pytest

from fieldlab import (
    DimensionMismatch,
    EMatrix,
    QMatrix,
    field_det,
    matrix_rank,
    qmatrix_det,
    rank_and_solve,
)
from conftest import field, random_rational


def rand_qmatrix(rng, n, m, span=9):
    return QMatrix([[random_rational(rng, span) for _ in range(m)] for _ in range(n)])


def laplace_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        total += term if j % 2 == 0 else -term
    return total


# ---------------------------------------------------------------------------
# QMatrix structure
# ---------------------------------------------------------------------------


def test_identity_and_zero():
    eye = QMatrix.identity(3)
    z = QMatrix.zero(3, 3)
    assert eye * eye == eye
    assert eye + z == eye
    assert z - z == z


def test_scalar_addition_is_scaled_identity():
    m = QMatrix([[1, 2], [3, 4]])
    assert m + 2 == QMatrix([[3, 2], [3, 6]])
    with pytest.raises(DimensionMismatch):
        QMatrix([[1, 2, 3]]) + 1


def test_matmul_shapes():
    a = QMatrix([[1, 2, 3]])
    b = QMatrix([[1], [1], [1]])
    assert a * b == QMatrix([[6]])
    with pytest.raises(DimensionMismatch):
        b * b


def test_trace_and_scalar_mul():
    m = QMatrix([[1, 2], [3, 4]])
    assert m.trace() == 5
    assert (m * 2).trace() == 10
    assert 2 * m == m * 2


# ---------------------------------------------------------------------------
# rank and solve
# ---------------------------------------------------------------------------


def test_rank_examples():
    E = field("x^2+1")
    th = E.gen()
    m = EMatrix(E, [[E.one(), E.one()], [th, -th]])
    assert matrix_rank(m) == 2
    assert matrix_rank(QMatrix.zero(2, 2)) == 0
    assert matrix_rank(QMatrix([[1, 2], [2, 4]])) == 1


def test_solve_known_system():
    m = QMatrix([[2, 1], [1, 3]])
    res = rank_and_solve(m, [5, 5])
    assert res.rank == 2
    assert res.solution == [Fraction(2), Fraction(1)]
    assert res.kernel == []


def test_solve_inconsistent():
    m = QMatrix([[1, 1], [2, 2]])
    res = rank_and_solve(m, [1, 3])
    assert res.solution is None
    assert res.rank == 1


def test_kernel_vectors_annihilate():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(2, 5)
        m = rng.randint(2, 5)
        mat = rand_qmatrix(rng, n, m, span=4)
        res = rank_and_solve(mat)
        assert len(res.kernel) == m - res.rank
        for v in res.kernel:
            image = [sum(mat[(i, j)] * v[j] for j in range(m)) for i in range(n)]
            assert all(x == 0 for x in image)


def test_random_solvable_systems():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        mat = rand_qmatrix(rng, n, m, span=5)
        x = [random_rational(rng, 5) for _ in range(m)]
        rhs = [sum(mat[(i, j)] * x[j] for j in range(m)) for i in range(n)]
        res = rank_and_solve(mat, rhs)
        assert res.solution is not None
        check = [sum(mat[(i, j)] * res.solution[j] for j in range(m)) for i in range(n)]
        assert check == rhs


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def test_det_matches_laplace():
    rng = random.Random(47)
    for n in (1, 2, 3, 4):
        for _ in range(20):
            rows = [[random_rational(rng, 6) for _ in range(n)] for _ in range(n)]
            assert qmatrix_det(QMatrix(rows)) == laplace_det(rows)


def test_det_multiplicative():
    rng = random.Random(53)
    for _ in range(40):
        a = rand_qmatrix(rng, 3, 3)
        b = rand_qmatrix(rng, 3, 3)
        assert qmatrix_det(a * b) == qmatrix_det(a) * qmatrix_det(b)


def test_det_nonzero_iff_full_rank():
    rng = random.Random(59)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = rand_qmatrix(rng, n, n, span=3)
        assert (qmatrix_det(m) != 0) == (matrix_rank(m) == n)


def test_field_det_over_extension():
    E = field("x^2+1")
    th = E.gen()
    one = E.one()
    rows = [[one, one], [th, -th]]
    assert field_det(rows, E.zero(), E.one()) == -2 * th
    m = EMatrix(E, rows)
    assert m.det() == -2 * th


def test_field_det_matches_laplace_over_E():
    E = field("x^3-2")
    rng = random.Random(61)
    for _ in range(25):
        rows = [
            [E.element([random_rational(rng, 3) for _ in range(3)]) for _ in range(3)]
            for _ in range(3)
        ]
        direct = (
            rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
        )
        assert EMatrix(E, rows).det() == direct


def test_det_rejects_non_square():
    with pytest.raises(DimensionMismatch):
        qmatrix_det(QMatrix([[1, 2, 3], [4, 5, 6]]))
