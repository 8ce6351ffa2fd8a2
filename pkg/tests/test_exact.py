"""Tests for the exact rational kernels: matrices, determinants, minors."""

import random
from fractions import Fraction

import pytest

from catmoments.exact import (
    FALSE,
    INCONCLUSIVE,
    TRUE,
    DenseMatrix,
    all_minors_nonneg,
    as_rat,
    count_minors,
    det_bareiss,
    det_cofactor,
    format_rat,
)


def test_as_rat_accepts_ints_fractions_strings():
    assert as_rat(3) == Fraction(3)
    assert as_rat(Fraction(2, 7)) == Fraction(2, 7)
    assert as_rat("5/3") == Fraction(5, 3)
    assert as_rat("-4") == Fraction(-4)
    assert as_rat(" 1/2 ") == Fraction(1, 2)


def test_as_rat_rejects_floats_and_junk():
    with pytest.raises(ValueError):
        as_rat(0.5)
    with pytest.raises(ValueError):
        as_rat("abc")
    with pytest.raises(ValueError):
        as_rat("1/0")
    with pytest.raises(ValueError):
        as_rat(None)


def test_format_rat():
    assert format_rat(Fraction(7)) == "7"
    assert format_rat(Fraction(-3, 4)) == "-3/4"


def test_matrix_construction_and_access():
    m = DenseMatrix([[1, 2], [3, "5/2"]])
    assert m.rows == 2 and m.cols == 2
    assert m[1, 1] == Fraction(5, 2)
    assert m.row(0) == (Fraction(1), Fraction(2))
    assert m.is_square


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        DenseMatrix([])
    with pytest.raises(ValueError):
        DenseMatrix([[]])
    with pytest.raises(ValueError):
        DenseMatrix([[1, 2], [3]])


def test_matrix_is_immutable():
    m = DenseMatrix([[1]])
    with pytest.raises(AttributeError):
        m.entries = ()


def test_matmul_transpose_identity():
    a = DenseMatrix([[1, 2], [3, 4]])
    b = DenseMatrix([[0, 1], [1, 0]])
    assert a @ b == DenseMatrix([[2, 1], [4, 3]])
    assert a.transpose() == DenseMatrix([[1, 3], [2, 4]])
    assert a @ DenseMatrix.identity(2) == a
    with pytest.raises(ValueError):
        a @ DenseMatrix([[1, 2]])


def test_submatrix():
    m = DenseMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.submatrix((0, 2), (1, 2)) == DenseMatrix([[2, 3], [8, 9]])


def test_det_bareiss_identity_and_small_cases():
    assert det_bareiss(DenseMatrix.identity(3)) == 1
    assert det_bareiss(DenseMatrix([[1, 1], [1, 2]])) == 1
    assert det_bareiss(DenseMatrix([[7]])) == 7


def test_det_bareiss_rational_entries():
    m = DenseMatrix([["1/2", "1/3"], ["1/4", "1/5"]])
    assert det_bareiss(m) == Fraction(1, 10) - Fraction(1, 12)


def test_det_bareiss_zero_pivot_row_swap():
    m = DenseMatrix([[0, 1, 2], [1, 0, 3], [4, 5, 0]])
    assert det_bareiss(m) == det_cofactor(m)


def test_det_bareiss_singular():
    m = DenseMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert det_bareiss(m) == 0
    zero_col = DenseMatrix([[0, 1], [0, 2]])
    assert det_bareiss(zero_col) == 0


def test_det_requires_square():
    m = DenseMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        det_bareiss(m)
    with pytest.raises(ValueError):
        det_cofactor(m)


def test_det_cofactor_closed_forms():
    assert det_cofactor(DenseMatrix([[7]])) == 7
    a, b, c, d = Fraction(2), Fraction(3, 2), Fraction(-1), Fraction(5)
    assert det_cofactor(DenseMatrix([[a, b], [c, d]])) == a * d - b * c


def test_det_cofactor_dimension_cap():
    big = DenseMatrix([[1] * 10 for _ in range(10)])
    with pytest.raises(ValueError):
        det_cofactor(big)


def test_block_triangular_embedding_preserves_det():
    rng = random.Random(7)
    inner = DenseMatrix(
        [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
         for _ in range(3)]
    )
    embedded = [[Fraction(0)] * 4 for _ in range(4)]
    embedded[0][0] = Fraction(1)
    for i in range(3):
        for j in range(3):
            embedded[i + 1][j + 1] = inner[i, j]
    assert det_bareiss(DenseMatrix(embedded)) == det_bareiss(inner)


def test_kernels_agree_on_random_matrices():
    rng = random.Random(20260818)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = DenseMatrix(
            [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
             for _ in range(n)]
        )
        assert det_bareiss(m) == det_cofactor(m)


def test_all_minors_nonneg_true_case():
    scan = all_minors_nonneg(DenseMatrix([[1, 1], [1, 2]]), 2)
    assert scan.status == TRUE
    assert scan.witness is None
    assert scan.minors_checked == count_minors(2, 2, 2)


def test_all_minors_nonneg_false_witness():
    scan = all_minors_nonneg(DenseMatrix([[0, 1], [1, 0]]), 2)
    assert scan.status == FALSE
    assert scan.witness.value == -1
    assert scan.witness.row_idx == (0, 1)
    assert scan.witness.col_idx == (0, 1)


def test_all_minors_witness_is_lexicographically_first():
    # both 2x2 minors using rows (0,1) are negative; columns (0,1) come first
    m = DenseMatrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    scan = all_minors_nonneg(m, 2)
    assert scan.status == FALSE
    assert scan.witness.row_idx == (0, 1)
    assert scan.witness.col_idx == (0, 1)


def test_all_minors_budget_is_inconclusive_never_true():
    m = DenseMatrix([[1] * 6 for _ in range(6)])
    scan = all_minors_nonneg(m, 6, budget=10)
    assert scan.status == INCONCLUSIVE
    assert "budget" in scan.reason


def test_all_minors_monotone_in_order():
    m = DenseMatrix([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
    assert all_minors_nonneg(m, 3).status == TRUE
    for order in (1, 2):
        assert all_minors_nonneg(m, order).status == TRUE


def test_all_minors_order_validation():
    m = DenseMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        all_minors_nonneg(m, 3)
