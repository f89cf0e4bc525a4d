import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from invdeg.exact import InvariantViolation, SkewMatrix, binomial, pfaffian, pfaffian_reference


def det_fraction(rows):
    """Independent determinant oracle: plain Gaussian elimination over Fraction."""
    a = [[Fraction(x) for x in row] for row in rows]
    k = len(a)
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, k):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, k):
                    a[r][c] -= f * a[col][c]
    return det


def random_skew(rng, size, bound=30):
    return SkewMatrix.from_upper(size, lambda i, j: rng.randint(-bound, bound))


# ----------------------------------------------------------------------- binomial

def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(7, 0) == 1
    assert binomial(7, 7) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(4, -1) == 0
    assert binomial(3, 5) == 0
    assert binomial(0, 1) == 0


def test_binomial_negative_a_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_matches_stdlib_grid():
    for a in range(0, 30):
        for b in range(0, a + 1):
            assert binomial(a, b) == comb(a, b)


@given(st.integers(0, 300), st.integers(-10, 310))
def test_binomial_pascal_rule(a, b):
    if a >= 1:
        assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


@given(st.integers(0, 200), st.integers(0, 200))
def test_binomial_symmetry(a, b):
    assert binomial(a, b) == binomial(a, a - b)


# --------------------------------------------------------------------- SkewMatrix

def test_skew_matrix_rejects_non_square():
    with pytest.raises(ValueError, match="square"):
        SkewMatrix.from_rows([[0, 1], [-1, 0], [0, 0]])
    with pytest.raises(ValueError, match="square"):
        SkewMatrix.from_rows([[0, 1]])


def test_skew_matrix_rejects_non_antisymmetric():
    with pytest.raises(ValueError, match="antisymmetric"):
        SkewMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(ValueError, match="antisymmetric"):
        SkewMatrix.from_rows([[1, 1], [-1, 0]])


def test_skew_matrix_from_upper():
    m = SkewMatrix.from_upper(3, lambda i, j: 10 * i + j)
    assert m.rows == ((0, 1, 2), (-1, 0, 12), (-2, -12, 0))
    assert m.size == 3


# ----------------------------------------------------------------------- pfaffian

def test_pfaffian_empty_matrix():
    assert pfaffian([]) == 1
    assert pfaffian_reference([]) == 1


def test_pfaffian_2x2():
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    assert pfaffian([[0, -7], [7, 0]]) == -7


def test_pfaffian_4x4_worked_example():
    rows = [[0, 1, 2, 4], [-1, 0, 1, 3], [-2, -1, 0, 3], [-4, -3, -3, 0]]
    # expansion along the first row: 1*3 - 2*3 + 4*1 = 1
    assert pfaffian(rows) == 1
    assert pfaffian_reference(rows) == 1


def test_pfaffian_odd_size_rejected():
    rows = [[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]
    with pytest.raises(ValueError, match="pfaffian requires even dimension"):
        pfaffian(rows)
    with pytest.raises(ValueError, match="pfaffian requires even dimension"):
        pfaffian_reference(rows)


def test_pfaffian_zero_and_block_diagonal():
    assert pfaffian([[0] * 4 for _ in range(4)]) == 0
    rows = [[0, 3, 0, 0], [-3, 0, 0, 0], [0, 0, 0, -2], [0, 0, 2, 0]]
    assert pfaffian(rows) == 3 * -2


def test_pfaffian_matches_reference_random():
    rng = random.Random(0)
    for size in (2, 4, 6, 8):
        for _ in range(20):
            m = random_skew(rng, size)
            assert pfaffian(m) == pfaffian_reference(m)


def test_pfaffian_squares_to_determinant():
    rng = random.Random(1)
    for size in (2, 4, 6, 8):
        for _ in range(10):
            m = random_skew(rng, size)
            assert Fraction(pfaffian(m)) ** 2 == det_fraction(m.rows)


def test_pfaffian_row_column_swap_negates():
    rng = random.Random(2)
    for size in (4, 6):
        for _ in range(10):
            m = random_skew(rng, size)
            i, j = rng.sample(range(size), 2)
            rows = [list(r) for r in m.rows]
            rows[i], rows[j] = rows[j], rows[i]
            for r in rows:
                r[i], r[j] = r[j], r[i]
            assert pfaffian(rows) == -pfaffian(m)


@st.composite
def skew_matrices(draw):
    half = draw(st.integers(0, 4))
    size = 2 * half
    count = size * (size - 1) // 2
    vals = draw(st.lists(st.integers(-40, 40), min_size=count, max_size=count))
    it = iter(vals)
    return SkewMatrix.from_upper(size, lambda i, j: next(it))


@given(skew_matrices())
def test_pfaffian_agrees_with_reference(m):
    assert pfaffian(m) == pfaffian_reference(m)


@given(skew_matrices())
def test_pfaffian_square_is_determinant(m):
    assert Fraction(pfaffian(m)) ** 2 == det_fraction(m.rows)


def test_pfaffian_accepts_list_input_and_validates():
    with pytest.raises(ValueError, match="antisymmetric"):
        pfaffian([[0, 1], [2, 0]])
    assert isinstance(pfaffian([[0, 2], [-2, 0]]), int)


def test_invariant_violation_is_runtime_error():
    assert issubclass(InvariantViolation, RuntimeError)
