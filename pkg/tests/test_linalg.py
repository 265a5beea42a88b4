import flint
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdtool.errors import BudgetExceeded
from pdtool.linalg import (
    IntMatrix,
    certified_rank,
    det,
    elementary_divisors,
    matmul_exact,
    rank,
    rank_mod_p,
    smith_normal_form,
)


@st.composite
def int_matrices(draw, max_dim=12, lo=-9, hi=9):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    density = draw(st.sampled_from([0.1, 0.3, 0.6, 1.0]))
    entry = st.integers(lo, hi)
    rows = []
    for _ in range(m):
        mask = draw(st.lists(st.floats(0, 1), min_size=n, max_size=n))
        vals = draw(st.lists(entry, min_size=n, max_size=n))
        rows.append([v if u < density else 0 for u, v in zip(mask, vals)])
    return IntMatrix.from_dense(rows, n)


def flint_pivots(A):
    """Nonzero diagonal of FLINT's Smith form, used as an independent oracle."""
    if A.rows == 0 or A.cols == 0:
        return []
    S = flint.fmpz_mat(A.to_dense()).snf()
    return [int(S[i, i]) for i in range(min(A.rows, A.cols)) if S[i, i] != 0]


def check_smith(A):
    F = smith_normal_form(A)
    U, D, V = F.U.to_dense(), F.D.to_dense(), F.V.to_dense()
    if A.rows and A.cols:
        assert matmul_exact(matmul_exact(U, A.to_dense()), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    p = list(F.pivots)
    assert all(x > 0 for x in p)
    assert all(b % a == 0 for a, b in zip(p, p[1:]))
    for i in range(A.rows):
        for j in range(A.cols):
            assert D[i][j] == (p[i] if i == j and i < len(p) else 0)
    return p


@given(int_matrices())
def test_smith_form_properties(A):
    p = check_smith(A)
    assert p == flint_pivots(A)


@given(int_matrices(max_dim=15))
def test_elementary_divisors_match_smith(A):
    assert elementary_divisors(A) == list(smith_normal_form(A).pivots)


@given(int_matrices(max_dim=10, lo=-3, hi=3))
def test_elementary_divisors_of_transpose(A):
    assert elementary_divisors(A) == elementary_divisors(A.transpose())


@given(int_matrices(max_dim=10))
def test_rank_bounds(A):
    r = rank(A)
    assert r == int(flint.fmpz_mat(A.to_dense()).rank()) if A.rows and A.cols else r == 0
    assert rank_mod_p(A, 3) <= r
    assert certified_rank(A, r) == r


def test_smith_known_values():
    A = IntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(A).pivots == (2, 6, 12)
    assert elementary_divisors(IntMatrix.from_dense([[2, 0], [0, 3]])) == [1, 6]
    assert elementary_divisors(IntMatrix(3, 4)) == []


def test_divisible_pivot_path():
    # no unit entries, but every entry is a multiple of the corner: a rank-one block of 8s
    A = IntMatrix.from_dense([[8, 16, 24], [16, 32, 48], [24, 48, 72]])
    assert elementary_divisors(A) == [8]
    B = IntMatrix.from_dense([[4, 0, 0], [0, 6, 0], [0, 0, 10]])
    assert elementary_divisors(B) == [2, 2, 60]


def test_dense_core_budget():
    A = IntMatrix.from_dense([[2 * (i + 1) * (j + 3) + 4 * (i == j) for j in range(30)] for i in range(30)])
    with pytest.raises(BudgetExceeded):
        elementary_divisors(A, dense_limit=100)


def test_det():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[0, 1], [1, 0]]) == -1
    assert det([]) == 1
    M = [[(i * 7 + j * 3) % 11 - 5 for j in range(7)] for i in range(7)]
    assert det(M) == int(flint.fmpz_mat(M).det())


def test_json_round_trip():
    A = IntMatrix.from_triplets(2, 3, [(0, 1, 10**30), (1, 2, -7)])
    obj = A.to_json()
    assert obj["triplets"][0][2] == str(10**30)
    assert IntMatrix.from_json(obj) == A


def test_matmul_overflow_falls_back_to_python_ints():
    big = 2**40
    assert matmul_exact([[big, big]], [[big], [big]]) == [[2 * big * big]]
