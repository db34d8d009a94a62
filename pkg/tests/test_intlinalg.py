from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gorquilt.groups import FinAbGroup
from gorquilt.polyhedral.intlinalg import (
    cokernel,
    determinant,
    hermite_columns,
    integer_kernel,
    inverse,
    matmul,
    rank,
    smith_normal_form,
    solve_integral,
)

A2 = [[2, -1], [-1, 2]]

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_snf_small_examples():
    assert smith_normal_form([[2]])[1] == [[2]]
    assert smith_normal_form(A2)[1] == [[1, 0], [0, 3]]
    assert smith_normal_form([[0, 0], [0, 0]])[1] == [[0, 0], [0, 0]]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_is_a_unimodular_factorization(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert len(nz) == rank(M)


def test_solve_integral():
    assert solve_integral([[2]], [2]) == [1]
    assert solve_integral([[2]], [1]) is None
    assert solve_integral(A2, [1, 1]) == [1, 1]


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_solve_integral_roundtrip(M, data):
    x = data.draw(st.lists(st.integers(-5, 5), min_size=len(M[0]), max_size=len(M[0])))
    b = [sum(a * v for a, v in zip(row, x)) for row in M]
    y = solve_integral(M, b)
    assert y is not None
    assert [sum(a * v for a, v in zip(row, y)) for row in M] == b


def test_cokernel_of_cartan_matrices():
    assert cokernel(A2) == ([3], 0)
    assert cokernel([[0, 0]], 1) == ([], 1)
    assert str(FinAbGroup.cokernel_of([[2, 0], [0, 2]])) == "Z/2 x Z/2"
    assert FinAbGroup.cokernel_of([[1]]).is_trivial


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_kernel_is_annihilated(M):
    K = integer_kernel(M, len(M[0]))
    if K and K[0]:
        assert all(v == 0 for row in matmul(M, K) for v in row)
        assert len(K[0]) == len(M[0]) - rank(M)


def test_determinant_and_inverse():
    assert determinant([[2, -3], [-1, 2]]) == 1
    assert determinant(A2) == 3
    assert matmul(inverse(A2), A2) == [[Fraction(1), 0], [0, Fraction(1)]]


def test_hermite_columns_spans_same_lattice():
    B = [[2, 4, 6], [0, 3, 9]]
    H = hermite_columns(B)
    for j in range(3):
        assert solve_integral(H, [B[0][j], B[1][j]]) is not None
    for j in range(len(H[0])):
        assert solve_integral(B, [H[0][j], H[1][j]]) is not None
