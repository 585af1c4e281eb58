from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parared import lattice

small = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_determinant_and_inverse():
    m = [[2, -1], [-1, 2]]
    assert lattice.determinant(m) == 3
    inv = lattice.inverse(m)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    assert lattice.matmul(m, inv) == lattice.identity(2)


def test_solve_rejects_singular():
    with pytest.raises(ValueError):
        lattice.solve([[1, 2], [2, 4]], [1, 2])


def test_dot_length_mismatch():
    with pytest.raises(ValueError):
        lattice.dot([1, 2], [1])


def test_integer_kernel_of_empty_is_identity():
    assert lattice.integer_kernel([], 3) == lattice.identity(3)


@given(matrices(2, 4))
def test_integer_kernel_is_kernel(m):
    ker = lattice.integer_kernel(m, 4)
    for v in ker:
        assert all(x == int(x) for x in v)
        assert lattice.matvec(m, v) == [0, 0]
    assert len(ker) == 4 - lattice.rank(m)


@given(matrices(3, 2))
def test_smith_normal_form(m):
    d, u, v = lattice.smith_normal_form(m)
    assert lattice.matmul(lattice.matmul(u, m), v) == d
    assert abs(lattice.determinant(u)) == 1
    assert abs(lattice.determinant(v)) == 1
    diag = [d[k][k] for k in range(2)]
    for i in range(3):
        for j in range(2):
            if i != j:
                assert d[i][j] == 0
    assert all(x >= 0 for x in diag)
    if diag[0]:
        assert diag[1] % diag[0] == 0


def test_smith_examples():
    assert lattice.smith_normal_form([[2]])[0] == [[2]]
    d, _, _ = lattice.smith_normal_form([[2, -1], [-1, 2]])
    assert [d[0][0], d[1][1]] == [1, 3]


def test_hermite_rows_drops_zero_rows():
    assert lattice.hermite_rows([[0, 0], [2, 4], [1, 2]]) == [[1, 2]]
