from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtbrauer.linalg import (GF, QQ, Matrix, NotInvertible, Subspace, field_from_spec, inverse, kernel_basis,
                             kron, rank, solve)


def test_field_specs():
    assert field_from_spec("rational") == QQ
    assert field_from_spec("gf 7") == GF(7)
    assert field_from_spec("GF7") == GF(7)
    with pytest.raises(ValueError):
        field_from_spec("reals")
    with pytest.raises(ValueError):
        GF(8)


def test_rational_parse_and_format():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(QQ.parse("4/2")) == "2"
    assert QQ.format(QQ(1) / QQ(3)) == "1/3"


def test_prime_field_arithmetic():
    f = GF(7)
    assert f(3) * f(5) == f(1)
    assert f(1) / f(2) == f(4)
    assert f.parse("1/2") == f(4)
    assert f.format(f(-1)) == "6"
    with pytest.raises((ValueError, ZeroDivisionError)):
        GF(2).parse("1/2")


def test_rank_kernel_inverse_small():
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    k = kernel_basis(m)
    assert k.cols == 1
    assert (m @ k).is_zero()
    with pytest.raises(NotInvertible) as exc:
        inverse(m)
    assert exc.value.rank == 2


def test_solve_consistent_and_inconsistent():
    a = Matrix.from_rows(QQ, [[1, 1], [1, -1]])
    b = Matrix.from_rows(QQ, [[3], [1]])
    x = solve(a, b)
    assert x == Matrix.from_rows(QQ, [[2], [1]])
    singular = Matrix.from_rows(QQ, [[1, 1], [2, 2]])
    assert solve(singular, Matrix.from_rows(QQ, [[1], [0]])) is None


def test_kron_layout_last_factor_fastest():
    a = Matrix.from_rows(QQ, [[1, 2]])
    b = Matrix.from_rows(QQ, [[0, 1]])
    assert kron(a, b).to_lists() == [[0, 1, 0, 2]]


def test_subspace_membership_and_equality():
    s = Subspace.span(Matrix.from_rows(QQ, [[1, 0], [1, 1], [0, 1]]))
    assert s.dim == 2
    assert s.contains({0: QQ(1), 1: QQ(2), 2: QQ(1)})
    assert not s.contains({0: QQ(1)})
    t = Subspace.span(Matrix.from_rows(QQ, [[1, 1], [2, 1], [1, 0]]))
    assert s == t


small = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 5), st.sampled_from([QQ, GF(7)]))
def test_rank_nullity(rows, fld):
    m = Matrix.from_rows(fld, rows)
    k = kernel_basis(m)
    assert rank(m) + k.cols == 5
    assert (m @ k).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), st.sampled_from([QQ, GF(7)]))
def test_inverse_round_trip(rows, fld):
    m = Matrix.from_rows(fld, rows)
    if rank(m) < 3:
        with pytest.raises(NotInvertible):
            inverse(m)
        return
    inv = inverse(m)
    assert (m @ inv).is_identity()
    assert (inv @ m).is_identity()


@settings(max_examples=30, deadline=None)
@given(matrices(3, 4), matrices(4, 2))
def test_matmul_associates_with_apply(a_rows, b_rows):
    a = Matrix.from_rows(QQ, a_rows)
    b = Matrix.from_rows(QQ, b_rows)
    v = {0: QQ(1), 1: QQ(-2)}
    assert (a @ b).apply(v) == a.apply(b.apply(v))
