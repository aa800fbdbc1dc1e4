from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congmon.errors import FieldMismatchError, ParseError, PreconditionError
from congmon.exact_core import (
    QI,
    ExactMatrix,
    GaussianRational,
    Q,
    block_matrix,
    determinant,
    direct_sum,
    dumps_matrix,
    elementary,
    field_from_tag,
    inverse,
    is_solution,
    kernel,
    kernel_intersection,
    loads_matrix,
    prime_field,
    rank,
    rref,
    solve_tangent,
    span_equal,
)
from congmon.lie_structure import An

rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gauss = st.builds(GaussianRational, rats, rats)


def small_matrix(n, elements=st.integers(-4, 4)):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(ExactMatrix)


@given(rats)
def test_rational_round_trip(x):
    assert Q.parse(Q.format(x)) == x


@given(gauss)
def test_gaussian_round_trip(z):
    assert QI.parse(QI.format(z)) == z


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == QI.one


def test_gaussian_spelling():
    assert QI.format(GaussianRational(1, -2)) == "1+-2i"
    assert QI.format(GaussianRational(0, 1)) == "1i"
    assert QI.parse("1-2i") == GaussianRational(1, -2)
    assert QI.parse("-i") == GaussianRational(0, -1)
    assert QI.sqrt_minus_one() * QI.sqrt_minus_one() == QI.coerce(-1)


def test_prime_field():
    F = prime_field(5)
    assert F.characteristic == 5
    assert F.coerce(3) * F.coerce(2) == F.one
    assert F.parse("1/2") * F.coerce(2) == F.one
    i = F.sqrt_minus_one()
    assert i is not None and i * i == F.coerce(-1)
    assert prime_field(7).sqrt_minus_one() is None
    with pytest.raises(PreconditionError):
        prime_field(6)
    with pytest.raises(ParseError):
        F.parse("1/5")


def test_field_tags():
    assert field_from_tag("q") == Q
    assert field_from_tag("qi") == QI
    assert field_from_tag("fp:7").characteristic == 7
    with pytest.raises(ParseError):
        field_from_tag("r")


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        ExactMatrix([[1]], Q) + ExactMatrix([[1]], QI)
    with pytest.raises(FieldMismatchError):
        Q.coerce(GaussianRational(0, 1))


def test_matrix_basics():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert M.T == ExactMatrix([[1, 3], [2, 4]])
    assert M @ ExactMatrix.identity(2) == M
    assert M.scale(Fraction(1, 2))[1, 1] == 2
    assert determinant(M) == -2
    assert inverse(M) @ M == ExactMatrix.identity(2)
    assert M.submatrix(0, 1, 0, 2) == ExactMatrix([[1, 2]])
    assert elementary(3, 1, 3) == ExactMatrix.from_entries(3, 3, {(0, 2): 1})
    assert direct_sum([M, ExactMatrix([[5]])]).shape == (3, 3)
    assert block_matrix([[M, M]]).shape == (2, 4)
    with pytest.raises(PreconditionError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(PreconditionError):
        inverse(ExactMatrix([[1, 2], [2, 4]]))


@settings(max_examples=40, deadline=None)
@given(small_matrix(3), small_matrix(3))
def test_determinant_multiplicative(A, B):
    assert determinant(A @ B) == determinant(A) * determinant(B)


@settings(max_examples=40, deadline=None)
@given(small_matrix(4))
def test_rank_nullity(M):
    ker = kernel(M)
    assert rank(M) + len(ker) == 4
    assert all((M @ v).is_zero() for v in ker)
    R, pivots, r = rref(M)
    assert r == rank(M) == len(pivots)


def test_kernel_intersection():
    A = ExactMatrix.from_entries(3, 3, {(0, 2): 1})
    vs = kernel_intersection(A, A.T)
    assert len(vs) == 1 and vs[0][1, 0] != 0


def test_json_round_trip():
    M = ExactMatrix([[Fraction(1, 3), -2], [0, 7]])
    assert loads_matrix(dumps_matrix(M)) == M
    Z = ExactMatrix([[GaussianRational(1, -1), 0], [0, GaussianRational(0, 2)]], QI)
    assert loads_matrix(dumps_matrix(Z)) == Z
    with pytest.raises(ParseError):
        loads_matrix('{"rows": 1}')
    with pytest.raises(ParseError):
        loads_matrix("not json")


def test_solve_tangent_An():
    for n in range(2, 9):
        B = solve_tangent(An(n))
        assert B.verify(An(n))
        assert B.dim == -(-(n - 2) // 2) + 1


def test_span_equal():
    a = ExactMatrix([[1, 0], [0, 0]])
    b = ExactMatrix([[0, 0], [0, 1]])
    assert span_equal([a, b], [a + b, a - b])
    assert not span_equal([a], [b])


def test_is_solution():
    A = An(3)
    assert is_solution(ExactMatrix.identity(3), A)
    assert not is_solution(ExactMatrix.identity(3).scale(2), A)
