import pytest

from congmon.canonical_forms import (
    CanonicalBlock,
    assemble,
    decompose_An_power,
    make_An,
    make_An_power,
    make_block,
    make_sigma,
    relabeled_path_target,
    sigma_target,
)
from congmon.errors import PreconditionError
from congmon.exact_core import ExactMatrix, determinant


def test_block_shapes():
    assert make_block(CanonicalBlock("a", 1)) == ExactMatrix([[0]])
    assert make_block(CanonicalBlock("A_odd", 3)).shape == (3, 3)
    B = make_block(CanonicalBlock("b", 4, 2))
    assert B[0, 3] == 1 and B[1, 3] == 2
    assert determinant(make_block(CanonicalBlock("e", 2))) != 0
    assert assemble([CanonicalBlock("a", 1), CanonicalBlock("c", 3)]).shape == (4, 4)


@pytest.mark.parametrize("bad", [("a", 2, None), ("b", 3, 2), ("b", 4, None), ("b", 4, 1), ("d", 2, None), ("f", 4, None), ("zz", 2, None)])
def test_block_preconditions(bad):
    with pytest.raises(PreconditionError):
        CanonicalBlock(*bad)


def test_An_power():
    M = make_An_power(8, 2)
    assert all(M[i, j] == (1 if j == i + 2 else 0) for i in range(8) for j in range(8))
    assert make_An(5) @ make_An(5) == make_An_power(5, 2)
    with pytest.raises(PreconditionError):
        make_An_power(3, 3)


@pytest.mark.parametrize("n", range(2, 21))
def test_sigma_congruence(n):
    S = make_sigma(n)
    assert S @ S.T == ExactMatrix.identity(n)
    assert S.T @ make_An(n) @ S == sigma_target(n)


def test_relabeled_path_small():
    T = relabeled_path_target(4)
    # path 1 -> 4 -> 2 -> 3
    assert {(i, j) for i in range(4) for j in range(4) if T[i, j]} == {(0, 3), (3, 1), (1, 2)}


@pytest.mark.parametrize("n", range(2, 13))
def test_power_decomposition_certified(n):
    for k in range(1, n):
        dec = decompose_An_power(n, k)
        assert sum(dec.sizes) == n
        assert len(dec.sizes) == k


def test_power_formula_vertex_reading():
    dec = decompose_An_power(8, 2)
    assert dec.sizes == [4, 4]
    assert not dec.formula_matches
    assert dec.formula["vertex_reading_matches"]
