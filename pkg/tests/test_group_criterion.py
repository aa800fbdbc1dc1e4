import random

import pytest

from congmon.canonical_forms import CanonicalBlock
from congmon.errors import PreconditionError
from congmon.exact_core import QI, ExactMatrix, determinant, is_solution, kernel_intersection, prime_field
from congmon.group_criterion import (
    brute_force_monoid,
    build_singular_solution,
    is_group_complex,
    is_group_direct_sum,
    is_group_jordan_chevalley,
    is_group_star,
    necessary_condition_anyfield,
    pencil_completely_singular,
)
from congmon.lie_structure import An

I_ = QI.sqrt_minus_one()


def test_isotropic_example_not_group():
    A = ExactMatrix([[1, I_], [I_, -1]], QI)
    v = is_group_complex(A)
    assert not v.is_group
    assert determinant(v.witness) == 0
    assert is_solution(v.witness, A)
    assert "witness" in v.to_json()


@pytest.mark.parametrize("n", range(3, 9))
def test_An_is_group(n):
    v = is_group_complex(An(n))
    assert v.is_group and v.witness is None


def test_jordan_chevalley_pair():
    E13 = ExactMatrix.from_entries(3, 3, {(0, 2): 1})
    D = ExactMatrix.diag([0, 1, 0])
    assert not is_group_complex(E13).is_group
    assert is_group_complex(D + E13).is_group
    assert not is_group_jordan_chevalley(ExactMatrix.zeros(3, 3), E13).is_group
    assert is_group_jordan_chevalley(D, E13).is_group


def test_jordan_chevalley_rejects_bad_nil():
    with pytest.raises(PreconditionError):
        is_group_jordan_chevalley(ExactMatrix.zeros(2, 2), ExactMatrix([[0, 2], [0, 0]]))


def test_singular_witness_nilpotent_case():
    # v = (1, i) has v^t v = 0
    A = ExactMatrix([[1, I_], [I_, -1]], QI)
    X = build_singular_solution(A)
    assert determinant(X) == 0 and is_solution(X, A)


def test_star_variant():
    A = ExactMatrix([[1, 0], [0, 0]], QI)
    v = is_group_star(A)
    assert not v.is_group
    X = v.witness
    assert X.H @ A @ X == A


def test_invariant_under_congruence():
    rng = random.Random(1)
    A = ExactMatrix([[1, 2, 0], [0, 0, 0], [3, 0, 0]])
    base = is_group_complex(A).is_group
    for _ in range(5):
        while True:
            P = ExactMatrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
            if determinant(P):
                break
        assert is_group_complex(P.T @ A @ P).is_group == base
        assert is_group_complex(A.scale(5)).is_group == base


def test_witness_certifies_every_negative():
    rng = random.Random(2)
    for _ in range(30):
        A = ExactMatrix([[rng.randint(-1, 1) for _ in range(3)] for _ in range(3)])
        v = is_group_complex(A)
        if not v.is_group:
            W = v.witness
            assert determinant(W) == 0 and is_solution(W, A.change_field(QI))
        else:
            assert necessary_condition_anyfield(A)


def test_direct_sum_rule():
    assert not is_group_direct_sum([CanonicalBlock("A_odd", 1), CanonicalBlock("A_odd", 3)])
    assert is_group_direct_sum([CanonicalBlock("A_odd", 3), CanonicalBlock("E_even", 2)])


def test_pencil():
    A = ExactMatrix.from_entries(3, 3, {(0, 2): 1})
    assert pencil_completely_singular(A, A.T)
    assert not pencil_completely_singular(An(3) + An(3).T, An(3))


def test_brute_force_small_cases():
    F3 = prime_field(3)
    assert brute_force_monoid(ExactMatrix.identity(2, F3))[2]
    assert brute_force_monoid(ExactMatrix([[0, 1], [0, 0]], F3))[2]
    assert not brute_force_monoid(ExactMatrix([[0]], F3))[2]
    with pytest.raises(PreconditionError):
        brute_force_monoid(ExactMatrix.identity(2))


def test_brute_force_agrees_with_kernel_predicate_f5():
    F5 = prime_field(5)
    rng = random.Random(5)
    for _ in range(15):
        A = ExactMatrix([[rng.randrange(5) for _ in range(2)] for _ in range(2)], F5)
        assert brute_force_monoid(A)[2] == (not kernel_intersection(A, A.T))


def test_rejects_prime_field_input():
    with pytest.raises(PreconditionError):
        is_group_complex(ExactMatrix.identity(2, prime_field(5)))
