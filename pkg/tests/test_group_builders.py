import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congmon.acceptance import group_round_trip
from congmon.errors import PreconditionError
from congmon.exact_core import ExactMatrix, determinant, is_solution
from congmon.group_builders import (
    GroupParams,
    build,
    build_D,
    build_N,
    closed_form_agrees,
    compose,
    conjugation_check,
    invert,
    invert_nil,
    nil_count,
    prod_multiplicative_holds,
    refactor_N,
    semidirect_factor,
    star_closed_form,
    star_sequence,
    z_params,
)
from congmon.lie_structure import family_matrix

CASES = [("An-odd", 7), ("An-odd", 5), ("An-even", 8), ("An-even", 6), ("An2-mod0", 8), ("An2-mod0", 12),
         ("An2-mod2", 10), ("An2-mod2", 6), ("An2-mod1", 9), ("An2-mod1", 13), ("An2-mod3", 11), ("An2-mod3", 7)]


def test_nil_counts():
    assert nil_count("An-odd", 7) == 3
    assert nil_count("An-even", 8) == 3
    assert nil_count("An2-mod0", 8) == 1
    assert nil_count("An2-mod2", 10) == 2
    assert nil_count("An2-mod1", 9) == 3
    assert nil_count("An2-mod3", 11) == 4


@pytest.mark.parametrize("family,n", CASES)
def test_identity_builds_identity(family, n):
    assert build(GroupParams.identity(family, n)) == ExactMatrix.identity(n)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CASES), st.integers(0, 10**6))
def test_round_trip_property(case, seed):
    family, n = case
    rng = random.Random(seed)
    g = GroupParams.random(family, n, rng)
    h = GroupParams.random(family, n, rng, lam=g.lam if family == "An2-mod3" else None)
    assert group_round_trip(g, h) == []


@pytest.mark.parametrize("lam", [0, 1, 2])
def test_mod3_lambda_sweep(lam):
    rng = random.Random(lam)
    for _ in range(5):
        g = GroupParams.random("An2-mod3", 11, rng, lam=lam)
        assert is_solution(build(g), family_matrix("An2-mod3", 11))
        assert build(invert(g)) @ build(g) == ExactMatrix.identity(11)


def test_mod0_special_linear():
    rng = random.Random(3)
    for _ in range(10):
        assert determinant(build(GroupParams.random("An2-mod0", 12, rng))) == 1


def test_A6_display():
    N = build(GroupParams("An-even", 6, (1,), (3, 5)))
    assert N[5, 1] == 4  # x1^2 - x2
    assert build(GroupParams("An-even", 6, (2,), (3, 5)))[5, 1] == 2


def test_nil_inverse_formula():
    rng = random.Random(4)
    for family, n in CASES:
        p = GroupParams.random(family, n, rng).nil_only()
        assert build_N(invert_nil(p)) @ build_N(p) == ExactMatrix.identity(n)


def test_compose_refactors():
    rng = random.Random(5)
    g, h = GroupParams.random("An2-mod1", 9, rng), GroupParams.random("An2-mod1", 9, rng)
    P, r = compose(g, h)
    assert build(r) == P == build(g) @ build(h)


def test_semidirect_and_conjugation():
    rng = random.Random(6)
    g = GroupParams.random("An2-mod2", 10, rng)
    d, nPart = semidirect_factor(build(g), "An2-mod2", 10)
    assert build_D(d) @ build_N(nPart) == build(g)
    assert conjugation_check(d, nPart)


def test_factor_rejects_non_members():
    with pytest.raises(PreconditionError):
        semidirect_factor(ExactMatrix.identity(8).scale(2), "An2-mod0", 8)
    with pytest.raises(PreconditionError):
        refactor_N(build_D(GroupParams.random("An-even", 8, random.Random(1))), "An-even", 8)


def test_param_validation():
    with pytest.raises(PreconditionError):
        GroupParams("An-even", 6, (0,), (1, 2))
    with pytest.raises(PreconditionError):
        GroupParams("An-even", 6, (1,), (1,))
    with pytest.raises(PreconditionError):
        GroupParams("An-even", 6, (1,), (1, 2), lam=1)
    with pytest.raises(PreconditionError):
        GroupParams("An2-mod0", 8, (ExactMatrix([[1, 1], [1, 1]]),), (ExactMatrix.zeros(2, 2),))
    with pytest.raises(PreconditionError):
        GroupParams("An-even", 7, (1,), (1, 2))


def test_json_round_trip():
    rng = random.Random(7)
    for family, n in CASES:
        p = GroupParams.random(family, n, rng)
        assert GroupParams.from_json(p.to_json()) == p


def test_star_closed_form():
    rng = random.Random(8)
    s = GroupParams.random("An-even", 14, rng)
    assert closed_form_agrees(s, 6)
    assert closed_form_agrees(GroupParams.random("An2-mod0", 16, rng), 6)
    # x_2^* = x_1^2 for scalars
    assert star_sequence(s, 2)[1] == s.nil[0] ** 2
    assert star_closed_form(s, 2) == s.nil[0] ** 2


def test_star_sequence_odd_type_is_zero():
    p = GroupParams.random("An-odd", 9, random.Random(9))
    assert all(x == 0 for x in star_sequence(p, 3))


def test_product_rule():
    rng = random.Random(10)
    for family, n in (("An-even", 12), ("An2-mod0", 16)):
        x = GroupParams.random(family, n, rng, with_diag=False)
        y = GroupParams.random(family, n, rng, with_diag=False)
        assert prod_multiplicative_holds(x, y, 5)
        z = x.with_nil(tuple(z_params(x, y)))
        assert build_N(x) @ build_N(y) == build_N(z)


def test_scalar_fields():
    g = GroupParams("An-even", 6, (Fraction(2, 3),), (Fraction(1, 2), -1))
    assert is_solution(build(g), family_matrix("An-even", 6))


def test_odd_type_nil_square_zero():
    rng = random.Random(11)
    for family, n in (("An-odd", 9), ("An2-mod2", 14)):
        X = build_N(GroupParams.random(family, n, rng)) - ExactMatrix.identity(n)
        assert (X @ X).is_zero()
