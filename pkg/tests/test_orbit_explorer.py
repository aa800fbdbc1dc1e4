import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congmon.acceptance import random_Y
from congmon.errors import PreconditionError
from congmon.exact_core import ExactMatrix, block_matrix, prime_field
from congmon.group_builders import GroupParams, build
from congmon.lie_structure import family_matrix
from congmon.orbit_explorer import (
    BULLET_PREDICTION,
    FORCED_ONE,
    FREE,
    ROWS_16,
    ROWS_25,
    ROWS_34,
    a8sq_display,
    a8sq_element,
    orbit_display_e_identity,
    orbit_sample,
    singular_subspace_2x2,
    stabilizer_solA6,
    stabilizer_trivial_solA8sq,
    subspace_shapes,
)


def E(i, j, n=2):
    return ExactMatrix.from_entries(n, n, {(i - 1, j - 1): 1})


def m2(a, b, c, d):
    return ExactMatrix([[a, b], [c, d]])


def test_zero_Y_full_group():
    rep = stabilizer_solA6(ExactMatrix.zeros(6, 6))
    assert rep.x0_constraint == FREE and rep.nil_dim == 2


def test_identity_Y_trivial():
    rep = stabilizer_solA6(ExactMatrix.identity(6))
    assert rep.x0_constraint == FORCED_ONE and rep.nil_dim == 0


def test_rows_34_x2_family():
    Y = ExactMatrix.from_entries(6, 6, {(2, 0): 1, (3, 4): 3})
    rep = stabilizer_solA6(Y)
    assert rep.classification == ROWS_34
    assert rep.nil_basis == [(0, 1)]


@pytest.mark.parametrize("cls", [ROWS_16, ROWS_25, ROWS_34])
def test_random_classes(cls):
    rng = random.Random(cls)
    for _ in range(10):
        Y = random_Y(cls, rng)
        rep = stabilizer_solA6(Y)
        assert rep.classification == cls
        assert rep.nil_dim == BULLET_PREDICTION[cls]
        assert rep.spot_check(rng)


def test_first_bullet_flagged_when_other_rows_present():
    Y = ExactMatrix.from_entries(6, 6, {(0, 0): 1, (1, 1): 1})
    rep = stabilizer_solA6(Y)
    assert rep.literal_bullets[ROWS_16] is False
    assert rep.findings


def test_x0_two_moves_Y():
    Y = ExactMatrix.from_entries(6, 6, {(0, 2): 1})
    rep = stabilizer_solA6(Y)
    assert not rep.contains(GroupParams("An-even", 6, (2,), (0, 0)))
    assert rep.contains(GroupParams("An-even", 6, (1,), (5, 7)))


def test_A6_shape_check():
    with pytest.raises(PreconditionError):
        stabilizer_solA6(ExactMatrix.identity(5))


def test_singular_subspace_examples():
    assert singular_subspace_2x2([E(1, 1), E(2, 1)])
    assert not singular_subspace_2x2([ExactMatrix.identity(2)])
    assert not singular_subspace_2x2([E(1, 1), E(2, 2)])
    assert subspace_shapes([E(1, 1), E(2, 1)]) == ["(* 0; * 0)"]
    with pytest.raises(PreconditionError):
        singular_subspace_2x2([ExactMatrix.identity(2, prime_field(2))])


entries = st.integers(-2, 2)
mats = st.lists(entries, min_size=4, max_size=4).map(lambda v: m2(*v))


@settings(max_examples=60, deadline=None)
@given(st.lists(mats, min_size=1, max_size=3))
def test_singular_subspace_matches_f5_exhaustive(ms):
    F5 = prime_field(5)
    reduced = [M.change_field(F5) for M in ms]
    brute = True
    for t in itertools.product(range(5), repeat=len(ms)):
        S = ExactMatrix.zeros(2, 2, F5)
        for c, M in zip(t, reduced):
            S = S + M.scale(c)
        if S[0, 0] * S[1, 1] - S[0, 1] * S[1, 0]:
            brute = False
            break
    exact = singular_subspace_2x2(ms)
    # reduction mod 5 can only make more combinations singular
    if not brute:
        assert not exact
    if exact:
        assert brute


def _example_X():
    Z = m2(0, 0, 0, 0)
    I2 = m2(1, 0, 0, 1)
    f, g, h = m2(1, 2, 0, 1), m2(0, 1, 1, 0), m2(2, 0, 3, 1)
    i, j, k, l = m2(1, 1, 0, 2), m2(0, 3, 1, 1), m2(1, 0, 0, 0), m2(2, 2, 1, 1)
    return block_matrix([[Z, Z, Z, Z], [I2, f, g, h], [i, j, k, l], [Z, Z, Z, Z]]), (f, g, h, i, j, k, l)


def test_A8sq_e_identity_trivial():
    X, _ = _example_X()
    rep = stabilizer_trivial_solA8sq(X)
    assert rep.trivial and rep.witness_row == "efgh"
    rng = random.Random(0)
    for _ in range(10):
        g = build(GroupParams.random("An2-mod0", 8, rng))
        if g != ExactMatrix.identity(8):
            assert g @ X != X


def test_A8sq_inconclusive_reports_shapes():
    Z = m2(0, 0, 0, 0)
    rows = [[Z] * 4, [m2(0, 0, 1, 2), m2(0, 0, 3, 0), Z, m2(0, 0, 0, 1)], [Z] * 4, [Z] * 4]
    rep = stabilizer_trivial_solA8sq(block_matrix(rows))
    assert not rep.trivial
    assert "(0 0; * *)" in rep.shapes["efgh"]
    assert not stabilizer_trivial_solA8sq(ExactMatrix.zeros(8, 8)).trivial
    with pytest.raises(PreconditionError):
        stabilizer_trivial_solA8sq(ExactMatrix.zeros(6, 6))


def test_orbit_display():
    X, blocks = _example_X()
    s, x = m2(2, 1, 1, 1), m2(1, -2, 3, 5)
    out = orbit_display_e_identity(s, x, *blocks)
    assert out["matches"] and out["alpha_is_member"]
    assert not out["literal_display_is_member"]
    assert a8sq_display(s, x) == a8sq_element(s, x)


def test_orbit_sample_invariant():
    rng = random.Random(3)
    Y = ExactMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(8)] for _ in range(8)])
    A = family_matrix("An2-mod0", 8)
    W = orbit_sample("an2", 8, Y, seed=1, count=10, include_identity=True)
    assert W[0] == Y and len(W) == 10
    assert all(w.T @ A @ w == Y.T @ A @ Y for w in W)
    with pytest.raises(PreconditionError):
        orbit_sample("an", 6, Y)
