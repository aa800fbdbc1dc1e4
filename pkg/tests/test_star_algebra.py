import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from congmon.errors import ParseError, PreconditionError
from congmon.exact_core import ExactMatrix
from congmon.group_builders import GroupParams, star_sequence
from congmon.star_algebra import (
    APPENDIX,
    BODY,
    LEMMAS,
    FreePoly,
    L,
    matrix_substitute,
    monomial_counts,
    random_assignment,
    select_convention,
    star,
    star_one_matrix_check,
    verify_lemma,
    verify_star_one,
    z_poly,
    z_star,
)
from congmon.star_algebra.freepoly import letter, letter_name, parse_letter

gens = st.builds(FreePoly.gen, st.sampled_from("xyz"), st.integers(1, 3), st.booleans())
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw):
    p = FreePoly.zero()
    for _ in range(draw(st.integers(0, 3))):
        term = FreePoly.one() * draw(coeffs)
        for _ in range(draw(st.integers(0, 3))):
            term = term * draw(gens)
        p = p + term
    return p


@given(polys(), polys())
def test_involution_is_anti_automorphism(p, q):
    assert (p * q).t() == q.t() * p.t()
    assert p.t().t() == p
    assert (p + q).t() == p.t() + q.t()


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert (p - p).is_zero()


def test_letter_codes():
    assert letter_name(letter("y", 3, True)) == "y3t"
    assert parse_letter("x12") == letter("x", 12)
    with pytest.raises(ParseError):
        parse_letter("w1")


def test_small_stars():
    assert star(1).is_zero()
    assert str(star(2)) == "x1t*x1t"
    assert str(star(3)) == "x1t*x2t + x2t*x1t - x1t*x1t*x1t"
    assert monomial_counts(7) == [0, 1, 3, 7, 15, 31, 63]


def test_L_conventions_are_negatives():
    assert L(3, APPENDIX) == -L(3, BODY)
    with pytest.raises(PreconditionError):
        L(2, "other")


def test_z_star_degree_two():
    # z_2^* = z_1^t z_1^t
    assert z_star(2) == z_poly(1).t() * z_poly(1).t()


@pytest.mark.parametrize("n", range(1, 7))
def test_star_one_body(n):
    rep = verify_star_one(n, BODY)
    assert rep.equal
    assert rep.to_json()["equal"] is True


def test_star_one_appendix_fails_from_degree_two():
    assert verify_star_one(1, APPENDIX).equal
    rep = verify_star_one(3, APPENDIX)
    assert not rep.equal and "diff" in rep.to_json()


def test_convention_selection_unique():
    sel = select_convention(5)
    assert sel["winners"] == [(BODY, "xy")]


@pytest.mark.parametrize("which", sorted(LEMMAS))
@pytest.mark.parametrize("n", range(2, 6))
def test_lemmas_body(which, n):
    assert verify_lemma(which, n, BODY).equal


def test_lemma_star_two_appendix_fails():
    assert not verify_lemma("star_two", 3, APPENDIX).equal
    with pytest.raises(PreconditionError):
        verify_lemma("nope", 3)


def test_matrix_substitution():
    rng = random.Random(1)
    assert star_one_matrix_check(4, 5, rng)
    a = ExactMatrix([[1, 2], [3, 4]])
    p = FreePoly.gen("x", 1) * FreePoly.gen("x", 1, True) * Fraction(2)
    assert matrix_substitute(p, {"x1": a}) == (a @ a.T).scale(2)
    assert matrix_substitute(FreePoly.gen("y", 1), {("x", 1): a}).is_zero()
    with pytest.raises(PreconditionError):
        matrix_substitute(p, {"x1t": a})


def test_matches_group_builders_mod0():
    rng = random.Random(2)
    p = GroupParams.random("An2-mod0", 24, rng)
    seq = star_sequence(p, 5)
    asg = {f"x{i}": p.nil[i - 1] for i in range(1, 6)}
    for l in range(1, 6):
        assert seq[l - 1] == matrix_substitute(star(l), asg, size=2)


def test_random_assignment_keys():
    asg = random_assignment(2, random.Random(0), vars_="xy")
    assert sorted(asg) == ["x1", "x2", "y1", "y2"]
