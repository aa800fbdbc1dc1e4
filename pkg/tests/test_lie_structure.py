import math

import pytest

from congmon.errors import PreconditionError
from congmon.exact_core import solve_tangent, span_equal
from congmon.lie_structure import (
    FIXTURES,
    An,
    An2,
    an2_family,
    an_family,
    basis_solAn,
    basis_solAn2,
    basis_solAn2_padded,
    bracket_table,
    compare_with_fixture,
    derived_series,
    generators,
    generators_solAn,
    is_solvable,
    pad_for_blocks,
    phi_morphism_check,
    radical_decomposition,
    strip,
    untabulated,
)


def test_family_dispatch():
    assert an_family(5) == "An-odd" and an_family(6) == "An-even"
    assert [an2_family(n) for n in (8, 9, 10, 11)] == ["An2-mod0", "An2-mod1", "An2-mod2", "An2-mod3"]
    with pytest.raises(PreconditionError):
        an2_family(3)


def test_pad_strip():
    M = An2(5)
    assert strip(pad_for_blocks(M)) == M
    assert pad_for_blocks(M).shape == (6, 6)


@pytest.mark.parametrize("n", range(2, 13))
def test_An_closed_form(n):
    B = basis_solAn(n)
    assert B.verify(An(n))
    assert span_equal(B, solve_tangent(An(n)))
    assert B.dim == math.ceil((n - 2) / 2) + 1


@pytest.mark.parametrize("n,extra", [(4, 0), (8, 0), (6, 2), (10, 2), (5, 0), (9, 0), (7, 1), (11, 1)])
def test_An2_closed_form(n, extra):
    B = basis_solAn2(n)
    assert B.verify(An2(n))
    assert span_equal(B, solve_tangent(An2(n)))
    assert B.dim == n + extra
    P = basis_solAn2_padded(n)
    assert P.dim == B.dim


@pytest.mark.parametrize("kind,n", [("an", 5), ("an", 6), ("an2", 8), ("an2", 9), ("an2", 10), ("an2", 11)])
def test_generators_span_and_brackets(kind, n):
    G = generators(kind, n)
    A = An(n) if kind == "an" else An2(n)
    assert G.verify()
    assert span_equal(list(G.matrices), solve_tangent(A))
    T = bracket_table(G)
    assert T.is_antisymmetric()
    assert T.satisfies_jacobi()
    assert T.rematerializes(G)


def test_An_fixtures_match():
    for n in (3, 5, 7):
        assert compare_with_fixture(bracket_table(generators_solAn(n)), FIXTURES["An-odd"]) == []
    for n in (4, 6, 8):
        assert compare_with_fixture(bracket_table(generators_solAn(n)), FIXTURES["An-even"]) == []


def test_An2_fixture_mismatches_are_reported():
    T = bracket_table(generators("an2", 9))
    bad = compare_with_fixture(T, FIXTURES["An2-mod1"])
    assert {(m.row, m.col) for m in bad} >= {("h1", "f")}
    assert untabulated(T, FIXTURES["An2-mod1"]) == []


def test_bracket_json_shape():
    out = bracket_table(generators("an", 5)).to_json()
    assert out["labels"] == ["h", "e1", "e2"]
    assert [0, 1, [["2", "e1"]]] in out["entries"]


@pytest.mark.parametrize("n", range(2, 11))
def test_An_solvable(n):
    B = basis_solAn(n)
    assert derived_series(B)[-1] == 0
    assert is_solvable(B)


@pytest.mark.parametrize("n", [8, 12, 6, 10, 9, 13, 7, 11])
def test_An2_radicals(n):
    rep = radical_decomposition(n, "an2")
    assert rep.ok
    assert rep.radical_solvable


def test_mod2_radical_not_nilpotent():
    rep = radical_decomposition(10, "an2")
    assert not rep.radical_nilpotent
    assert radical_decomposition(8, "an2").radical_nilpotent


def test_phi_morphism_fails_only_on_e_g():
    ok, bad = phi_morphism_check(1)
    assert not ok
    assert all(b.startswith("[e, g]") or b.startswith("[g, e]") for b in bad)
