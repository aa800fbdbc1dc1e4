"""The ten acceptance criteria as plain functions returning pass/fail with detail."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import CongmonError
from .exact_core import QI, ExactMatrix, block_matrix, is_solution, kernel_intersection, prime_field, solve_tangent, span_equal


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.title} -- {self.detail}"


# ---------------------------------------------------------------- 1, 2
def criterion_1(quick: bool = False) -> Result:
    from .lie_structure import An, basis_solAn

    bad = []
    top = 8 if quick else 12
    for n in range(2, top + 1):
        B = basis_solAn(n)
        ok = span_equal(B, solve_tangent(An(n))) and B.dim == math.ceil((n - 2) / 2) + 1
        if not ok:
            bad.append(n)
    return Result(1, "closed form equals generic solver for A_n", not bad, f"n = 2..{top}, failures {bad}")


AN2_SIZES = {"An2-mod0": [4, 8, 12], "An2-mod2": [6, 10], "An2-mod1": [5, 9, 13], "An2-mod3": [7, 11]}
AN2_DIM = {"An2-mod0": 0, "An2-mod2": 2, "An2-mod1": 0, "An2-mod3": 1}


def criterion_2(quick: bool = False) -> Result:
    from .lie_structure import An2, basis_solAn2_padded, pad_for_blocks

    bad = []
    for fam, sizes in AN2_SIZES.items():
        for n in sizes[:2] if quick else sizes:
            B = basis_solAn2_padded(n)
            G = solve_tangent(An2(n))
            if n % 2:
                A = pad_for_blocks(An2(n))
                gen = [pad_for_blocks(M) for M in G.basis]
            else:
                A = An2(n)
                gen = list(G.basis)
            ok = B.verify(A) and span_equal(list(B.basis), gen) and B.dim == n + AN2_DIM[fam]
            if not ok:
                bad.append(n)
    return Result(2, "closed form equals generic solver for A_n^2", not bad, f"failures {bad}")


# ---------------------------------------------------------------- 3, 4
BRACKET_SIZES = {"An-odd": [3, 7], "An-even": [2, 4, 8], "An2-mod0": [4, 8], "An2-mod2": [6, 10],
                 "An2-mod1": [5, 9], "An2-mod3": [7, 11]}


def criterion_3(quick: bool = False) -> Result:
    from .lie_structure import FIXTURES, bracket_table, compare_with_fixture, generators

    mismatches = []
    structural = []
    for fam, sizes in BRACKET_SIZES.items():
        kind = "an" if fam.startswith("An-") else "an2"
        for n in sizes:
            G = generators(kind, n)
            T = bracket_table(G)
            if not (T.is_antisymmetric() and T.satisfies_jacobi() and T.rematerializes(G)):
                structural.append(f"{fam} n={n}")
            for m in compare_with_fixture(T, FIXTURES[fam]):
                mismatches.append(f"{fam} n={n} {m}")
    detail = f"{len(mismatches)} fixture mismatches, structural failures {structural}"
    if mismatches:
        detail += "; " + "; ".join(mismatches)
    return Result(3, "bracket tables match published fixtures", not mismatches and not structural, detail)


def criterion_4(quick: bool = False) -> Result:
    from .lie_structure import radical_decomposition

    bad = []
    for n in range(2, 9 if quick else 13):
        rep = radical_decomposition(n, "an")
        if rep.derived_dims[-1] != 0:
            bad.append(f"A_{n}")
    for fam, sizes in AN2_SIZES.items():
        for n in sizes[:1] if quick else sizes:
            rep = radical_decomposition(n, "an2")
            ok = rep.radical_solvable and all(rep.checks.values())
            if fam in ("An2-mod0", "An2-mod2"):
                ok = ok and rep.is_ideal and bool(rep.sl2_relations)
            if not ok:
                bad.append(f"{fam} n={n}")
    return Result(4, "radicals solvable with the stated quotients", not bad, f"failures {bad}")


# ---------------------------------------------------------------- 5
GROUP_SIZES = {"An-odd": 7, "An-even": 8, "An2-mod0": 8, "An2-mod2": 10, "An2-mod1": 9, "An2-mod3": 11}


def group_round_trip(g, h) -> list[str]:
    """Every group-construction check on one pair of parameter draws."""
    from .group_builders import build, compose, conjugation_check, invert, merge, semidirect_factor
    from .exact_core import determinant
    from .lie_structure import family_matrix

    fails = []
    A = family_matrix(g.family, g.n, g.field)
    X = build(g)
    if not is_solution(X, A):
        fails.append("membership")
    P, r = compose(g, h)
    if build(r) != P or not is_solution(P, A):
        fails.append("closure")
    if build(invert(g)) @ X != ExactMatrix.identity(g.n, g.field):
        fails.append("inverse")
    d, nPart = semidirect_factor(X, g.family, g.n)
    if build(merge(d, nPart)) != X or not conjugation_check(d, nPart):
        fails.append("semidirect")
    if g.family == "An2-mod0" and determinant(X) != 1:
        fails.append("det")
    return fails


def criterion_5(quick: bool = False) -> Result:
    from .group_builders import GroupParams

    draws = 10 if quick else 100
    failures: dict[str, int] = {}
    for fam, n in GROUP_SIZES.items():
        rng = random.Random(f"c5-{fam}")
        count = 0
        for k in range(draws):
            lam = k % 3 if fam == "An2-mod3" else None
            g = GroupParams.random(fam, n, rng, lam=lam)
            h = GroupParams.random(fam, n, rng, lam=lam)
            try:
                if group_round_trip(g, h):
                    count += 1
            except CongmonError:
                count += 1
        failures[fam] = count
    ok = not any(failures.values())
    return Result(5, "group constructions", ok, f"{draws} draws per family, failures {failures}")


# ---------------------------------------------------------------- 6
def _sample_2x2_f5(count: int, rng: random.Random) -> list[ExactMatrix]:
    F5 = prime_field(5)
    seen = []
    for flat in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 2, 2, 4), (1, 0, 0, 1)]:
        seen.append(flat)
    while len(seen) < count:
        flat = tuple(rng.randrange(5) for _ in range(4))
        if flat not in seen:
            seen.append(flat)
    return [ExactMatrix([[a, b], [c, d]], F5) for a, b, c, d in seen]


def criterion_6(quick: bool = False) -> Result:
    from .group_criterion import brute_force_monoid, is_group_complex, is_group_jordan_chevalley
    from .lie_structure import An

    problems = []
    i = QI.sqrt_minus_one()
    M = ExactMatrix([[1, i], [i, -1]], QI)
    v = is_group_complex(M)
    if v.is_group or v.witness is None or not is_solution(v.witness, M):
        problems.append("[[1,i],[i,-1]]")
    for n in range(3, 9):
        if not is_group_complex(An(n)).is_group:
            problems.append(f"A_{n}")
    E13 = ExactMatrix.from_entries(3, 3, {(0, 2): 1})
    D = ExactMatrix.diag([0, 1, 0])
    if is_group_complex(E13).is_group or not is_group_complex(D + E13).is_group:
        problems.append("E13 pair")
    if is_group_jordan_chevalley(ExactMatrix.zeros(3, 3), E13).is_group or not is_group_jordan_chevalley(D, E13).is_group:
        problems.append("E13 pair (Jordan-Chevalley)")

    disagreements = []
    for A in _sample_2x2_f5(10 if quick else 50, random.Random(6)):
        _, _, brute = brute_force_monoid(A)
        pred = not kernel_intersection(A, A.T)
        if brute != pred:
            disagreements.append(str(A.tolist()))
    detail = f"fixture problems {problems}; F5 disagreements {len(disagreements)} {disagreements}"
    return Result(6, "group criterion and brute force over F5", not problems, detail)


# ---------------------------------------------------------------- 7
def criterion_7(quick: bool = False) -> Result:
    from .canonical_forms import decompose_An_power, make_An, make_sigma, sigma_target

    bad = []
    for n in range(2, (12 if quick else 20) + 1):
        S = make_sigma(n)
        if S.T @ make_An(n) @ S != sigma_target(n):
            bad.append(f"sigma_{n}")
    literal_mismatch = []
    vertex_mismatch = []
    for n in range(2, (10 if quick else 16) + 1):
        for k in range(1, n):
            try:
                dec = decompose_An_power(n, k)
            except CongmonError:
                bad.append(f"power ({n},{k})")
                continue
            if not dec.formula_matches:
                literal_mismatch.append((n, k))
            if not dec.formula["vertex_reading_matches"]:
                vertex_mismatch.append((n, k))
    logged = (8, 2) in literal_mismatch or quick
    detail = (f"failures {bad}; literal (n1, alpha, beta) sizes differ in {len(literal_mismatch)} cases "
              f"including (8, 2); vertex-count reading differs in {len(vertex_mismatch)}")
    return Result(7, "canonical congruences", not bad and logged, detail)


# ---------------------------------------------------------------- 8, 9
def criterion_8(quick: bool = False) -> Result:
    from .star_algebra import LEMMAS, matrix_substitute, random_assignment, select_convention, star_one_sides, verify_lemma, verify_star_one

    top = 4 if quick else 6
    sel = select_convention(top)
    if len(sel["winners"]) != 1:
        return Result(8, "product identity", False, f"convention winners {sel['winners']}")
    conv, reading = sel["winners"][0]
    problems = [n for n in range(1, top + 1) if not verify_star_one(n, conv, reading).equal]
    for which in LEMMAS:
        for n in range(2, (4 if quick else 5) + 1):
            if not verify_lemma(which, n, conv).equal:
                problems.append(f"{which} n={n}")
    trials = 5 if quick else 50
    rng = random.Random(8)
    pairs = [(f"star_one n={n}", *star_one_sides(n, conv, reading)) for n in range(1, top + 1)]
    for which, fn in LEMMAS.items():
        for n in range(2, (4 if quick else 5) + 1):
            for k, (l, r) in enumerate(fn(n, conv)):
                pairs.append((f"{which} n={n} part {k}", l, r))
    for name, lhs, rhs in pairs:
        for _ in range(trials):
            asg = random_assignment(max(1, top), rng, vars_="xyz")
            if matrix_substitute(lhs, asg) != matrix_substitute(rhs, asg):
                problems.append(f"matrix {name}")
                break
    detail = f"selected L convention {conv} with reading {reading}; problems {problems}"
    return Result(8, "product identity and supporting lemmas", not problems, detail)


def criterion_9(quick: bool = False) -> Result:
    from .group_builders import GroupParams, closed_form_agrees, star_sequence
    from .star_algebra import matrix_substitute, star

    problems = []
    rng = random.Random(9)
    for _ in range(2 if quick else 10):
        p = GroupParams.random("An2-mod0", 24, rng)
        seq = star_sequence(p, 5)
        asg = {f"x{i}": p.nil[i - 1] for i in range(1, 6)}
        for l in range(1, 6):
            if seq[l - 1] != matrix_substitute(star(l), asg, size=2):
                problems.append(f"mod0 l={l}")
        s = GroupParams.random("An-even", 14, rng)
        if not closed_form_agrees(s, 6):
            problems.append("scalar closed form")
        if not closed_form_agrees(GroupParams.random("An2-mod0", 16, rng), 6):
            problems.append("block closed form")
    return Result(9, "star recursion consistency", not problems, f"problems {sorted(set(problems))}")


# ---------------------------------------------------------------- 10
def _random_row(rng: random.Random) -> list[Fraction]:
    row = [Fraction(rng.randint(-4, 4)) for _ in range(6)]
    if not any(row):
        row[rng.randrange(6)] = Fraction(1)
    return row


def random_Y(cls: str, rng: random.Random) -> ExactMatrix:
    """Generic 6x6 Y whose highest-priority nonzero rows are those of ``cls``."""
    from .orbit_explorer import ROWS_16, ROWS_25, ROWS_34

    active = {ROWS_16: (0, 5), ROWS_34: (0, 2, 3, 5), ROWS_25: range(6)}[cls]
    lead = {ROWS_16: (0, 5), ROWS_34: (2, 3), ROWS_25: (1, 4)}[cls]
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    for r in active:
        rows[r] = _random_row(rng)
    for r in lead:
        rows[r] = _random_row(rng)
    return ExactMatrix(rows)


def criterion_10(quick: bool = False) -> Result:
    from .exact_core import inverse
    from .orbit_explorer import (
        BULLET_PREDICTION, ROWS_16, ROWS_25, ROWS_34, orbit_display_e_identity, stabilizer_solA6,
        stabilizer_trivial_solA8sq,
    )

    problems = []
    rng = random.Random(10)
    for cls in (ROWS_16, ROWS_25, ROWS_34):
        for _ in range(5 if quick else 20):
            Y = random_Y(cls, rng)
            rep = stabilizer_solA6(Y)
            ok = rep.classification == cls and rep.spot_check(rng) and rep.nil_dim == BULLET_PREDICTION[cls]
            if cls == ROWS_34:
                ok = ok and all(a == 0 for a, _ in rep.nil_basis)
            if not ok:
                problems.append(f"{cls}: {rep.to_json()['nil_basis']}")
    I6 = stabilizer_solA6(ExactMatrix.identity(6))
    if I6.nil_dim != 0:
        problems.append("identity Y")

    def m2(*v):
        return ExactMatrix([[Fraction(v[0]), Fraction(v[1])], [Fraction(v[2]), Fraction(v[3])]])

    Z = m2(0, 0, 0, 0)
    I2 = m2(1, 0, 0, 1)
    f, g, h = m2(1, 2, 0, 1), m2(0, 1, 1, 0), m2(2, 0, 3, 1)
    i, j, k, l = m2(1, 1, 0, 2), m2(0, 3, 1, 1), m2(1, 0, 0, 0), m2(2, 2, 1, 1)
    X = block_matrix([[Z, Z, Z, Z], [I2, f, g, h], [i, j, k, l], [Z, Z, Z, Z]])
    if not stabilizer_trivial_solA8sq(X).trivial:
        problems.append("e = I2 not certified trivial")
    s, x = m2(2, 1, 1, 1), m2(1, -2, 3, 5)
    disp = orbit_display_e_identity(s, x, f, g, h, i, j, k, l)
    if not (disp["matches"] and disp["alpha_is_member"]):
        problems.append("orbit display")
    detail = (f"problems {problems}; display with x printed untransposed is a member: "
              f"{disp['literal_display_is_member']}")
    return Result(10, "stabilizer examples", not problems, detail)


CRITERIA: dict[int, Callable[[bool], Result]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}
QUICK = [1, 2, 6, 8, 9, 10]


def run(which=None, quick: bool = False) -> dict[int, Result]:
    out = {}
    for k in which or CRITERIA:
        if k not in CRITERIA:
            raise KeyError(f"no criterion {k}")
        try:
            out[k] = CRITERIA[k](quick)
        except CongmonError as exc:
            out[k] = Result(k, "error", False, f"{type(exc).__name__}: {exc}")
    return out
