"""Command-line entry point: JSON on stdout, one-line summaries on stderr."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable

from .errors import ParseError, PreconditionError, VerificationError
from .exact_core import ExactMatrix, field_from_tag, is_solution, loads_matrix, matrix_to_json, solve_tangent

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


@dataclass
class RunConfig:
    subcommand: str
    field: str = "q"
    seed: int = 0
    input: str | None = None
    output: str | None = None
    options: dict[str, Any] = dc_field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 2 like argparse, but via ParseError
        raise ParseError(message)


def _read_matrix(path: str | None) -> ExactMatrix:
    if path is None:
        raise ParseError("--input is required")
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_matrix(text)


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _family(kind: str, n: int) -> str:
    from .lie_structure import FAMILIES, check_family, family_for

    if kind in FAMILIES:
        check_family(kind, n)
        return kind
    return family_for(kind, n)


# ---------------------------------------------------------------- handlers
def cmd_analyze(cfg: RunConfig) -> tuple[dict, str]:
    from .group_criterion import is_group_complex

    A = _read_matrix(cfg.input)
    verdict = is_group_complex(A)
    out = verdict.to_json()
    out["dim"] = solve_tangent(A).dim
    if verdict.witness is not None:
        if not is_solution(verdict.witness, _as(A, verdict.witness)):
            raise VerificationError("witness does not solve X^t A X = A")
        out["verified"] = True
    return out, f"is_group={verdict.is_group} dim={out['dim']}"


def _as(A: ExactMatrix, W: ExactMatrix) -> ExactMatrix:
    return A if A.field == W.field else A.change_field(W.field)


def cmd_canonical(cfg: RunConfig) -> tuple[dict, str]:
    from .canonical_forms import CanonicalBlock, make_block

    F = field_from_tag(cfg.field)
    c = cfg.options.get("c")
    block = CanonicalBlock(cfg.options["type"], cfg.options["size"], F.parse(c) if c is not None else None)
    M = make_block(block, F)
    return {"block": block.kind, "size": block.size, "matrix": matrix_to_json(M)}, f"{block.kind} size {block.size}"


def cmd_an(cfg: RunConfig) -> tuple[dict, str]:
    from .canonical_forms import make_An_power

    n, k = cfg.options["n"], cfg.options["power"]
    M = make_An_power(n, k, field_from_tag(cfg.field))
    return {"n": n, "power": k, "matrix": matrix_to_json(M)}, f"A_{n}^{k}"


def cmd_sigma(cfg: RunConfig) -> tuple[dict, str]:
    from .canonical_forms import make_An, make_sigma, sigma_target

    F = field_from_tag(cfg.field)
    n = cfg.options["n"]
    S = make_sigma(n, F)
    ok = S.T @ make_An(n, F) @ S == sigma_target(n, F)
    if not ok:
        raise VerificationError("sigma^t A_n sigma differs from the target")
    return {"n": n, "sigma": matrix_to_json(S), "target": matrix_to_json(sigma_target(n, F)), "verified": True}, f"sigma_{n} verified"


def cmd_tangent(cfg: RunConfig) -> tuple[dict, str]:
    from .exact_core import span_equal
    from .lie_structure import An, An2, basis_solAn, basis_solAn2

    F = field_from_tag(cfg.field)
    kind, n = cfg.options["family"], cfg.options["n"]
    A = An(n, F) if kind == "an" else An2(n, F)
    if cfg.options.get("generic"):
        B = solve_tangent(A)
        method = "generic"
    else:
        B = basis_solAn(n, F) if kind == "an" else basis_solAn2(n, F)
        method = "closed-form"
    if not B.verify(A):
        raise VerificationError("tangent basis failed X^t A + A X = 0")
    out = {
        "family": _family(kind, n),
        "n": n,
        "method": method,
        "dim": B.dim,
        "labels": list(B.labels),
        "basis": [matrix_to_json(M) for M in B.basis],
        "verified": True,
    }
    if not cfg.options.get("generic"):
        out["matches_generic"] = span_equal(list(B.basis), list(solve_tangent(A).basis))
    return out, f"{method} dim {B.dim}"


def cmd_brackets(cfg: RunConfig) -> tuple[dict, str]:
    from .lie_structure import bracket_table, generators

    kind, n = cfg.options["family"], cfg.options["n"]
    G = generators(kind, n, field_from_tag(cfg.field))
    T = bracket_table(G)
    if not T.rematerializes(G):
        raise VerificationError("bracket table does not match matrix commutators")
    out = T.to_json()
    out.update({"family": G.family, "n": n, "verified": True})
    return out, f"{len(T.labels)} generators"


def _group_params(cfg: RunConfig):
    from .group_builders import GroupParams

    if cfg.options.get("params"):
        return GroupParams.from_json(_read_json(cfg.options["params"]))
    kind, n = cfg.options["family"], cfg.options["n"]
    fam = _family(kind, n)
    lam = cfg.options.get("lam")
    F = field_from_tag(cfg.field)
    return GroupParams.random(fam, n, random.Random(cfg.seed), F, lam=F.parse(lam) if lam is not None else None)


def cmd_group_sample(cfg: RunConfig) -> tuple[dict, str]:
    from .group_builders import build
    from .exact_core import determinant
    from .lie_structure import family_matrix

    p = _group_params(cfg)
    X = build(p)
    if not is_solution(X, family_matrix(p.family, p.n, p.field)):
        raise VerificationError("built element fails X^t A X = A")
    d = determinant(X)
    return {"matrix": matrix_to_json(X), "params": p.to_json(), "verified": True, "det": p.field.format(d)}, f"{p.family} n={p.n} det={p.field.format(d)}"


def cmd_factor(cfg: RunConfig) -> tuple[dict, str]:
    from .group_builders import build, merge, semidirect_factor

    X = _read_matrix(cfg.input)
    fam = _family(cfg.options["family"], X.nrows)
    d, nPart = semidirect_factor(X, fam, X.nrows)
    if build(merge(d, nPart)) != X:
        raise VerificationError("factorization does not rebuild the input")
    return {"diag": d.to_json(), "nil": nPart.to_json(), "verified": True}, f"{fam} factored"


def cmd_star(cfg: RunConfig) -> tuple[dict, str]:
    from .star_algebra import BODY, star_one_matrix_check, verify_star_one

    rep = verify_star_one(cfg.options["degree"], cfg.options.get("convention") or BODY)
    out = rep.to_json()
    trials = cfg.options.get("matrix_trials") or 0
    if trials:
        out["matrix_trials"] = trials
        out["matrix_equal"] = star_one_matrix_check(rep.n, trials, random.Random(cfg.seed), rep.convention)
    return out, f"star_one degree {rep.n} {rep.convention}: {rep.equal}"


def cmd_stabilizer(cfg: RunConfig) -> tuple[dict, str]:
    from .orbit_explorer import stabilizer_solA6, stabilizer_trivial_solA8sq

    Y = _read_matrix(cfg.input)
    if cfg.options["family"] == "a6":
        rep = stabilizer_solA6(Y)
        if not rep.spot_check(random.Random(cfg.seed)):
            raise VerificationError("sampled stabilizer element moved Y")
        out = rep.to_json()
        out["verified"] = True
        return out, f"{rep.classification}: x0 {rep.x0_constraint}, nil dim {rep.nil_dim}"
    rep8 = stabilizer_trivial_solA8sq(Y)
    return rep8.to_json(), f"trivial={rep8.trivial}"


def cmd_orbit(cfg: RunConfig) -> tuple[dict, str]:
    from .orbit_explorer import orbit_sample

    Y = _read_matrix(cfg.input)
    n = Y.nrows
    fam = _family(cfg.options["family"], n)
    W = orbit_sample(fam, n, Y, cfg.seed, cfg.options["count"], field=Y.field)
    return {"family": fam, "n": n, "orbit": [matrix_to_json(M) for M in W], "verified": True}, f"{len(W)} orbit points"


def cmd_selftest(cfg: RunConfig) -> tuple[dict, str]:
    from . import acceptance

    which = cfg.options.get("criteria") or acceptance.QUICK
    results = acceptance.run(which, quick=not cfg.options.get("full"))
    out = {str(k): {"passed": r.passed, "detail": r.detail} for k, r in results.items()}
    for k, r in results.items():
        print(r.line(), file=sys.stderr)
    return out, f"{sum(r.passed for r in results.values())}/{len(results)} criteria passed"


HANDLERS: dict[str, Callable[[RunConfig], tuple[dict, str]]] = {
    "analyze": cmd_analyze,
    "canonical": cmd_canonical,
    "an": cmd_an,
    "sigma": cmd_sigma,
    "tangent": cmd_tangent,
    "brackets": cmd_brackets,
    "group-sample": cmd_group_sample,
    "factor": cmd_factor,
    "star": cmd_star,
    "stabilizer": cmd_stabilizer,
    "orbit": cmd_orbit,
    "selftest": cmd_selftest,
}


# ---------------------------------------------------------------- parsing
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="congmon", description="Exact computations with congruence monoids.")
    p.add_argument("--field", default="q", help="q, qi or fp:P (e.g. fp:5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write JSON here instead of stdout")
    # the global flags are also accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name: str, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    s = sub.add_parser("analyze", help="decide whether Sol_A is a group")
    s.add_argument("--input", required=True)

    s = sub.add_parser("canonical", help="canonical congruence block")
    s.add_argument("--type", required=True, choices=list("abcdef"))
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--c")

    s = sub.add_parser("an", help="power of the nilpotent Jordan block")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--power", type=int, default=1)

    s = sub.add_parser("sigma", help="relabeling congruence of A_n")
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("tangent", help="Lie algebra basis")
    s.add_argument("--family", required=True, choices=["an", "an2"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--generic", action="store_true")

    s = sub.add_parser("brackets", help="bracket table of the generators")
    s.add_argument("--family", required=True, choices=["an", "an2"])
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("group-sample", help="random verified group element")
    s.add_argument("--family", default="an")
    s.add_argument("--n", type=int)
    s.add_argument("--lam")
    s.add_argument("--params")

    s = sub.add_parser("factor", help="split a group element into D and N parts")
    s.add_argument("--family", required=True)
    s.add_argument("--input", required=True)

    s = sub.add_parser("star", help="check the product identity in the free algebra")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--convention", choices=["appendix", "body"])
    s.add_argument("--matrix-trials", type=int, default=0)

    s = sub.add_parser("stabilizer", help="stabilizer of Y under Sol_A left action")
    s.add_argument("--family", required=True, choices=["a6", "a8sq"])
    s.add_argument("--input", required=True)

    s = sub.add_parser("orbit", help="orbit sample of Y")
    s.add_argument("--family", required=True)
    s.add_argument("--input", required=True)
    s.add_argument("--count", type=int, default=10)

    s = sub.add_parser("selftest", help="run acceptance criteria")
    s.add_argument("--criteria", type=lambda t: [int(x) for x in t.split(",")])
    s.add_argument("--full", action="store_true")
    return p


def parse_config(argv: list[str] | None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    cfg = RunConfig(
        subcommand=ns.pop("subcommand"),
        field=ns.pop("field"),
        seed=ns.pop("seed"),
        input=ns.pop("input", None),
        output=ns.pop("output"),
    )
    env = os.environ.get("CONGMON_SEED")
    if env is not None:
        try:
            cfg.seed = int(env)
        except ValueError as exc:
            raise ParseError(f"CONGMON_SEED must be an integer, got {env!r}") from exc
    cfg.options = ns
    if cfg.subcommand == "group-sample" and not ns.get("params") and ns.get("n") is None:
        raise ParseError("group-sample needs --n or --params")
    return cfg


def run(cfg: RunConfig) -> tuple[int, dict]:
    out, summary = HANDLERS[cfg.subcommand](cfg)
    code = EXIT_OK
    if cfg.subcommand == "selftest" and not all(v["passed"] for v in out.values()):
        code = EXIT_VERIFY
    text = json.dumps(out, sort_keys=True)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)
    return code, out


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        code, _ = run(cfg)
        return code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
