"""Command line front end: ``flagqh <subcommand> [options]``.

Words are 1-based simple-root indices, comma separated (``1,2,1``); a word of
single digits may also be written without commas (``121``).  q-exponents and
coroots are comma-separated integers in simple-coroot order.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import qh, verify
from .errors import ConfigurationError, FlagQHError, UsageError
from .grading import grade_table, grader
from .parabolic import CASE_TAGS, ParabolicSetup, make_setup, preset
from .rootsys import build_root_system
from .weyl import from_word, parabolic_decompose


@dataclass
class RunConfig:
    """Validated options shared by all subcommands."""

    command: str
    dynkin_type: str | None = None
    rank: int | None = None
    parabolic: tuple[int, ...] | None = None
    case: str | None = None
    r: int | None = None
    u: tuple[int, ...] = ()
    v: tuple[int, ...] = ()
    lam: tuple[int, ...] | None = None
    suite: str = "all"
    which: tuple[int, ...] = (2, 3, 4, 5, 6, 7)
    cap_group: int = qh.DEFAULT_ENGINE_GROUP_CAP
    cap_degree: int = qh.DEFAULT_DEGREE_CAP
    box: int | None = None
    seed: int = verify.DEFAULT_SEED
    fmt: str = "text"
    out: str | None = None


def parse_word(text: str | None) -> tuple[int, ...]:
    if text is None:
        return ()
    text = text.strip()
    if not text or text in ("id", "e"):
        return ()
    parts = text.split(",") if "," in text else list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot read word {text!r}") from None
    if any(i < 1 for i in word):
        raise UsageError("word entries are 1-based simple-root indices")
    return word


def parse_ints(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"cannot read integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="dynkin_type", help="Dynkin type letter A-G")
    common.add_argument("--rank", type=int, help="rank (ambient rank for --case)")
    common.add_argument("--parabolic", help="ordered 1-based indices of Delta_P, e.g. 1,2")
    common.add_argument("--case", choices=CASE_TAGS, help="preset diagram case")
    common.add_argument("--r", type=int, help="size of Delta_P for --case")
    common.add_argument("--u", help="word of u")
    common.add_argument("--v", help="word of v")
    common.add_argument("--lambda", dest="lam", help="coroot coordinates")
    common.add_argument("--cap-group", type=int, default=qh.DEFAULT_ENGINE_GROUP_CAP, help="largest Weyl group")
    common.add_argument("--cap-degree", type=int, default=qh.DEFAULT_DEGREE_CAP, help="largest product degree")
    common.add_argument("--box", type=int, help="coset box radius for psi checks")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file")

    parser = argparse.ArgumentParser(prog="flagqh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="positive roots and Cartan matrix")
    sub.add_parser("weyl", parents=[common], help="length, reduced word, inversions and coset data of --u")
    sub.add_parser("qmul", parents=[common], help="quantum product sigma^u * sigma^v in QH*(G/B)")
    sub.add_parser("qpmul", parents=[common], help="quantum product in QH*(G/P) for u, v in W^P")
    sub.add_parser("pwlift", parents=[common], help="Peterson-Woodward lift of --lambda and its psi image")
    sub.add_parser("grade", parents=[common], help="grading of q_lambda sigma^u, or the simple-coroot table")
    p_tables = sub.add_parser("tables", parents=[common], help="reproduce reference tables")
    p_tables.add_argument("--which", default="2,3,4,5,6,7", help="table numbers 2-7")
    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("--suite", default="all", help=", ".join(verify.SUITES))
    p_verify.add_argument("--which", default=None, help="table numbers for --suite tables")
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        dynkin_type=args.dynkin_type.upper() if args.dynkin_type else None,
        rank=args.rank,
        parabolic=parse_ints(args.parabolic),
        case=args.case,
        r=args.r,
        u=parse_word(args.u),
        v=parse_word(args.v),
        lam=parse_ints(args.lam),
        cap_group=args.cap_group,
        cap_degree=args.cap_degree,
        box=args.box,
        seed=args.seed,
        fmt=args.fmt,
        out=args.out,
    )
    if hasattr(args, "suite"):
        cfg.suite = args.suite
    which = getattr(args, "which", None)
    if which:
        cfg.which = parse_ints(which)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig):
    """Reject inconsistent options before any computation."""
    if cfg.cap_group < 1 or cfg.cap_degree < 0:
        raise ConfigurationError("caps must be positive")
    if cfg.box is not None and cfg.box < 0:
        raise ConfigurationError("--box must be nonnegative")
    if cfg.case and (cfg.dynkin_type or cfg.parabolic):
        raise ConfigurationError("give either --case/--r or --type/--rank/--parabolic")
    if cfg.case and cfg.r is None:
        raise ConfigurationError("--case needs --r")
    needs_system = cfg.command in ("roots", "weyl", "qmul", "qpmul", "pwlift", "grade")
    if needs_system and not cfg.case and (cfg.dynkin_type is None or cfg.rank is None):
        raise ConfigurationError(f"{cfg.command} needs --type and --rank (or --case and --r)")
    if cfg.command in ("qpmul", "pwlift", "grade") and not cfg.case and cfg.parabolic is None:
        raise ConfigurationError(f"{cfg.command} needs --parabolic (or --case and --r)")
    if cfg.command == "pwlift" and cfg.lam is None:
        raise ConfigurationError("pwlift needs --lambda")
    for name, word in (("--u", cfg.u), ("--v", cfg.v)):
        if len(word) > cfg.cap_degree:
            raise UsageError(f"{name} has length {len(word)} above the degree cap {cfg.cap_degree}")
    if any(t not in range(2, 8) for t in cfg.which):
        raise UsageError("--which takes table numbers 2-7")


def _setup(cfg: RunConfig) -> ParabolicSetup:
    if cfg.case:
        return preset(cfg.case, cfg.r, cfg.rank)
    return make_setup(cfg.dynkin_type, cfg.rank, list(cfg.parabolic))


def _system(cfg: RunConfig):
    if cfg.case or cfg.parabolic is not None:
        return _setup(cfg).rs
    return build_root_system(cfg.dynkin_type, cfg.rank)


def _element(rs, word):
    return from_word(rs, [i - 1 for i in word])


def _coroot(rs, lam):
    if lam is None:
        return (0,) * rs.rank
    if len(lam) != rs.rank:
        raise UsageError(f"--lambda needs {rs.rank} coordinates")
    return tuple(lam)


def _word_json(w) -> list[int]:
    return [i + 1 for i in w.reduced_word()]


def _grade_fn(setup):
    if setup is None:
        return None
    g = grader(setup)
    return lambda w, lam: list(g(w, lam))


# -- subcommands --------------------------------------------------------------


def cmd_roots(cfg: RunConfig) -> tuple[dict, str, int]:
    rs = _system(cfg)
    data = rs.describe()
    text = f"{rs.name}: {len(rs.positive_roots)} positive roots\n" + "\n".join(
        " ".join(str(c) for c in beta) for beta in rs.positive_roots)
    return data, text, 0


def cmd_weyl(cfg: RunConfig) -> tuple[dict, str, int]:
    rs = _system(cfg)
    w = _element(rs, cfg.u)
    data = {
        "word": list(cfg.u),
        "reduced_word": _word_json(w),
        "length": w.length(),
        "right_descents": [i + 1 for i in w.right_descents()],
        "inversions": sorted(list(b) for b in w.inversion_set()),
    }
    if cfg.case or cfg.parabolic is not None:
        setup = _setup(cfg)
        chain = [set(setup.dp[:j]) for j in range(setup.r + 1)] + [set(range(rs.rank))]
        factors = parabolic_decompose(w, chain)
        data["coset_rep"] = _word_json(setup.coset_rep(w))
        data["in_quotient"] = setup.is_in_wp_quotient(w)
        data["chain_factors"] = [_word_json(f) for f in factors]
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return data, text, 0


def cmd_qmul(cfg: RunConfig) -> tuple[dict, str, int]:
    setup = _setup(cfg) if (cfg.case or cfg.parabolic is not None) else None
    rs = setup.rs if setup else _system(cfg)
    u, v = _element(rs, cfg.u), _element(rs, cfg.v)
    prod = qh.engine_for(rs).schubert_product(u, v)
    lam = _coroot(rs, cfg.lam)
    if any(lam):
        prod = prod.shift(lam)
    return prod.to_json(grade=_grade_fn(setup)), prod.to_text(), 0


def cmd_qpmul(cfg: RunConfig) -> tuple[dict, str, int]:
    setup = _setup(cfg)
    rs = setup.rs
    prod = qh.qhp_mul(setup, _element(rs, cfg.u), _element(rs, cfg.v))
    data = prod.to_json()
    for term in data["terms"]:
        term["q_class"] = list(setup.coset_key(tuple(term["q"])))
    return data, prod.to_text(), 0


def cmd_pwlift(cfg: RunConfig) -> tuple[dict, str, int]:
    setup = _setup(cfg)
    rs = setup.rs
    lam = _coroot(rs, cfg.lam)
    lam_b, p_prime = setup.pw_lift(lam)
    w = _element(rs, cfg.u)
    x, lam_psi = setup.psi(lam, w)
    g = grader(setup)
    data = {
        "lambda": list(lam),
        "lambda_B": list(lam_b),
        "P_prime": sorted(i + 1 for i in p_prime),
        "w": _word_json(w),
        "psi": {"word": _word_json(x), "q": list(lam_psi), "grade": list(g(x, lam_psi))},
        "virtual_null": setup.is_virtual_null(lam),
    }
    text = (f"lambda_B = {list(lam_b)}, Delta_P' = {data['P_prime']}\n"
            f"psi(q_lambda sigma^w) = q{list(lam_psi)} s{data['psi']['word']}  grade {data['psi']['grade']}")
    return data, text, 0


def cmd_grade(cfg: RunConfig) -> tuple[dict, str, int]:
    setup = _setup(cfg)
    rs = setup.rs
    if not cfg.u and cfg.lam is None:
        table = grade_table(setup)
        data = {"setup": setup.name, "simple_coroot_grades": {str(i + 1): list(g) for i, g in table.items()}}
        text = "\n".join(f"gr(alpha_{i + 1}^vee) = {list(g)}" for i, g in table.items())
        return data, text, 0
    w, lam = _element(rs, cfg.u), _coroot(rs, cfg.lam)
    g = list(grader(setup)(w, lam))
    data = {"setup": setup.name, "word": _word_json(w), "q": list(lam), "grade": g}
    return data, f"gr = {g}", 0


def _reports_output(reports) -> tuple[dict, str, int]:
    passed = all(r.passed for r in reports)
    data = {"passed": passed, "reports": [r.to_json() for r in reports]}
    text = "\n".join(r.to_text() for r in reports)
    if passed:
        text += f"\nALL PASS: {len(reports)}/{len(reports)} checks"
    else:
        text += f"\nFAILED: {sum(not r.passed for r in reports)} of {len(reports)} checks"
    return data, text, 0 if passed else 1


def cmd_tables(cfg: RunConfig) -> tuple[dict, str, int]:
    return _reports_output([verify.reproduce_tables(cfg.which)])


def cmd_verify(cfg: RunConfig) -> tuple[dict, str, int]:
    setup = _setup(cfg) if (cfg.case or cfg.dynkin_type) else None
    reports = verify.run_suite(cfg.suite, seed=cfg.seed, which=cfg.which, setup=setup, box=cfg.box)
    return _reports_output(reports)


COMMANDS = {
    "roots": cmd_roots, "weyl": cmd_weyl, "qmul": cmd_qmul, "qpmul": cmd_qpmul, "pwlift": cmd_pwlift,
    "grade": cmd_grade, "tables": cmd_tables, "verify": cmd_verify,
}


def run(cfg: RunConfig) -> tuple[str, int]:
    qh.configure(group_cap=cfg.cap_group, degree_cap=cfg.cap_degree)
    data, text, code = COMMANDS[cfg.command](cfg)
    if cfg.fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2, default=str) + "\n", code
    return text + "\n", code


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        output, code = run(cfg)
    except FlagQHError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except SystemExit as exc:  # argparse
        return 2 if exc.code else 0
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
