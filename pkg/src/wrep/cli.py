"""Command-line entry point ``wrep``.

Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import longmoody as lm
from .io import FixtureError, emit, load_fixture, load_rep_bundle
from .report import RepReport
from .reps import (
    CATALOG_NAMES,
    DUAL_VARIANTS,
    ClosureFailure,
    MatrixRep,
    burau_extension_report,
    dual_rep,
    make_catalog_rep,
    rep_certificates,
    twist,
    verify_rep,
)
from .ring import LaurentPoly
from .welded import (
    ActionSpec,
    WeldedWord,
    XiSpec,
    check_cond1,
    defining_relations,
    wada_extends,
    words_equal,
)

THEOREMS = ("recbur", "iteration", "dual-input", "input-split", "cond1", "survey",
            "wada-table", "relations", "certificates", "extension")


class UsageError(ValueError):
    pass


def _vars(text: str | None, default: Sequence[str]) -> tuple[str, ...]:
    if not text:
        return tuple(default)
    out = tuple(v.strip() for v in text.split(",") if v.strip())
    if not out or len(set(out)) != len(out) or not all(v.isidentifier() for v in out):
        raise UsageError(f"bad variable list {text!r}")
    return out


def _catalog(args) -> MatrixRep:
    vars = _vars(args.vars, (args.var,))
    if args.var not in vars:
        raise UsageError(f"variable {args.var!r} is not in the context {vars}")
    r = LaurentPoly.parse(args.scalar, vars) if args.scalar else None
    if args.rep == "onedim" and r is None:
        raise UsageError("onedim needs --scalar")
    rho = make_catalog_rep(args.rep, args.n, var=args.var, vars=vars, r=r)
    if args.dual:
        rho = dual_rep(rho, args.dual)
    return rho


def _action(args) -> ActionSpec:
    return ActionSpec(args.alpha, args.h)


# -- subcommands --------------------------------------------------------------

def cmd_catalog(args, out) -> int:
    if args.fixture:
        out.write(emit(load_fixture(args.fixture), args.format))
        return 0
    if args.rep is None or args.n is None:
        raise UsageError("catalog needs --rep and --n (or --fixture)")
    out.write(emit(_catalog(args), args.format))
    return 0


def cmd_verify(args, out) -> int:
    if args.bundle:
        rho = load_rep_bundle(args.bundle)
    elif args.rep is not None and args.n is not None:
        rho = _catalog(args)
    else:
        raise UsageError("verify needs --rep and --n, or --bundle")
    bad = verify_rep(rho)
    report = RepReport(check=f"verify[{rho.name}]")
    report.details["relations_checked"] = len(defining_relations(rho.n))
    for r in bad:
        report.fail(f"family {r.family}: {r.lhs} = {r.rhs}")
    out.write(emit(report, args.format))
    return 0 if report.ok else 1


def cmd_word_eq(args, out) -> int:
    lhs, rhs = WeldedWord.parse(args.lhs, args.n), WeldedWord.parse(args.rhs, args.n)
    equal = words_equal(lhs, rhs)
    report = RepReport(check=f"word_eq[n={args.n}]", verdicts={"equal": equal},
                       details={"lhs": str(lhs), "rhs": str(rhs)})
    if not equal:
        report.fail()
    out.write(emit(report, args.format))
    return 0 if equal else 1


def cmd_wada(args, out) -> int:
    ok, bad = wada_extends(args.type, args.h, args.n)
    report = RepReport(check=f"wada_extends[type={args.type}, h={args.h}, n={args.n}]",
                       verdicts={"extends": ok})
    for r in bad:
        report.fail(f"family {r.family}: {r.lhs} = {r.rhs}")
    out.write(emit(report, args.format))
    return 0 if ok else 1


def cmd_cond1(args, out) -> int:
    report = check_cond1(_action(args), XiSpec(args.xi, args.n), args.n)
    out.write(emit(report, args.format))
    return 0 if report.ok else 1


def cmd_lm(args, out) -> int:
    if args.bundle:
        rho = load_rep_bundle(args.bundle)
        if rho.n != args.n + 1:
            raise UsageError(f"bundle lives on wB_{rho.n}, expected wB_{args.n + 1}")
    elif args.rep is not None:
        args.n, n = args.n + 1, args.n
        try:
            rho = _catalog(args)
        finally:
            args.n = n
    else:
        raise UsageError("lm needs --rep or --bundle")
    if args.prescale:
        rho = twist(LaurentPoly.parse(args.prescale, rho.vars), rho)
    cfg = lm.LMConfig(_action(args), XiSpec(args.xi, args.n), args.n, unsafe=args.unsafe)
    result = lm.lm_apply(cfg, rho)
    if args.postscale:
        result = twist(LaurentPoly.parse(args.postscale, result.vars), result)
    if args.check:
        bad = verify_rep(result)
        if bad:
            sys.stderr.write(f"output violates {len(bad)} relations\n")
            out.write(emit(result, args.format))
            return 1
    out.write(emit(result, args.format))
    return 0


def _theorem_report(theorem: str, n: int, args) -> RepReport:
    if theorem == "recbur":
        return lm.lm_reproduce_burau(n, args.xi)
    if theorem == "iteration":
        return lm.lm_iteration_report(n)
    if theorem == "dual-input":
        return lm.lm_dual_input_report(n)
    if theorem == "input-split":
        return lm.lm_input_split_report(n)
    if theorem == "cond1":
        return check_cond1(_action(args), XiSpec(args.xi, n), n)
    if theorem == "survey":
        return lm.lm_one_dim_survey(n)
    if theorem == "extension":
        report = RepReport(check=f"extension[n={n}]")
        for dual in (False, True):
            sub = burau_extension_report(n, dual)
            report.verdicts[sub.check] = sub.verdicts
            report.certificates[sub.check] = sub.certificates
            if not sub.ok:
                report.fail(f"{sub.check} failed")
        return report
    if theorem == "certificates":
        report = RepReport(check=f"certificates[n={n}]")
        for a, b in (("burau", "tym"), ("tym", "dual_tym")):
            c = rep_certificates(make_catalog_rep(a, n), make_catalog_rep(b, n))
            report.certificates[f"{a} vs {b}"] = {**c.verdicts, "invariants": c.certificates}
            if c.verdicts.get("equivalent") is not False:
                report.fail(f"no certificate separating {a} and {b}")
        return report
    if theorem == "wada-table":
        expected = {1: False, 2: True, 3: True, 4: True, 5: True, 6: False, 7: False}
        report = RepReport(check=f"wada_table[n={n}]")
        for k, want in expected.items():
            hs = (1, 2, 3) if k == 4 else (1,)
            for h in hs:
                got = wada_extends(k, h, n)[0]
                label = f"type{k}" + (f"(h={h})" if k == 4 else "")
                report.verdicts[label] = got
                if got != want:
                    report.fail(f"{label}: expected {want}, got {got}")
        return report
    if theorem == "relations":
        report = RepReport(check=f"catalog_relations[n={n}]")
        reps = [make_catalog_rep(c, n) for c in CATALOG_NAMES
                if c != "onedim" and (n >= 3 or "reduced" not in c)]
        reps.append(dual_rep(make_catalog_rep("burau", n), "transpose_inverse"))
        for rho in reps:
            bad = verify_rep(rho)
            report.verdicts[rho.name] = not bad
            for r in bad:
                report.fail(f"{rho.name}: {r.lhs} = {r.rhs}")
        return report
    raise UsageError(f"unknown theorem {theorem!r}")


def cmd_reproduce(args, out) -> int:
    n = args.n if args.n is not None else 3
    minimum = 3 if args.theorem in ("iteration", "dual-input", "extension") else 2
    if n < minimum:
        raise UsageError(f"--theorem {args.theorem} needs n >= {minimum}")
    report = _theorem_report(args.theorem, n, args)
    out.write(emit(report, args.format))
    return 0 if report.status == "pass" else 1


# -- parser -------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wrep", description="Welded braid group representations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="json"):
        sp.add_argument("--format", choices=("json", "latex", "text"), default=fmt)

    def rep_opts(sp, n_required=False):
        sp.add_argument("--rep", choices=CATALOG_NAMES)
        sp.add_argument("--n", type=_positive, required=n_required)
        sp.add_argument("--var", default="t")
        sp.add_argument("--vars", help="comma separated variable context, e.g. t,q")
        sp.add_argument("--scalar", help="scalar for onedim, e.g. t or -1")
        sp.add_argument("--dual", choices=DUAL_VARIANTS, help="apply a dual convention")

    def action_opts(sp):
        sp.add_argument("--alpha", default="artin",
                        choices=("artin", *(f"wada{k}" for k in range(1, 8))))
        sp.add_argument("--h", type=int, default=1, help="parameter of the type-4 action")
        sp.add_argument("--xi", default="xi1", choices=("xi1", "trivial"))

    sp = sub.add_parser("catalog", help="print a named representation or a fixture")
    rep_opts(sp)
    sp.add_argument("--fixture", help="print the matrices stored in a fixture file")
    common(sp)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="check the defining relations")
    rep_opts(sp)
    sp.add_argument("--bundle", help="JSON representation bundle")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("word-eq", help="decide equality of two welded words")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    common(sp)
    sp.set_defaults(func=cmd_word_eq)

    sp = sub.add_parser("wada", help="does a Wada action extend to wB_n")
    sp.add_argument("--type", type=int, choices=range(1, 8), required=True)
    sp.add_argument("--h", type=int, default=1)
    sp.add_argument("--n", type=_positive, default=3)
    common(sp)
    sp.set_defaults(func=cmd_wada)

    sp = sub.add_parser("cond1", help="compatibility of an action with xi")
    action_opts(sp)
    sp.add_argument("--n", type=_positive, default=3)
    common(sp)
    sp.set_defaults(func=cmd_cond1)

    sp = sub.add_parser("lm", help="apply the Long-Moody construction (input on wB_{n+1})")
    rep_opts(sp, n_required=True)
    action_opts(sp)
    sp.add_argument("--bundle", help="JSON representation bundle for the input")
    sp.add_argument("--prescale", help="twist the input by this unit first")
    sp.add_argument("--postscale", help="twist the output by this unit")
    sp.add_argument("--unsafe", action="store_true", help="skip the compatibility gate")
    sp.add_argument("--check", action="store_true", help="verify the output relations")
    common(sp)
    sp.set_defaults(func=cmd_lm)

    sp = sub.add_parser("reproduce", help="run a reproduction suite")
    sp.add_argument("--theorem", choices=THEOREMS, required=True)
    sp.add_argument("--n", type=_positive)
    action_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_reproduce)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (lm.Cond1Violation, ClosureFailure) as exc:
        sys.stderr.write(f"wrep: {exc}\n")
        return 1
    except (UsageError, FixtureError) as exc:
        sys.stderr.write(f"wrep: error: {exc}\n")
        return 2
    except (ValueError, ArithmeticError, json.JSONDecodeError) as exc:
        # malformed words, unknown names, non-unit scalars, ...
        sys.stderr.write(f"wrep: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
