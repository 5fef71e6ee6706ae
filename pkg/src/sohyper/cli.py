"""Command-line front end.

Exit codes: 0 satisfied, 1 violated, 2 unknown, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import CheckConfig, Method, Outcome, verify
from .formula import FormulaError, parse_formula
from .guards import AlphabetError
from .system import SystemParseError, parse_system

EXIT = {Outcome.SAT: 0, Outcome.UNSAT: 1, Outcome.UNKNOWN: 2}
USAGE_ERROR = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sohyper", description="Model checking hyperproperties with least-fixpoint set quantifiers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check a formula against a system")
    c.add_argument("--system", required=True, type=Path)
    c.add_argument("--formula", required=True, type=Path)
    c.add_argument("--method", choices=[m.value for m in Method], default="iter")
    c.add_argument("--max-precision", type=_nonneg, default=50)
    c.add_argument("--state-budget", type=_nonneg, default=1_000_000)
    c.add_argument("--witness", action="store_true", help="print the witness or counterexample traces")

    g = sub.add_parser("gen", help="write benchmark instances")
    fam = g.add_subparsers(dest="family", required=True, parser_class=_Parser)
    ck = fam.add_parser("ck", help="common knowledge on the four-state system")
    ck.add_argument("n", type=int)
    mc = fam.add_parser("muddy", help="muddy children")
    mc.add_argument("n", type=int)
    mc.add_argument("m", type=int)
    od = fam.add_parser("async-od", help="observational determinism, synchronous and asynchronous")
    od.add_argument("program", choices=["TSyn", "TAsyn", "Q1"])
    mz = fam.add_parser("mazurkiewicz", help="swap closure of {a}{}^w")
    mz.add_argument("variant", help="SwapA, SwapATwice, SwapA_<n> or SwapAViolation_<n>")
    rm = fam.add_parser("regular-mc", help="omega-regular model checking over all traces")
    rm.add_argument("--aps", required=True, help="space separated propositions")
    rm.add_argument("--init", required=True, help="LTL over q")
    rm.add_argument("--step", required=True, help="LTL over q and q2")
    rm.add_argument("--bad", required=True, help="LTL over q")
    rm.add_argument("--name", default="regular_mc")
    for sp in (ck, mc, od, mz, rm):
        sp.add_argument("--out", required=True, type=Path)

    s = sub.add_parser("selftest", help="run the randomized property suites")
    s.add_argument("--scale", type=float, default=1.0, help="multiply the number of probes")
    return p


def _check(args) -> int:
    try:
        ts = parse_system(args.system.read_text())
        ast = parse_formula(args.formula.read_text(), ts.aps)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SystemParseError as exc:
        print(f"{args.system}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (FormulaError, AlphabetError) as exc:
        print(f"{args.formula}:{exc}" if str(exc)[:1].isdigit() else f"{args.formula}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    cfg = CheckConfig(max_precision=args.max_precision, method=Method(args.method),
                      state_budget=args.state_budget)
    v = verify(ts, ast, cfg)
    print(v.line())
    if v.diagnostic:
        print(f"note: {v.diagnostic}", file=sys.stderr)
    if args.witness and v.witness is not None:
        for i, name in enumerate(v.witness_vars):
            print(f"  {name} = {v.witness.track(i).show()}")
    return EXIT[v.outcome]


def _gen(args) -> int:
    from . import encodings as enc

    try:
        match args.family:
            case "ck":
                instances = enc.ck_instances(args.n)
            case "muddy":
                instances = [enc.muddy_instance(args.n, args.m)]
            case "async-od":
                instances = enc.async_od_instances(args.program)
            case "mazurkiewicz":
                instances = [enc.mazurkiewicz_instance(args.variant)]
            case "regular-mc":
                instances = [enc.regular_mc_instance(tuple(args.aps.split()), args.init, args.step,
                                                     args.bad, args.name)]
    except (ValueError, FormulaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for inst in instances:
        for path in inst.write(args.out):
            print(path)
    return 0


def _selftest(args) -> int:
    from .selftest import run_all

    results = run_all(args.scale)
    for r in results:
        print(r.line())
    return 0 if all(r.ok for r in results) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    match args.command:
        case "check":
            return _check(args)
        case "gen":
            return _gen(args)
        case "selftest":
            return _selftest(args)
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
