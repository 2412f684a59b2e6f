"""Command-line interface: ``goodstein trace | verify | bound | eval``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from contextlib import contextmanager
from typing import List, Optional

from goodstein import suites, tracefile
from goodstein.grammar import NonCanonicalError, ParseError, parse, render, render_shape
from goodstein.hereditary import (DEFAULT_DIGIT_CAP, TooLarge, estimate_digits, evaluate,
                                  from_natural, try_evaluate)
from goodstein.lemmas import tower_bound, tower_form
from goodstein.sequence import (CLASSIC, OrdinalCheckFailed, decimal_string,
                                parse_schedule, trace)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flat term lists are printed only for values of modest size
FLAT_TERMS_MAX_DIGITS = 2000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _tower(text: str):
    try:
        a, k = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,k but got {text!r}") from None
    return a, k


def _schedule(text: str):
    try:
        return parse_schedule(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="goodstein", description="Goodstein sequences over hereditary base-n forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("trace", help="run a sequence and write its trace")
    start = t.add_mutually_exclusive_group(required=True)
    start.add_argument("--m", type=_natural, help="starting value")
    start.add_argument("--tower", type=_tower, metavar="A,K", help="start at the tower a^^k")
    t.add_argument("--base0", type=int, default=2)
    t.add_argument("--schedule", type=_schedule, default=CLASSIC,
                   help="const:<d> | list:<d1>,...[,repeat|,strict] | rand:<seed>:<min>:<max>")
    t.add_argument("--max-steps", type=_natural, default=1000)
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--out", help="output file (default: standard output)")
    t.add_argument("--digit-cap", type=_natural, default=DEFAULT_DIGIT_CAP)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", choices=["ordinal", "lemma34", "monotone", "compare-oracle",
                                     "decrement-oracle", "tower-bound", "termination"])
    v.add_argument("--m", type=_natural, default=16)
    v.add_argument("--steps", type=_natural, default=None)
    v.add_argument("--base0", type=int, default=2)
    v.add_argument("--schedule", type=_schedule, default=CLASSIC)
    v.add_argument("--schedules", type=_natural, default=None,
                   help="monotone/termination: number of seeded random schedules")
    v.add_argument("--a-max", type=_natural, default=50)
    v.add_argument("--b-max", type=_natural, default=50)
    v.add_argument("--x-max", type=_natural, default=128)
    v.add_argument("--cases", type=_natural, default=10_000)
    v.add_argument("--seed", type=_natural, default=0)

    b = sub.add_parser("bound", help="smallest n with a^^n >= b")
    b.add_argument("--a", type=_natural, required=True)
    b.add_argument("--b", type=_natural, required=True)

    e = sub.add_parser("eval", help="render and evaluate a form")
    e.add_argument("form", nargs="?", help='form text such as "1*2^(1*2^(0)) + 1*2^(0)"')
    e.add_argument("--m", type=_natural)
    e.add_argument("--base", type=int)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--digit-cap", type=_natural, default=DEFAULT_DIGIT_CAP)
    return p


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            yield fp


def _digits_text(x: float) -> str:
    return "astronomical" if math.isinf(x) else f"{x:.6g}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_trace(args) -> int:
    if args.base0 < 2:
        raise UsageError("--base0 must be at least 2")
    if args.m is not None:
        start = args.m
    else:
        a, k = args.tower
        if a < 2 or k < 1:
            raise UsageError("--tower needs a >= 2 and k >= 1")
        f = tower_form(a, k)
        if a == args.base0:
            start = f
        else:
            try:
                start = from_natural(evaluate(f, args.digit_cap), args.base0)
            except TooLarge:
                raise UsageError(f"tower {a},{k} is too large to rewrite in base {args.base0}") from None
    try:
        t = trace(start, args.base0, args.schedule, args.max_steps, args.digit_cap)
    except OrdinalCheckFailed as exc:
        print(f"ordinal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL

    with _output(args.out) as fp:
        if args.format == "json":
            tracefile.write_json(t, fp)
        elif args.format == "csv":
            tracefile.write_csv(t.records, fp)
        else:
            for r in t.records:
                shown = r.value if r.value is not None else r.form
                fp.write(f"{r.n}\tbase={r.base_after}\td={r.d}\t"
                         f"digits10={_digits_text(r.digits10)}\t{shown}\n")
    # keep stdout machine-readable when records go there
    print(f"outcome: {t.outcome}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    name = args.suite
    if name == "ordinal":
        rep = suites.ordinal(args.m, args.steps or 100_000, args.base0, args.schedule)
    elif name == "lemma34":
        rep = suites.lemma34(args.a_max, args.b_max)
    elif name == "monotone":
        if args.schedules:
            rep = suites.monotone_generalized(args.schedules, args.x_max, args.steps or 10,
                                              args.seed)
        else:
            rep = suites.monotone(args.x_max, args.steps or 10, args.base0, args.schedule)
    elif name == "compare-oracle":
        rep = suites.compare_oracle(args.cases, args.seed)
    elif name == "decrement-oracle":
        rep = suites.decrement_oracle(args.cases, args.seed)
    elif name == "tower-bound":
        rep = suites.tower_minimality(args.cases, args.seed)
    else:
        rep = suites.termination(schedules=args.schedules or 100, seed=args.seed,
                                 max_steps=args.steps or 10_000)
    print(rep.summary())
    if not rep.ok:
        print(f"first counterexample: {rep.counterexample}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.a < 2 or args.b < 1:
        raise UsageError("need --a >= 2 and --b >= 1")
    print(tower_bound(args.a, args.b))
    return EXIT_OK


def flat_terms(value: int, base: int) -> List[tuple]:
    """``(coeff, exponent)`` pairs of the top level, largest exponent first."""
    out, pos = [], 0
    while value:
        value, digit = divmod(value, base)
        if digit:
            out.append((digit, pos))
        pos += 1
    return out[::-1]


def cmd_eval(args) -> int:
    if args.form is not None:
        if args.m is not None or args.base is not None:
            raise UsageError("give either a form or --m/--base, not both")
        try:
            f = parse(args.form)
        except (ParseError, NonCanonicalError) as exc:
            raise UsageError(f"cannot parse form: {exc}") from None
    else:
        if args.m is None or args.base is None:
            raise UsageError("eval needs a form or both --m and --base")
        if args.base < 2:
            raise UsageError("--base must be at least 2")
        f = from_natural(args.m, args.base)

    value = try_evaluate(f, args.digit_cap)
    digits = estimate_digits(f)
    terms = None
    if value is not None and digits <= FLAT_TERMS_MAX_DIGITS:
        terms = flat_terms(value, f.base)

    if args.format == "json":
        doc = {"form": render(f), "base": f.base, "shape": render_shape(f.shape),
               "digits10": "astronomical" if math.isinf(digits) else digits,
               "value": None if value is None else decimal_string(value)}
        if terms is not None:
            doc["terms"] = [{"coeff": c, "exp": e} for c, e in terms]
        print(json.dumps(doc, indent=1))
        return EXIT_OK

    print(f"form: {render(f)}")
    print(f"shape: {render_shape(f.shape)}")
    print(f"digits10: {_digits_text(digits)}")
    print(f"value: {'(too large)' if value is None else decimal_string(value)}")
    if terms is not None:
        flat = " + ".join(f"{c}*{f.base}^{e}" for c, e in terms) or "0"
        print(f"terms: {flat}")
    return EXIT_OK


COMMANDS = {"trace": cmd_trace, "verify": cmd_verify, "bound": cmd_bound, "eval": cmd_eval}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"goodstein: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
