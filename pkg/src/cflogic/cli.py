"""Command-line front end (``cfl``).

Subcommands: eval, table, law, setop, pw, paper.  Every command builds its
whole output in memory and writes it only on success, so error paths print
nothing but the message on stderr.

Exit codes: 0 ok, 1 failed check, 2 bad input (parse, usage, file),
3 missing binding, 4 unknown set or element, 5 universe/domain mismatch,
6 range violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import (
    CFLError,
    DomainMismatchError,
    MissingVariableError,
    ParseError,
    RangeViolationError,
    UniverseMismatchError,
    UnknownElementError,
    UnknownSetError,
)
from .formula import parse_formula, truth_table
from .fuzzysets import eval_set_expression, is_empty_set, is_universal_set, load_set_file
from .piecewise import format_segments, load_pw_file, pw_eval_expression, pw_sample, render_value, sample_csv
from .weights import classify_cfl, format_weight, multilinear_of, parse_weight, sop_addends, weight_sop

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_MISSING = 3
EXIT_UNKNOWN = 4
EXIT_MISMATCH = 5
EXIT_RANGE = 6


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def parse_bindings(items: Sequence[str]) -> dict:
    """``["q1=0.8", "q2=3/5"]`` -> ``{"q1": Fraction(4, 5), ...}``."""
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise CommandError(f"binding {item!r} is not of the form name=weight")
        try:
            out[name] = parse_weight(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise CommandError(f"binding {item!r}: {exc}") from None
    return out


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _aligned(rows) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


# -- renderers (pure: text in, text out) -------------------------------------

def render_eval(formula: str, bindings: dict, fmt: str = "text") -> str:
    f = parse_formula(formula)
    w = weight_sop(f, bindings)
    if fmt == "csv":
        return _csv([["formula", "weight", "decimal"], [str(f), str(w), render_value(w)]])
    return format_weight(w) + "\n"


def render_table(formula: str, bindings: dict | None = None, addends: bool = False, fmt: str = "text") -> str:
    f = parse_formula(formula)
    header = [*truth_table(f).variables, str(f)]
    if addends:
        names, rows = sop_addends(f, bindings if bindings else None)
        header += ["addend"] + (["value"] if bindings else [])
        body = []
        for a in rows:
            row = [*a.bits, a.value, a.symbol]
            if bindings:
                row.append(render_value(a.weight))
            body.append(row)
        if bindings:
            total = weight_sop(f, bindings)
            body.append([""] * (len(header) - 2) + ["sum", render_value(total)])
    else:
        body = [[*row.values(), bit] for row, bit in truth_table(f).iter_rows()]
    table = [header, *body]
    return _csv(table) if fmt == "csv" else _aligned(table)


def render_law(formula: str, fmt: str = "text") -> tuple[str, str]:
    """Returns ``(verdict, output)`` with verdict LAW, CONTRADICTION or CONTINGENT."""
    f = parse_formula(formula)
    verdict = classify_cfl(f).upper()
    poly = multilinear_of(f).format()
    if fmt == "csv":
        return verdict, _csv([["verdict", "polynomial"], [verdict, poly]])
    return verdict, f"{verdict}\nw = {poly}\n"


def render_setop(sets_file: str, expression: str, fmt: str = "text") -> str:
    _, sets = load_set_file(sets_file)
    return render_set_result(sets, expression, fmt)


def render_set_result(sets: dict, expression: str, fmt: str = "text") -> str:
    result = eval_set_expression(expression, sets)
    flag = "UNIVERSAL" if is_universal_set(result) else "EMPTY" if is_empty_set(result) else ""
    if fmt == "csv":
        return _csv([["element", "weight"], *([e, render_value(w)] for e, w in result.items())])
    rows = [[e, format_weight(w)] for e, w in result.items()]
    text = f"{result.name}\n" + _aligned(rows)
    return text + (flag + "\n" if flag else "")


def render_pw(pw_file: str, expression: str, samples: int = 11, fmt: str = "text") -> str:
    if samples < 2:
        raise CommandError("--samples must be at least 2")
    return render_pw_result(load_pw_file(pw_file), expression, samples, fmt)


def render_pw_result(functions: dict, expression: str, samples: int = 11, fmt: str = "text") -> str:
    result = pw_eval_expression(expression, functions)
    table = sample_csv(pw_sample(result, samples))
    if fmt == "csv":
        return table
    report = [result.name, *format_segments(result)]
    return "\n".join(report) + "\n\n" + table


# -- argument handling --------------------------------------------------------

def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "csv"), default=argparse.SUPPRESS if suppress else "text",
                        help="output format (default: text)")
    parser.add_argument("--output", "-o", metavar="PATH", default=default, help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfl", description="Weights of truth for propositional formulas and fuzzy sets.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("eval", help="weight of truth of a formula")
    p.add_argument("formula")
    p.add_argument("bindings", nargs="*", metavar="NAME=WEIGHT")
    _common(p, suppress=True)

    p = sub.add_parser("table", help="truth table, optionally with SOP addends")
    p.add_argument("formula")
    p.add_argument("bindings", nargs="*", metavar="NAME=WEIGHT")
    p.add_argument("--addends", action="store_true", help="append the sum-of-products addend of each row")
    _common(p, suppress=True)

    p = sub.add_parser("law", help="classify a formula as LAW, CONTRADICTION or CONTINGENT")
    p.add_argument("formula")
    p.add_argument("--expect-law", action="store_true", help="exit 1 unless the formula is a law")
    _common(p, suppress=True)

    p = sub.add_parser("setop", help="evaluate a set expression over a JSON sets file")
    p.add_argument("sets_file")
    p.add_argument("expression")
    _common(p, suppress=True)

    p = sub.add_parser("pw", help="combine piecewise membership functions from a JSON file")
    p.add_argument("pw_file")
    p.add_argument("expression")
    p.add_argument("--samples", type=int, default=11, metavar="N", help="number of sample points (default: 11)")
    _common(p, suppress=True)

    p = sub.add_parser("paper", help="run the embedded worked-example regression suite")
    _common(p, suppress=True)
    return parser


def _error_code(exc: Exception) -> int:
    if isinstance(exc, CommandError):
        return exc.code
    if isinstance(exc, ParseError):
        return EXIT_INPUT
    if isinstance(exc, MissingVariableError):
        return EXIT_MISSING
    if isinstance(exc, (UnknownSetError, UnknownElementError)):
        return EXIT_UNKNOWN
    if isinstance(exc, (UniverseMismatchError, DomainMismatchError)):
        return EXIT_MISMATCH
    if isinstance(exc, RangeViolationError):
        return EXIT_RANGE
    return EXIT_INPUT


def _run(args) -> tuple[int, str]:
    fmt = args.format
    if args.command == "eval":
        return EXIT_OK, render_eval(args.formula, parse_bindings(args.bindings), fmt)
    if args.command == "table":
        bindings = parse_bindings(args.bindings)
        if bindings and not args.addends:
            raise CommandError("weight bindings are only used with --addends")
        return EXIT_OK, render_table(args.formula, bindings, args.addends, fmt)
    if args.command == "law":
        verdict, text = render_law(args.formula, fmt)
        code = EXIT_FAIL if args.expect_law and verdict != "LAW" else EXIT_OK
        return code, text
    if args.command == "setop":
        return EXIT_OK, render_setop(args.sets_file, args.expression, fmt)
    if args.command == "pw":
        return EXIT_OK, render_pw(args.pw_file, args.expression, args.samples, fmt)
    if args.command == "paper":
        from .worked import FIXTURES, run_checks

        buf = io.StringIO()
        ok = run_checks(FIXTURES, buf)
        return (EXIT_OK if ok else EXIT_FAIL), buf.getvalue()
    raise CommandError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = _run(args)
    except (CFLError, CommandError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        msg = exc if isinstance(exc, CFLError) or not isinstance(exc, KeyError) else f"missing key {exc.args[0]!r}"
        print(f"cfl: error: {msg}", file=sys.stderr)
        return _error_code(exc)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
