"""Embedded worked examples, run as a regression suite by ``cfl paper``.

Each :class:`Fixture` pairs a computation with its expected value.  The
fixtures need no files or network; the chess-piece sets and the piecewise
functions they use are embedded below as JSON-shaped documents.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, replace
from fractions import Fraction as F
from typing import Any, Callable, Iterable, TextIO

from .errors import NotCrispError
from .formula import (
    Bin,
    Not,
    Op,
    Var,
    eval_bl,
    format_formula,
    is_contradiction_bl,
    is_tautology_bl,
    parse_formula,
    truth_table,
)
from .fuzzysets import (
    apply_connective_set,
    complement_set,
    empty_set,
    eval_set_expression,
    exclusive_union,
    from_classical,
    intersection,
    is_empty_set,
    is_universal_set,
    make_universe,
    sets_from_json,
    to_classical,
    union,
    universal_set,
    verify_set_law,
)
from .piecewise import functions_from_json, pw_combine, pw_eval, pw_sample
from .weights import (
    LAWS,
    connective_weight,
    is_cfl_law,
    law_product_identity,
    multilinear_of,
    poly_eval,
    weight_sop,
    zadeh_weight,
)

__all__ = ["Fixture", "FIXTURES", "CHESS_SETS", "PIECEWISE_FUNCTIONS", "run_checks", "corrupt"]

CHESS_SETS = {
    "universe": ["x1", "x2", "x3", "x4", "x5"],
    "sets": {
        "C1": {"x2": "1", "x5": "0.4"},
        "C2": {"x1": "0.9", "x2": "0.8", "x3": "0.7", "x5": "0.6"},
    },
}

PIECEWISE_FUNCTIONS = {
    "domain": ["0", "10"],
    "functions": {
        "C1": [
            {"lo": "0", "hi": "5", "coeffs": ["0", "1/5"]},
            {"lo": "5", "hi": "10", "coeffs": ["2", "-1/5"]},
        ],
        "C2": [
            {"lo": "0", "hi": "3", "coeffs": ["0"]},
            {"lo": "3", "hi": "7", "coeffs": ["0.8"]},
            {"lo": "7", "hi": "10", "coeffs": ["0"]},
        ],
        "U": [{"lo": "0", "hi": "10", "coeffs": ["1"]}],
    },
}

# result vectors over x1..x5 for the two chess sets
CHESS_RESULTS = {
    "!C1": ("1", "0", "1", "1", "0.6"),
    "!C2": ("0.1", "0.2", "0.3", "1", "0.4"),
    "C1 | C2": ("0.9", "1", "0.7", "0", "0.76"),
    "C1 & C2": ("0", "0.8", "0", "0", "0.24"),
    "C1 ^ C2": ("0.9", "0.2", "0.7", "0", "0.52"),
    "C1 -> C2": ("1", "0.8", "1", "1", "0.84"),
    "C2 -> C1": ("0.1", "1", "0.3", "1", "0.64"),
    "C1 <-> C2": ("0.1", "0.8", "0.3", "1", "0.48"),
    "C1 !& C2": ("1", "0.2", "1", "1", "0.76"),
    "C1 !| C2": ("0.1", "0", "0.3", "1", "0.24"),
}

# branch polynomials (constant term first) of the combined piecewise functions
UNION_BRANCHES = (("0", "1/5"), ("0.8", "0.04"), ("1.2", "-0.04"), ("2", "-0.2"))
INTERSECTION_BRANCHES = ((), ("0", "0.16"), ("1.6", "-0.16"), ())
BRANCH_CUTS = (F(0), F(3), F(5), F(7), F(10))


@dataclass(frozen=True)
class Fixture:
    key: str
    claim: str
    compute: Callable[[], Any]
    expected: Any

    def check(self) -> tuple[bool, str]:
        try:
            got = self.compute()
        except Exception as exc:  # a crashing fixture is a failure, not a crash of the suite
            return False, f"raised {type(exc).__name__}: {exc}"
        if got == self.expected:
            return True, ""
        return False, f"got {got!r}, expected {self.expected!r}"


def _fr(values: Iterable) -> tuple[F, ...]:
    return tuple(F(v) for v in values)


def _chess():
    return sets_from_json(CHESS_SETS)


def _pw():
    return functions_from_json(PIECEWISE_FUNCTIONS)


def _column(text):
    return truth_table(parse_formula(text)).column


def _sop(text, **weights):
    return weight_sop(parse_formula(text), weights)


def _law_weights_all_one(count: int, seed: int) -> bool:
    rng = random.Random(seed)
    for f in LAWS.values():
        for _ in range(count):
            w = {f"q{i}": F(rng.randint(0, 1000), 1000) for i in (1, 2, 3)}
            if weight_sop(f, w) != 1:
                return False
    return True


def _product_identity_all_one(seed: int) -> bool:
    rng = random.Random(seed)
    for n in range(1, 11):
        for _ in range(100):
            if law_product_identity(n, [F(rng.randint(0, 997), 997) for _ in range(n)]) != 1:
                return False
    return True


def _branches(op: Op) -> tuple[tuple[F, ...], ...]:
    fs = _pw()
    res = pw_combine(op, fs["C1"], fs["C2"])
    out = []
    for lo, hi in zip(BRANCH_CUTS, BRANCH_CUTS[1:]):
        seg = res.segments[res.segment_index((lo + hi) / 2)]
        out.append(seg.coeffs)
    return tuple(out)


def _branch_eval_agrees(op: Op, branches, points: int = 1000) -> bool:
    fs = _pw()
    res = pw_combine(op, fs["C1"], fs["C2"])
    polys = [_fr(b) for b in branches]
    for k in range(points):
        x = F(10 * k, points - 1)
        if x in BRANCH_CUTS[1:-1]:
            continue
        i = sum(1 for c in BRANCH_CUTS[1:-1] if c < x)
        want = sum((c * x**j for j, c in enumerate(polys[i])), F(0))
        if pw_eval(res, x) != want:
            return False
    return True


def _classical_exhaustive() -> bool:
    u = make_universe(f"x{i}" for i in range(1, 8))
    ids = u.elements

    def members(bits):
        return {ids[i] for i in range(7) if bits >> i & 1}

    sets = [from_classical(u, members(b)) for b in range(128)]
    for a in range(128):
        for b in range(128):
            sa, sb = sets[a], sets[b]
            if to_classical(union(sa, sb)) != members(a | b):
                return False
            if to_classical(intersection(sa, sb)) != members(a & b):
                return False
            if to_classical(exclusive_union(sa, sb)) != members(a ^ b):
                return False
    return True


def _not_crisp_element():
    _, sets = _chess()
    try:
        to_classical(sets["C1"])
    except NotCrispError as exc:
        return exc.element
    return None


def _cli(fn, *args):
    from . import cli

    return getattr(cli, fn)(*args)


def _setop_weights(text):
    out = _cli("render_set_result", _chess()[1], text, "csv").splitlines()[1:]
    return tuple(line.split(",")[1] for line in out)


def _pw_breakpoints(text):
    out = _cli("render_pw_result", _pw(), text, 3, "text")
    return tuple(line.split(":")[0] for line in out.splitlines()[1:] if line.startswith(("[", "(")))


def _fixtures() -> list[Fixture]:
    q1, q2, q3 = Var("q1"), Var("q2"), Var("q3")
    fx: list[Fixture] = []

    def add(key, claim, compute, expected):
        fx.append(Fixture(key, claim, compute, expected))

    # formula core
    add("formula/parse-xor", "(q1 | q2) ^ (q1 -> q3) parses as xor of or and implication",
        lambda: parse_formula("(q1 | q2) ^ (q1 -> q3)"), Bin(Op.XOR, Bin(Op.OR, q1, q2), Bin(Op.IMP, q1, q3)))
    add("formula/parse-double-negation", "!!q1 is a double negation",
        lambda: parse_formula("!!q1"), Not(Not(q1)))
    add("formula/format-modus-ponens", "modus ponens prints fully parenthesized",
        lambda: format_formula(Bin(Op.IMP, Bin(Op.AND, Bin(Op.IMP, q1, q2), q1), q2)), "(((q1 -> q2) & q1) -> q2)")
    add("formula/eval-imp-1-0", "q1 -> q2 is false at q1=1, q2=0",
        lambda: eval_bl(parse_formula("q1 -> q2"), {"q1": 1, "q2": 0}), 0)
    add("formula/eval-xor-1-1", "q1 ^ q2 is false at q1=q2=1",
        lambda: eval_bl(parse_formula("q1 ^ q2"), {"q1": 1, "q2": 1}), 0)
    add("formula/eval-excluded-middle", "q1 | !q1 is true at q1=0",
        lambda: eval_bl(parse_formula("q1 | !q1"), {"q1": 0}), 1)
    add("formula/column-and", "conjunction column", lambda: _column("q1 & q2"), (0, 0, 0, 1))
    add("formula/column-nor", "nor column", lambda: _column("q1 nor q2"), (1, 0, 0, 0))
    add("formula/rows-one-variable", "one variable gives 2 rows", lambda: len(truth_table(q1)), 2)
    add("formula/modus-tollens-tautology", "modus tollens is a tautology",
        lambda: is_tautology_bl(parse_formula("((q1 -> q2) & !q2) -> !q1")), True)
    add("formula/contradiction", "q1 & !q1 is a contradiction",
        lambda: is_contradiction_bl(parse_formula("q1 & !q1")), True)

    # weights
    add("weights/or-0.8-0.6", "w(q1 | q2) = 0.92", lambda: _sop("q1 | q2", q1="0.8", q2="0.6"), F("0.92"))
    add("weights/and-0.8-0.6", "w(q1 & q2) = 0.48", lambda: _sop("q1 & q2", q1="0.8", q2="0.6"), F("0.48"))
    add("weights/excluded-middle", "w(q1 | !q1) = 1 at 0.3", lambda: _sop("q1 | !q1", q1="0.3"), F(1))
    add("weights/imp-0.4-0.6", "implication closed form 0.84",
        lambda: connective_weight(Op.IMP, "0.4", "0.6"), F("0.84"))
    add("weights/nor-0.4-0.6", "nor closed form 0.24", lambda: connective_weight(Op.NOR, "0.4", "0.6"), F("0.24"))
    add("weights/nand-0.4-0.6", "nand closed form 0.76", lambda: connective_weight(Op.NAND, "0.4", "0.6"), F("0.76"))
    add("weights/poly-or", "polynomial of q1 | q2",
        lambda: dict(multilinear_of(parse_formula("q1 | q2")).terms),
        {frozenset({"q1"}): 1, frozenset({"q2"}): 1, frozenset({"q1", "q2"}): -1})
    add("weights/poly-xor", "polynomial of q1 ^ q2",
        lambda: dict(multilinear_of(parse_formula("q1 ^ q2")).terms),
        {frozenset({"q1"}): 1, frozenset({"q2"}): 1, frozenset({"q1", "q2"}): -2})
    add("weights/poly-or-eval", "or polynomial at (0.8, 0.6) is 0.92",
        lambda: poly_eval(multilinear_of(parse_formula("q1 | q2")), {"q1": "0.8", "q2": "0.6"}), F("0.92"))
    add("weights/law-transitivity", "transitivity of implication is a law",
        lambda: is_cfl_law(parse_formula("((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)")), True)
    add("weights/law-xor-biconditional", "!(q1 ^ q2) <-> (q1 <-> q2) is a law",
        lambda: is_cfl_law(parse_formula("!(q1 ^ q2) <-> (q1 <-> q2)")), True)
    add("weights/product-identity-n1", "product identity, n=1", lambda: law_product_identity(1, ["0.3"]), F(1))
    add("weights/product-identity-n3", "product identity, n=3",
        lambda: law_product_identity(3, ["0.1", "0.5", "0.9"]), F(1))
    add("weights/zadeh-or", "max rule gives 0.8", lambda: zadeh_weight(Op.OR, "0.8", "0.6"), F("0.8"))
    add("weights/zadeh-and", "min rule gives 0.6", lambda: zadeh_weight(Op.AND, "0.8", "0.6"), F("0.6"))

    # fuzzy sets
    def chess(name):
        return _chess()[1][name].weights

    add("sets/universal", "universal set over x1..x5",
        lambda: universal_set(_chess()[0]).weights, _fr("11111"))
    add("sets/empty", "empty set over x1..x5", lambda: empty_set(_chess()[0]).weights, _fr("00000"))
    add("sets/C1", "C1 weights", lambda: chess("C1"), _fr(("0", "1", "0", "0", "0.4")))
    add("sets/C2", "C2 weights", lambda: chess("C2"), _fr(("0.9", "0.8", "0.7", "0", "0.6")))
    add("sets/complement-universal", "complement of the universal set is empty",
        lambda: complement_set(universal_set(_chess()[0])) == empty_set(_chess()[0]), True)
    for expr, vector in CHESS_RESULTS.items():
        add(f"sets/vector {expr}", f"{expr} over x1..x5",
            lambda expr=expr: eval_set_expression(expr, _chess()[1]).weights, _fr(vector))
    add("sets/closed-form-x5", "union, xor, C2 -> C1 and iff at x5 by closed forms",
        lambda: tuple(apply_connective_set(op, *(_chess()[1][n] for n in pair))["x5"]
                      for op, pair in ((Op.OR, "C1 C2".split()), (Op.XOR, "C1 C2".split()),
                                       (Op.CONV, "C1 C2".split()), (Op.IFF, "C1 C2".split()))),
        _fr(("0.76", "0.52", "0.64", "0.48")))
    add("sets/C1-or-not-C1", "C1 | !C1 is universal",
        lambda: is_universal_set(eval_set_expression("C1 | !C1", _chess()[1])), True)
    add("sets/C2-and-not-C2", "C2 & !C2 is empty",
        lambda: is_empty_set(eval_set_expression("C2 & !C2", _chess()[1])), True)
    add("sets/modus-ponens", "((C1 -> C2) & C1) -> C2 is universal",
        lambda: is_universal_set(eval_set_expression("((C1 -> C2) & C1) -> C2", _chess()[1])), True)
    add("sets/C1-neither", "C1 is neither universal nor empty",
        lambda: (is_universal_set(_chess()[1]["C1"]), is_empty_set(_chess()[1]["C1"])), (False, False))
    add("sets/de-morgan", "De Morgan holds as a set law on C1, C2",
        lambda: verify_set_law("!(v1 & v2) <-> (!v1 | !v2)", {"v1": _chess()[1]["C1"], "v2": _chess()[1]["C2"]}),
        True)
    add("sets/excluded-middle", "v1 | !v1 is universal for C1 and C2",
        lambda: all(verify_set_law("v1 | !v1", {"v1": s}) for s in _chess()[1].values()), True)
    add("sets/not-crisp", "C1 is not crisp at x5", _not_crisp_element, "x5")

    def classical(fn):
        u = make_universe(f"x{i}" for i in range(1, 8))
        a = from_classical(u, ["x2", "x3", "x5", "x7"])
        b = from_classical(u, ["x1", "x2", "x4", "x7"])
        return to_classical(fn(a, b))

    add("sets/classical-union", "classical union", lambda: classical(union),
        frozenset({"x1", "x2", "x3", "x4", "x5", "x7"}))
    add("sets/classical-intersection", "classical intersection", lambda: classical(intersection),
        frozenset({"x2", "x7"}))
    add("sets/classical-xor", "classical exclusive union", lambda: classical(exclusive_union),
        frozenset({"x1", "x3", "x4", "x5"}))

    # piecewise
    add("piecewise/C1-peak", "C1(5) = 1", lambda: pw_eval(_pw()["C1"], 5), F(1))
    add("piecewise/C2-at-3", "C2(3) = 0.8", lambda: pw_eval(_pw()["C2"], 3), F("0.8"))
    add("piecewise/U", "U is 1 everywhere", lambda: {pw_eval(_pw()["U"], F(k, 3)) for k in range(31)}, {F(1)})
    add("piecewise/union-first", "union on [0,3) is x/5", lambda: _branches(Op.OR)[0], _fr(("0", "1/5")))
    add("piecewise/intersection-second", "intersection on [3,5] is 0.16x",
        lambda: _branches(Op.AND)[1], _fr(("0", "0.16")))
    add("piecewise/intersection-last", "intersection on [7,10] is 0", lambda: _branches(Op.AND)[3], ())
    add("piecewise/union-last", "union on (7,10] is 1 - 0.2(x - 5)",
        lambda: _branches(Op.OR)[3], _fr(("2", "-0.2")))
    add("piecewise/U-samples", "eleven samples of U", lambda: pw_sample(_pw()["U"], 11),
        [(F(k), F(1)) for k in range(11)])
    add("piecewise/C2-samples", "C2 samples at 3..6 are 0.8",
        lambda: [v for x, v in pw_sample(_pw()["C2"], 11) if 3 <= x <= 6], [F("0.8")] * 4)

    # command line
    add("cli/eval-or", "eval q1 | q2", lambda: _cli("render_eval", "q1 | q2", {"q1": F("0.8"), "q2": F("0.6")}),
        "23/25 = 0.92\n")
    add("cli/eval-imp", "eval q1 -> q2", lambda: _cli("render_eval", "(q1 -> q2)", {"q1": F("0.4"), "q2": F("0.6")}),
        "21/25 = 0.84\n")
    add("cli/table-xor", "table q1 ^ q2", lambda: _cli("render_table", "q1 ^ q2", None, False, "csv"),
        "q1,q2,(q1 ^ q2)\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n")
    add("cli/table-nand", "table q1 !& q2 final column",
        lambda: [r.split(",")[-1] for r in _cli("render_table", "q1 !& q2", None, False, "csv").splitlines()[1:]],
        list("1110"))
    add("cli/law-modus-tollens", "law modus tollens", lambda: _cli("render_law", "((q1 -> q2) & !q2) -> !q1")[1],
        "LAW\nw = 1\n")
    add("cli/law-or", "law q1 | q2", lambda: _cli("render_law", "q1 | q2")[1], "CONTINGENT\nw = q1 + q2 - q1*q2\n")
    add("cli/setop-union", "setop C1 | C2", lambda: _setop_weights("C1 | C2"), ("0.9", "1", "0.7", "0", "0.76"))
    add("cli/setop-intersection", "setop C1 & C2", lambda: _setop_weights("C1 & C2"), ("0", "0.8", "0", "0", "0.24"))
    add("cli/setop-universal", "setop C1 | !C1 is flagged",
        lambda: _cli("render_set_result", _chess()[1], "C1 | !C1").splitlines()[-1], "UNIVERSAL")
    add("cli/pw-union", "pw C1 | C2 has breakpoints 3, 5, 7",
        lambda: _pw_breakpoints("C1 | C2"), ("[0, 3)", "[3, 5)", "[5, 7)", "[7, 10]"))
    add("cli/pw-intersection", "pw C1 & C2 segments",
        lambda: _cli("render_pw_result", _pw(), "C1 & C2", 3).split("\n\n")[0].splitlines()[1:],
        ["[0, 3): 0", "[3, 5): 4/25*x", "[5, 7): 8/5 - 4/25*x", "[7, 10]: 0"])

    # aggregate checks
    add("aggregate/chess-vectors", "all ten chess result vectors, 50 weights",
        lambda: {expr: eval_set_expression(expr, _chess()[1]).weights for expr in CHESS_RESULTS},
        {expr: _fr(vec) for expr, vec in CHESS_RESULTS.items()})
    add("aggregate/laws-polynomial", "every registry law has polynomial 1",
        lambda: {str(multilinear_of(f)) for f in LAWS.values()}, {"1"})
    add("aggregate/laws-negated", "every negated law has polynomial 0",
        lambda: {str(multilinear_of(Not(f))) for f in LAWS.values()}, {"0"})
    add("aggregate/laws-random", "laws weigh 1 on 1000 random vectors each", lambda: _law_weights_all_one(1000, 7), True)
    add("aggregate/product-identity", "product identity for n = 1..10", lambda: _product_identity_all_one(11), True)
    add("aggregate/union-branches", "all four union branches",
        lambda: _branches(Op.OR), tuple(_fr(b) for b in UNION_BRANCHES))
    add("aggregate/intersection-branches", "all four intersection branches",
        lambda: _branches(Op.AND), tuple(_fr(b) for b in INTERSECTION_BRANCHES))
    add("aggregate/branch-samples", "1000 exact samples against the branch formulas",
        lambda: _branch_eval_agrees(Op.OR, UNION_BRANCHES) and _branch_eval_agrees(Op.AND, INTERSECTION_BRANCHES),
        True)
    add("aggregate/classical-exhaustive", "crisp union/intersection/xor over all 2^7 x 2^7 pairs",
        _classical_exhaustive, True)
    return fx


FIXTURES: tuple[Fixture, ...] = tuple(_fixtures())


def corrupt(fixtures: Iterable[Fixture], key: str, expected: Any) -> tuple[Fixture, ...]:
    """Copy of ``fixtures`` with one expected value replaced (harness self-test)."""
    out = []
    found = False
    for f in fixtures:
        if f.key == key:
            f = replace(f, expected=expected)
            found = True
        out.append(f)
    if not found:
        raise KeyError(key)
    return tuple(out)


def run_checks(fixtures: Iterable[Fixture] = FIXTURES, out: TextIO | None = None) -> bool:
    """Print one PASS/FAIL line per fixture and a summary; True iff all pass."""
    out = out or sys.stdout
    passed = failed = 0
    for f in fixtures:
        ok, detail = f.check()
        if ok:
            passed += 1
            out.write(f"PASS  {f.key}: {f.claim}\n")
        else:
            failed += 1
            out.write(f"FAIL  {f.key}: {f.claim} ({detail})\n")
    out.write(f"{passed} passed, {failed} failed\n")
    return failed == 0
