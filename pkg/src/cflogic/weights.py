"""Canonical fuzzy logic weights of truth.

A formula's weight is obtained by the sum-of-products (SOP) method: every
truth-table row on which the formula is true contributes the product of its
literal weights, ``w(q)`` for a 1 and ``1 - w(q)`` for a 0.  The same number
is the formula's multilinear extension evaluated at the variable weights,
which :func:`multilinear_of` builds symbolically.

The binary closed forms in :func:`connective_weight` are only valid for
operands that share no variables.  ``q & q`` weighs ``w`` and ``q & !q``
weighs 0 under SOP, whereas composing closed forms would give ``w**2`` and
``w*(1-w)``.  Always go through :func:`weight_sop` or the polynomial for
compound formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import MissingVariableError, TooManyVariablesError, WeightRangeError
from .formula import (
    MAX_TABLE_VARS,
    Formula,
    Op,
    natural_key,
    parse_formula,
    truth_column,
    truth_table,
    variables_of,
)

__all__ = [
    "MAX_SYMBOLIC_VARS",
    "parse_weight",
    "as_weights",
    "format_decimal",
    "format_weight",
    "weight_sop",
    "sop_addends",
    "Addend",
    "connective_weight",
    "closed_form",
    "zadeh_weight",
    "MultilinearPoly",
    "multilinear_of",
    "poly_eval",
    "is_cfl_law",
    "is_cfl_contradiction",
    "classify_cfl",
    "law_product_identity",
    "LAWS",
]

MAX_SYMBOLIC_VARS = 16

ZERO = Fraction(0)
ONE = Fraction(1)


# -- weights -----------------------------------------------------------------

def parse_weight(value) -> Fraction:
    """Convert ``value`` to an exact weight in [0, 1].

    Strings may be decimal (``"0.8"``) or rational (``"4/5"``).  Floats are
    read through their shortest repr, so ``0.8`` becomes ``4/5`` rather than
    the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        w = value
    elif isinstance(value, bool):
        w = Fraction(int(value))
    elif isinstance(value, int):
        w = Fraction(value)
    elif isinstance(value, float):
        w = Fraction(repr(value))
    elif isinstance(value, str):
        try:
            w = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise WeightRangeError(f"not a weight literal: {value!r}") from None
    else:
        try:
            w = Fraction(value)
        except (TypeError, ValueError):
            raise WeightRangeError(f"not a weight literal: {value!r}") from None
    if not 0 <= w <= 1:
        raise WeightRangeError(f"weight {value} lies outside [0, 1]")
    return w


def as_weights(mapping: Mapping) -> dict[str, Fraction]:
    return {str(k): parse_weight(v) for k, v in mapping.items()}


def format_decimal(x: Fraction) -> str | None:
    """Exact decimal rendering of ``x``, or None if it does not terminate."""
    x = Fraction(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    digits = max(twos, fives)
    if digits == 0:
        return str(x.numerator)
    scaled = abs(x.numerator) * 10**digits // x.denominator
    sign = "-" if x < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits).rstrip('0')}"


def format_weight(x: Fraction) -> str:
    """``"23/25 = 0.92"``; integers and non-terminating values print once."""
    x = Fraction(x)
    exact = str(x)
    dec = format_decimal(x)
    if dec is None or dec == exact:
        return exact
    return f"{exact} = {dec}"


def _bind(names: Sequence[str], weights: Mapping) -> list[Fraction]:
    out = []
    for name in names:
        try:
            out.append(parse_weight(weights[name]))
        except KeyError:
            raise MissingVariableError(name) from None
    return out


# -- sum of products ---------------------------------------------------------

def weight_sop(f: Formula, weights: Mapping) -> Fraction:
    """Weight of truth of ``f`` by the sum-of-products method.

    Rows where ``f`` is false contribute a zero addend and are skipped; every
    other row contributes the product of its literal weights.

    >>> weight_sop(parse_formula("q1 | q2"), {"q1": "0.8", "q2": "0.6"})
    Fraction(23, 25)
    """
    names, mask = truth_column(f)
    ws = _bind(names, weights)
    n = len(names)
    total = ZERO

    def walk(depth, start, span, prod):
        nonlocal total
        if (mask >> start) & ((1 << span) - 1) == 0:
            return
        if depth == n:
            total += prod
            return
        half = span >> 1
        w = ws[depth]
        walk(depth + 1, start, half, prod * (1 - w))
        walk(depth + 1, start + half, half, prod * w)

    walk(0, 0, 1 << n, ONE)
    return total


@dataclass(frozen=True)
class Addend:
    """One row of an SOP table: the row bits, the formula bit and its addend."""

    bits: tuple[int, ...]
    value: int
    symbol: str
    weight: Fraction | None


def sop_addends(f: Formula, weights: Mapping | None = None) -> tuple[tuple[str, ...], list[Addend]]:
    """SOP addends in canonical row order, with values when ``weights`` is given."""
    table = truth_table(f)
    names = table.variables
    ws = _bind(names, weights) if weights is not None else None
    rows = []
    for r in range(len(table)):
        bits = table.row_bits(r)
        bit = (table.mask >> r) & 1
        if not bit:
            rows.append(Addend(bits, 0, "0", ZERO if ws is not None else None))
            continue
        symbol = "*".join(f"w({'' if b else '!'}{name})" for name, b in zip(names, bits))
        value = None
        if ws is not None:
            value = ONE
            for w, b in zip(ws, bits):
                value *= w if b else 1 - w
        rows.append(Addend(bits, 1, symbol, value))
    return names, rows


# -- closed forms ------------------------------------------------------------

def closed_form(op: Op, a, b=0):
    """Closed-form expression of ``op`` over any commutative ring values.

    Works on Fractions as well as on polynomials, which is how piecewise
    membership functions are combined.
    """
    if op is Op.NOT:
        return 1 - a
    if op is Op.OR:
        return a + b - a * b
    if op is Op.AND:
        return a * b
    if op is Op.XOR:
        return a + b - 2 * a * b
    if op is Op.IMP:
        return 1 - a + a * b
    if op is Op.CONV:
        return 1 - b + a * b
    if op is Op.IFF:
        return 1 - a - b + 2 * a * b
    if op is Op.NAND:
        return 1 - a * b
    if op is Op.NOR:
        return 1 - a - b + a * b
    raise ValueError(op)


_closed_form = lru_cache(maxsize=4096)(closed_form)


def connective_weight(op: Op, a, b=None) -> Fraction:
    """Closed-form weight of one connective applied to independent operands.

    ``Op.CONV`` is the converse implication ``a <- b`` (that is, ``b -> a``).
    """
    a = parse_weight(a)
    if op is Op.NOT:
        if b is not None:
            raise TypeError("negation takes a single operand")
        return _closed_form(op, a, ZERO)
    if b is None:
        raise TypeError(f"{op.name} takes two operands")
    return _closed_form(op, a, parse_weight(b))


def zadeh_weight(op: Op, a, b) -> Fraction:
    """Max/min comparison baseline for disjunction and conjunction."""
    a, b = parse_weight(a), parse_weight(b)
    if op is Op.OR:
        return max(a, b)
    if op is Op.AND:
        return min(a, b)
    raise ValueError(f"no max/min rule for {op.name}")


# -- multilinear polynomials -------------------------------------------------

def _monomial_key(mono: frozenset):
    return len(mono), [natural_key(v) for v in sorted(mono, key=natural_key)]


class MultilinearPoly:
    """Polynomial of degree at most one in each variable, exact coefficients.

    Monomials are frozensets of variable names (the empty set is the constant
    term).  Zero coefficients are never stored, so equality of polynomials is
    equality of the term mappings.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[str], object] | None = None):
        clean: dict[frozenset, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            key = frozenset((mono,) if isinstance(mono, str) else mono)
            c = clean.get(key, ZERO) + Fraction(coeff)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c) -> "MultilinearPoly":
        return cls({frozenset(): c})

    @classmethod
    def variable(cls, name: str) -> "MultilinearPoly":
        return cls({frozenset([name]): 1})

    @property
    def terms(self) -> dict[frozenset, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        names = set()
        for mono in self._terms:
            names |= mono
        return tuple(sorted(names, key=natural_key))

    @property
    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def is_constant(self, c=None) -> bool:
        if any(self._terms.keys() - {frozenset()}):
            return False
        return c is None or self._terms.get(frozenset(), ZERO) == c

    def __eq__(self, other):
        if isinstance(other, MultilinearPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _lift(self, other):
        if isinstance(other, MultilinearPoly):
            return other
        return MultilinearPoly.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, ZERO) + c
        return MultilinearPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultilinearPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        # x * x reduces to x: exact on {0,1}, which is all a multilinear form encodes
        other = self._lift(other)
        terms: dict[frozenset, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 | m2
                terms[m] = terms.get(m, ZERO) + c1 * c2
        return MultilinearPoly(terms)

    __rmul__ = __mul__

    def __call__(self, weights: Mapping) -> Fraction:
        return poly_eval(self, weights, check_range=False)

    def format(self, explicit_coefficients: bool = False) -> str:
        """Render monomials ordered by degree then variable names.

        ``explicit_coefficients`` writes unit coefficients too
        (``1*q1 + 1*q2 - 1*q1*q2``).
        """
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_monomial_key):
            c = self._terms[mono]
            names = "*".join(sorted(mono, key=natural_key))
            mag = abs(c)
            if not names:
                body = str(mag)
            elif mag == 1 and not explicit_coefficients:
                body = names
            else:
                body = f"{mag}*{names}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultilinearPoly({self.format()!r})"


def poly_eval(p: MultilinearPoly, weights: Mapping, check_range: bool = True) -> Fraction:
    """Exact value of ``p`` at ``weights``.

    With ``check_range`` the result must lie in [0, 1], which always holds for
    polynomials built from formulas.
    """
    names = p.variables
    bound = dict(zip(names, _bind(names, weights)))
    total = ZERO
    for mono, c in p.terms.items():
        term = c
        for v in mono:
            term *= bound[v]
        total += term
    if check_range:
        assert 0 <= total <= 1, f"polynomial value {total} outside [0, 1]"
    return total


def multilinear_of(f: Formula) -> MultilinearPoly:
    """Multilinear extension of ``f`` by Shannon expansion.

    ``P(f) = x*P(f|x=1) + (1-x)*P(f|x=0)`` on the leftmost variable, recursing
    on the two halves of the truth column; identical sub-columns are shared.
    """
    names = variables_of(f)
    if len(names) > MAX_SYMBOLIC_VARS:
        raise TooManyVariablesError(
            f"{len(names)} variables exceeds the symbolic limit of {MAX_SYMBOLIC_VARS}")
    _, mask = truth_column(f, names)
    n = len(names)
    memo: dict[tuple[int, int], dict[frozenset, int]] = {}

    def expand(depth, bits):
        key = (depth, bits)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if depth == n:
            out = {frozenset(): 1} if bits else {}
        else:
            half = 1 << (n - depth - 1)
            low = expand(depth + 1, bits & ((1 << half) - 1))
            high = expand(depth + 1, bits >> half)
            out = dict(low)
            x = names[depth]
            for mono in low.keys() | high.keys():
                d = high.get(mono, 0) - low.get(mono, 0)
                if d:
                    out[mono | {x}] = d
        memo[key] = out
        return out

    return MultilinearPoly(expand(0, mask))


# -- certification -----------------------------------------------------------

def classify_cfl(f: Formula) -> str:
    """``"law"``, ``"contradiction"`` or ``"contingent"`` from the polynomial.

    The truth column is checked as well; the two verdicts must agree.
    """
    p = multilinear_of(f)
    if p.is_constant(1):
        verdict = "law"
    elif p.is_constant(0):
        verdict = "contradiction"
    else:
        verdict = "contingent"
    table = truth_table(f)
    full = (1 << len(table)) - 1
    bl = "law" if table.mask == full else "contradiction" if table.mask == 0 else "contingent"
    if bl != verdict:
        raise AssertionError(f"polynomial says {verdict} but truth table says {bl} for {f}")
    return verdict


def is_cfl_law(f: Formula) -> bool:
    return classify_cfl(f) == "law"


def is_cfl_contradiction(f: Formula) -> bool:
    return classify_cfl(f) == "contradiction"


def law_product_identity(n: int, weights: Sequence) -> Fraction:
    """``prod_j (w(!q_j) + w(q_j))`` built recursively over ``q_1..q_n``.

    The value is 1 for every weight vector; each step multiplies the running
    product for ``n - 1`` variables by the factor of the next one.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ws = [parse_weight(w) for w in weights]
    if len(ws) != n:
        raise ValueError(f"expected {n} weights, got {len(ws)}")
    prod = ONE
    for w in ws:
        prod = prod * ((1 - w) + w)
    return prod


LAWS: dict[str, Formula] = {
    name: parse_formula(text)
    for name, text in [
        ("excluded middle", "q1 | !q1"),
        ("non-contradiction", "!(q1 & !q1)"),
        ("modus ponens", "((q1 -> q2) & q1) -> q2"),
        ("modus tollens", "((q1 -> q2) & !q2) -> !q1"),
        ("De Morgan (or)", "!(q1 | q2) <-> (!q1 & !q2)"),
        ("De Morgan (and)", "!(q1 & q2) <-> (!q1 | !q2)"),
        ("xor-biconditional", "!(q1 ^ q2) <-> (q1 <-> q2)"),
        ("transitivity of implication", "((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)"),
    ]
}
