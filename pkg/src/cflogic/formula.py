"""Propositional formulas: AST, parser, printer and bivalent semantics.

Grammar (loosest to tightest binding)::

    iff    := imp ("<->" imp)*                 left-assoc
    imp    := or "->" imp | or ("<-" or)*      "->" right-assoc, "<-" left-assoc
    or     := and (("|" | "^") and)*           one operator kind per chain
            | and ("!|" | "nor") and           non-associative
    and    := unary ("&" unary)*
            | unary ("!&" | "nand") unary      non-associative
    unary  := ("!" | "~") unary | IDENT | "(" iff ")"

Mixing ``->`` with ``<-``, or ``|`` with ``^``, in one chain is rejected
rather than silently bound.  ``nand`` and ``nor`` are reserved words.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import MissingVariableError, ParseError, TooManyVariablesError

__all__ = [
    "Op",
    "Var",
    "Not",
    "Bin",
    "Formula",
    "TruthTable",
    "MAX_TABLE_VARS",
    "parse_formula",
    "format_formula",
    "variables_of",
    "natural_key",
    "eval_bl",
    "truth_table",
    "truth_column",
    "is_tautology_bl",
    "is_contradiction_bl",
    "classify_bl",
]

MAX_TABLE_VARS = 24


class Op(enum.Enum):
    """Logical connectives; the value is the ASCII rendering."""

    NOT = "!"
    OR = "|"
    XOR = "^"
    AND = "&"
    IMP = "->"
    CONV = "<-"  # converse implication: a <- b means b -> a
    IFF = "<->"
    NAND = "!&"
    NOR = "!|"

    @property
    def is_binary(self):
        return self is not Op.NOT


BINARY_OPS = tuple(op for op in Op if op.is_binary)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Not:
    operand: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Bin:
    op: Op
    left: "Formula"
    right: "Formula"

    def __post_init__(self):
        if not isinstance(self.op, Op) or not self.op.is_binary:
            raise ValueError(f"{self.op!r} is not a binary connective")

    def __str__(self):
        return format_formula(self)


Formula = Union[Var, Not, Bin]


# -- variables ---------------------------------------------------------------

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DIGITS_RE = re.compile(r"(\d+)")


def natural_key(name: str):
    """Sort key comparing digit runs numerically, so ``q2 < q10``."""
    parts = []
    for chunk in _DIGITS_RE.split(name):
        if not chunk:
            continue
        if chunk.isdigit():
            parts.append((1, int(chunk), chunk))
        else:
            parts.append((0, 0, chunk))
    return tuple(parts), name


def variables_of(f: Formula) -> tuple[str, ...]:
    """Distinct variable names of ``f`` in canonical (natural) order."""
    seen = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            seen.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return tuple(sorted(seen, key=natural_key))


# -- lexer -------------------------------------------------------------------

_KEYWORDS = {"nand": "NAND", "nor": "NOR"}

# longest match first
_SYMBOLS = [
    ("<->", "IFF"),
    ("->", "IMP"),
    ("<-", "CONV"),
    ("!&", "NAND"),
    ("!|", "NOR"),
    ("!", "NOT"),
    ("~", "NOT"),
    ("¬", "NOT"),
    ("\u222a\u0307", "XOR"),  # union with a dot above
    ("\u2933", "IMP"),  # wave arrow used for set implication
    ("&", "AND"),
    ("∧", "AND"),
    ("∩", "AND"),
    ("|", "OR"),
    ("∨", "OR"),
    ("∪", "OR"),
    ("^", "XOR"),
    ("⊻", "XOR"),
    ("→", "IMP"),
    ("↔", "IFF"),
    ("↑", "NAND"),
    ("↓", "NOR"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
]

_OPERATOR_CHARS = set("<>-=!&|^~*+/%$#@?:;.,[]{}\\'\"`")

_TOKEN_NAMES = {
    "IDENT": "identifier",
    "NOT": "'!'",
    "AND": "'&'",
    "OR": "'|'",
    "XOR": "'^'",
    "IMP": "'->'",
    "CONV": "'<-'",
    "IFF": "'<->'",
    "NAND": "'!&'",
    "NOR": "'!|'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "EOF": "end of input",
}

_OP_OF_TOKEN = {
    "AND": Op.AND,
    "OR": Op.OR,
    "XOR": Op.XOR,
    "IMP": Op.IMP,
    "CONV": Op.CONV,
    "IFF": Op.IFF,
    "NAND": Op.NAND,
    "NOR": Op.NOR,
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            word = m.group()
            tokens.append(_Token(_KEYWORDS.get(word, "IDENT"), word, i + 1))
            i = m.end()
            continue
        if ch.isdigit():
            m = re.compile(r"\w+").match(text, i)
            raise ParseError(f"invalid identifier {m.group()!r} (must not begin with a digit)", i + 1)
        for sym, kind in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(_Token(kind, sym, i + 1))
                i += len(sym)
                break
        else:
            j = i
            while j < n and text[j] in _OPERATOR_CHARS:
                j += 1
            bad = text[i:j] if j > i else ch
            raise ParseError(f"unknown operator token {bad!r}", i + 1)
    tokens.append(_Token("EOF", "", n + 1))
    return tokens


# -- parser ------------------------------------------------------------------

_AFTER_OPERAND = {"IFF", "IMP", "CONV", "OR", "XOR", "NOR", "AND", "NAND"}
_OPERAND_START = {"IDENT", "NOT", "LPAREN"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message, expected):
        raise ParseError(message, self.tok.pos, {_TOKEN_NAMES[k] for k in expected})

    def parse(self) -> Formula:
        f = self.parse_iff()
        if self.tok.kind != "EOF":
            self.fail(f"unexpected {self.tok.text!r}", _AFTER_OPERAND | {"EOF"})
        return f

    def parse_iff(self):
        left = self.parse_imp()
        while self.tok.kind == "IFF":
            self.advance()
            left = Bin(Op.IFF, left, self.parse_imp())
        return left

    def parse_imp(self):
        left = self.parse_or()
        kind = self.tok.kind
        if kind == "IMP":
            self.advance()
            return Bin(Op.IMP, left, self._imp_tail())
        if kind == "CONV":
            while self.tok.kind == "CONV":
                self.advance()
                left = Bin(Op.CONV, left, self.parse_or())
            if self.tok.kind == "IMP":
                self.fail("mixing '<-' and '->' requires parentheses", {"CONV", "IFF", "RPAREN", "EOF"})
        return left

    def _imp_tail(self):
        left = self.parse_or()
        if self.tok.kind == "IMP":
            self.advance()
            return Bin(Op.IMP, left, self._imp_tail())
        if self.tok.kind == "CONV":
            self.fail("mixing '->' and '<-' requires parentheses", {"IMP", "IFF", "RPAREN", "EOF"})
        return left

    def _chain(self, operand, ops, nonassoc):
        left = operand()
        first = None
        while self.tok.kind in ops:
            kind = self.tok.kind
            if first is not None:
                if kind != first:
                    self.fail(f"mixing {_TOKEN_NAMES[first]} and {_TOKEN_NAMES[kind]} requires parentheses",
                              {first, "RPAREN", "EOF"} - nonassoc)
                if kind in nonassoc:
                    self.fail(f"{_TOKEN_NAMES[kind]} is non-associative; chaining requires parentheses",
                              {"RPAREN", "EOF"})
            first = kind
            self.advance()
            left = Bin(_OP_OF_TOKEN[kind], left, operand())
        return left

    def parse_or(self):
        return self._chain(self.parse_and, ("OR", "XOR", "NOR"), {"NOR"})

    def parse_and(self):
        return self._chain(self.parse_unary, ("AND", "NAND"), {"NAND"})

    def parse_unary(self):
        kind = self.tok.kind
        if kind == "NOT":
            self.advance()
            return Not(self.parse_unary())
        if kind == "IDENT":
            return Var(self.advance().text)
        if kind == "LPAREN":
            self.advance()
            inner = self.parse_iff()
            if self.tok.kind != "RPAREN":
                self.fail("unbalanced parenthesis", {"RPAREN"} | _AFTER_OPERAND)
            self.advance()
            return inner
        what = "end of input" if kind == "EOF" else repr(self.tok.text)
        self.fail(f"unexpected {what}", _OPERAND_START)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula AST.

    >>> format_formula(parse_formula("(q1 | q2) ^ (q1 -> q3)"))
    '((q1 | q2) ^ (q1 -> q3))'
    """
    return _Parser(text).parse()


def format_formula(f: Formula) -> str:
    """Fully parenthesized rendering; reparses to an identical tree."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        return "!" + format_formula(f.operand)
    return f"({format_formula(f.left)} {f.op.value} {format_formula(f.right)})"


# -- bivalent semantics ------------------------------------------------------

def apply_bit(op: Op, a: int, b: int = 0) -> int:
    """Classical truth function of ``op`` on bits."""
    if op is Op.NOT:
        return 1 - a
    if op is Op.OR:
        return a | b
    if op is Op.XOR:
        return a ^ b
    if op is Op.AND:
        return a & b
    if op is Op.IMP:
        return (1 - a) | b
    if op is Op.CONV:
        return a | (1 - b)
    if op is Op.IFF:
        return 1 - (a ^ b)
    if op is Op.NAND:
        return 1 - (a & b)
    if op is Op.NOR:
        return 1 - (a | b)
    raise ValueError(op)


def eval_bl(f: Formula, assignment: Mapping[str, int]) -> int:
    """Evaluate ``f`` under a 0/1 assignment of its variables."""
    if isinstance(f, Var):
        try:
            return 1 if assignment[f.name] else 0
        except KeyError:
            raise MissingVariableError(f.name) from None
    if isinstance(f, Not):
        return 1 - eval_bl(f.operand, assignment)
    return apply_bit(f.op, eval_bl(f.left, assignment), eval_bl(f.right, assignment))


def _check_table_size(names, limit=MAX_TABLE_VARS):
    if len(names) > limit:
        raise TooManyVariablesError(f"{len(names)} variables exceeds the limit of {limit}")


def _var_mask(index: int, n: int) -> int:
    # bit r of the result is the value of variable `index` in row r
    k = n - 1 - index
    half = 1 << k
    chunk = ((1 << half) - 1) << half
    return chunk * (((1 << (1 << n)) - 1) // ((1 << (2 * half)) - 1))


def truth_column(f: Formula, variables=None) -> tuple[tuple[str, ...], int]:
    """Bit-parallel truth column: bit ``r`` is the value of ``f`` in row ``r``."""
    names = tuple(variables) if variables is not None else variables_of(f)
    _check_table_size(names)
    n = len(names)
    full = (1 << (1 << n)) - 1
    masks = {name: _var_mask(i, n) for i, name in enumerate(names)}

    def col(node):
        if isinstance(node, Var):
            try:
                return masks[node.name]
            except KeyError:
                raise MissingVariableError(node.name) from None
        if isinstance(node, Not):
            return full ^ col(node.operand)
        a, b = col(node.left), col(node.right)
        op = node.op
        if op is Op.OR:
            return a | b
        if op is Op.XOR:
            return a ^ b
        if op is Op.AND:
            return a & b
        if op is Op.IMP:
            return (full ^ a) | b
        if op is Op.CONV:
            return a | (full ^ b)
        if op is Op.IFF:
            return full ^ (a ^ b)
        if op is Op.NAND:
            return full ^ (a & b)
        return full ^ (a | b)

    return names, col(f)


@dataclass(frozen=True)
class TruthTable:
    """Truth table in canonical row order.

    Rows run lexicographically with 0 before 1 and the leftmost variable most
    significant; the final column is kept as a bitmask (bit ``r`` = row ``r``).
    """

    variables: tuple[str, ...]
    mask: int

    def __len__(self):
        return 1 << len(self.variables)

    @property
    def column(self) -> tuple[int, ...]:
        return tuple((self.mask >> r) & 1 for r in range(len(self)))

    def row_bits(self, r: int) -> tuple[int, ...]:
        n = len(self.variables)
        return tuple((r >> (n - 1 - i)) & 1 for i in range(n))

    def iter_rows(self) -> Iterator[tuple[dict[str, int], int]]:
        for r in range(len(self)):
            yield dict(zip(self.variables, self.row_bits(r))), (self.mask >> r) & 1

    @property
    def rows(self) -> list[tuple[dict[str, int], int]]:
        return list(self.iter_rows())

    def __iter__(self):
        return self.iter_rows()


def truth_table(f: Formula) -> TruthTable:
    names, mask = truth_column(f)
    return TruthTable(names, mask)


def is_tautology_bl(f: Formula) -> bool:
    table = truth_table(f)
    return table.mask == (1 << len(table)) - 1


def is_contradiction_bl(f: Formula) -> bool:
    return truth_table(f).mask == 0


def classify_bl(f: Formula) -> str:
    """One of ``"tautology"``, ``"contradiction"`` or ``"contingent"``."""
    table = truth_table(f)
    if table.mask == 0:
        return "contradiction"
    if table.mask == (1 << len(table)) - 1:
        return "tautology"
    return "contingent"
