"""Fuzzy sets over a finite universe.

Each element ``x`` of a set ``C`` carries the weight of truth of the
proposition ``x in C``.  Set operations act elementwise through the logical
connective they correspond to (union/or, intersection/and, exclusive
union/xor, implication, bi-implication, nand, nor, complement/not).
Classical sets are the fuzzy sets whose weights are all 0 or 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from os import PathLike
from typing import Iterable, Mapping

from .errors import (
    DuplicateElementError,
    MissingVariableError,
    NotCrispError,
    UniverseMismatchError,
    UnknownElementError,
    UnknownSetError,
)
from .formula import Formula, Op, format_formula, parse_formula, variables_of
from .weights import connective_weight, parse_weight, weight_sop

__all__ = [
    "Universe",
    "FuzzySet",
    "SetExpression",
    "make_universe",
    "universal_set",
    "empty_set",
    "define_fuzzy_set",
    "complement_set",
    "apply_connective_set",
    "union",
    "intersection",
    "exclusive_union",
    "implication",
    "converse_implication",
    "bi_implication",
    "nand_set",
    "nor_set",
    "eval_set_expression",
    "is_universal_set",
    "is_empty_set",
    "verify_set_law",
    "from_classical",
    "to_classical",
    "sets_from_json",
    "load_set_file",
]

# leaves are set names; reuses the formula AST
SetExpression = Formula


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a universe needs at least one element")
        seen = set()
        for e in self.elements:
            if e in seen:
                raise DuplicateElementError(f"duplicate element {e!r}")
            seen.add(e)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.elements

    def index(self, element: str) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise UnknownElementError(f"{element!r} is not an element of the universe") from None


@dataclass(frozen=True)
class FuzzySet:
    """Membership weights, one per universe element, in universe order."""

    universe: Universe
    name: str = field(compare=False)
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.universe):
            raise ValueError("one weight per universe element is required")

    def __getitem__(self, element: str) -> Fraction:
        return self.weights[self.universe.index(element)]

    def items(self):
        return zip(self.universe.elements, self.weights)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.items())

    @property
    def is_crisp(self) -> bool:
        return all(w in (0, 1) for w in self.weights)

    def renamed(self, name: str) -> "FuzzySet":
        return FuzzySet(self.universe, name, self.weights)


def make_universe(ids: Iterable[str]) -> Universe:
    return Universe(tuple(ids))


def universal_set(u: Universe, name: str = "U") -> FuzzySet:
    return FuzzySet(u, name, (Fraction(1),) * len(u))


def empty_set(u: Universe, name: str = "EMPTY") -> FuzzySet:
    return FuzzySet(u, name, (Fraction(0),) * len(u))


def define_fuzzy_set(u: Universe, name: str, weights: Mapping[str, object] | None = None) -> FuzzySet:
    """Build a set from a partial element->weight mapping; others weigh 0."""
    values = [Fraction(0)] * len(u)
    for element, w in (weights or {}).items():
        values[u.index(element)] = parse_weight(w)
    return FuzzySet(u, name, tuple(values))


def _same_universe(*sets: FuzzySet) -> Universe:
    u = sets[0].universe
    for s in sets[1:]:
        if s.universe != u:
            raise UniverseMismatchError(f"sets {sets[0].name!r} and {s.name!r} live in different universes")
    return u


def complement_set(s: FuzzySet) -> FuzzySet:
    return FuzzySet(s.universe, f"!{s.name}", tuple(1 - w for w in s.weights))


def apply_connective_set(op: Op, a: FuzzySet, b: FuzzySet) -> FuzzySet:
    """Elementwise connective on two sets; ``Op.IMP`` is ``a -> b``, ``Op.CONV`` is ``b -> a``."""
    if op is Op.NOT:
        raise ValueError("use complement_set for the unary operation")
    u = _same_universe(a, b)
    weights = tuple(connective_weight(op, wa, wb) for wa, wb in zip(a.weights, b.weights))
    return FuzzySet(u, f"({a.name} {op.value} {b.name})", weights)


def union(a, b):
    return apply_connective_set(Op.OR, a, b)


def intersection(a, b):
    return apply_connective_set(Op.AND, a, b)


def exclusive_union(a, b):
    return apply_connective_set(Op.XOR, a, b)


def implication(a, b):
    return apply_connective_set(Op.IMP, a, b)


def converse_implication(a, b):
    return apply_connective_set(Op.CONV, a, b)


def bi_implication(a, b):
    return apply_connective_set(Op.IFF, a, b)


def nand_set(a, b):
    return apply_connective_set(Op.NAND, a, b)


def nor_set(a, b):
    return apply_connective_set(Op.NOR, a, b)


def _leaf_sets(expr: Formula, sets: Mapping[str, FuzzySet], error=UnknownSetError) -> dict[str, FuzzySet]:
    names = variables_of(expr)
    chosen = {}
    for name in names:
        try:
            chosen[name] = sets[name]
        except KeyError:
            raise error(f"no set named {name!r}") from None
    _same_universe(*chosen.values())
    return chosen


def _elementwise_sop(expr: Formula, chosen: Mapping[str, FuzzySet]) -> tuple[Universe, tuple[Fraction, ...]]:
    u = next(iter(chosen.values())).universe
    weights = []
    for i in range(len(u)):
        point = {name: s.weights[i] for name, s in chosen.items()}
        weights.append(weight_sop(expr, point))
    return u, tuple(weights)


def eval_set_expression(expr: SetExpression | str, sets: Mapping[str, FuzzySet]) -> FuzzySet:
    """Evaluate a set expression whose identifiers name sets in ``sets``.

    Each element's weight is the SOP weight of the expression at that
    element.  For expressions mentioning every set once this coincides with
    folding :func:`complement_set` and :func:`apply_connective_set` bottom up;
    with repeated sets only the SOP value is right (``C | !C`` is the
    universal set).
    """
    if isinstance(expr, str):
        expr = parse_formula(expr)
    chosen = _leaf_sets(expr, sets)
    u, weights = _elementwise_sop(expr, chosen)
    return FuzzySet(u, format_formula(expr), weights)


def is_universal_set(s: FuzzySet) -> bool:
    return all(w == 1 for w in s.weights)


def is_empty_set(s: FuzzySet) -> bool:
    return all(w == 0 for w in s.weights)


def verify_set_law(f: Formula | str, sets: Mapping[str, FuzzySet]) -> bool:
    """True iff the set derived from ``f`` (variables mapped to sets) is the universal set."""
    if isinstance(f, str):
        f = parse_formula(f)
    chosen = _leaf_sets(f, sets, error=MissingVariableError)
    _, weights = _elementwise_sop(f, chosen)
    return all(w == 1 for w in weights)


def from_classical(u: Universe, members: Iterable[str], name: str = "C") -> FuzzySet:
    members = set(members)
    unknown = members - set(u.elements)
    if unknown:
        raise UnknownElementError(f"not in the universe: {sorted(unknown)}")
    return FuzzySet(u, name, tuple(Fraction(int(e in members)) for e in u.elements))


def to_classical(s: FuzzySet) -> frozenset[str]:
    """Members of a crisp set; raises NotCrispError naming the first fuzzy element."""
    out = set()
    for element, w in s.items():
        if w == 1:
            out.add(element)
        elif w != 0:
            raise NotCrispError(element, w)
    return frozenset(out)


def sets_from_json(doc: Mapping) -> tuple[Universe, dict[str, FuzzySet]]:
    """Read ``{"universe": [...], "sets": {name: {element: weight}}}``."""
    u = make_universe(str(e) for e in doc["universe"])
    sets = {name: define_fuzzy_set(u, name, members) for name, members in doc.get("sets", {}).items()}
    return u, sets


def load_set_file(path: str | PathLike) -> tuple[Universe, dict[str, FuzzySet]]:
    with open(path, encoding="utf-8") as fh:
        return sets_from_json(json.load(fh))
