"""Membership functions over a closed real interval.

A :class:`PiecewiseFn` is a piecewise polynomial on ``[a, b]``.  Segments are
contiguous; at an interior breakpoint the value comes from the right-hand
segment unless that segment declares ``lo_closed=False``, in which case the
left-hand segment owns the point.  ``points`` holds the rare isolated values
that neither neighbouring polynomial reproduces (they can appear when two
functions with opposite ownership are combined).

Combining two functions refines both breakpoint sets and applies the
connective's closed form to the polynomials of each refined segment, so the
result is again a piecewise polynomial (conjunction of two linear pieces is
quadratic, and so on).
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass, field
from fractions import Fraction
from os import PathLike
from typing import Iterable, Mapping, Sequence

from .errors import DomainMismatchError, OutOfDomainError, RangeViolationError, SegmentError
from .errors import UnknownSetError
from .formula import Formula, Op, parse_formula, variables_of
from .upoly import Poly, count_roots, square_free_decomposition, sturm_sequence
from .weights import closed_form, format_decimal, multilinear_of, weight_sop

__all__ = [
    "PolySegment",
    "PiecewiseFn",
    "RangeViolation",
    "pw_from_segments",
    "pw_constant",
    "pw_eval",
    "pw_complement",
    "pw_combine",
    "pw_eval_expression",
    "format_segments",
    "pw_range_check",
    "pw_sample",
    "render_value",
    "sample_csv",
    "functions_from_json",
    "load_pw_file",
    "segments_to_json",
]


def _rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class PolySegment:
    lo: Fraction
    hi: Fraction
    coeffs: tuple[Fraction, ...]
    lo_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", _rational(self.lo))
        object.__setattr__(self, "hi", _rational(self.hi))
        object.__setattr__(self, "coeffs", Poly(_rational(c) for c in self.coeffs).coeffs)
        if not self.lo < self.hi:
            raise SegmentError(f"empty segment [{self.lo}, {self.hi}]", self.lo)

    @property
    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def __str__(self):
        left = "[" if self.lo_closed else "("
        return f"{left}{self.lo}, {self.hi}]: {self.poly}"


@dataclass(frozen=True)
class RangeViolation:
    segment: int | None  # None for an isolated point value
    lo: Fraction
    hi: Fraction
    bound: str  # "below 0" or "above 1"
    witness: Fraction | None
    method: str  # "vertex", "sturm" or "point"

    def __str__(self):
        where = f"segment {self.segment} [{self.lo}, {self.hi}]" if self.segment is not None else f"x = {self.lo}"
        at = f" at x = {self.witness}" if self.witness is not None else ""
        return f"{where} goes {self.bound}{at}"


@dataclass(frozen=True)
class PiecewiseFn:
    domain: tuple[Fraction, Fraction]
    segments: tuple[PolySegment, ...]
    name: str = field(default="f", compare=False)
    points: tuple[tuple[Fraction, Fraction], ...] = ()

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        """Interior breakpoints, ascending."""
        return tuple(s.lo for s in self.segments[1:])

    def __call__(self, x) -> Fraction:
        return pw_eval(self, x)

    def segment_index(self, x) -> int:
        """Index of the segment that owns ``x`` under the breakpoint convention."""
        x = _rational(x)
        a, b = self.domain
        if not a <= x <= b:
            raise OutOfDomainError(f"x = {x} lies outside [{a}, {b}]")
        breaks = self.breakpoints
        i = bisect.bisect_right(breaks, x)
        if i > 0 and breaks[i - 1] == x and not self.segments[i].lo_closed:
            i -= 1
        return i

    def renamed(self, name: str) -> "PiecewiseFn":
        return PiecewiseFn(self.domain, self.segments, name, self.points)


def _coerce_segment(seg) -> PolySegment:
    if isinstance(seg, PolySegment):
        return seg
    if isinstance(seg, Mapping):
        return PolySegment(seg["lo"], seg["hi"], tuple(seg["coeffs"]), bool(seg.get("lo_closed", True)))
    return PolySegment(*seg)


def _normalize(domain, segments: Sequence[PolySegment], name, points) -> PiecewiseFn:
    merged: list[PolySegment] = []
    for seg in segments:
        if merged and merged[-1].coeffs == seg.coeffs:
            prev = merged.pop()
            seg = PolySegment(prev.lo, seg.hi, prev.coeffs, prev.lo_closed)
        merged.append(seg)
    if merged and not merged[0].lo_closed:
        first = merged[0]
        merged[0] = PolySegment(first.lo, first.hi, first.coeffs, True)
    fn = PiecewiseFn(domain, tuple(merged), name)
    kept = []
    for x, v in sorted(points):
        if fn.segments[fn.segment_index(x)].poly(x) != v:
            kept.append((x, v))
    return PiecewiseFn(domain, tuple(merged), name, tuple(kept))


def pw_from_segments(domain, segments: Iterable, name: str = "f", points=(), check_range: bool = True) -> PiecewiseFn:
    """Validate and normalize a piecewise definition.

    ``segments`` may hold :class:`PolySegment` objects, ``(lo, hi, coeffs[,
    lo_closed])`` tuples or mappings with those keys.  Adjacent segments with
    identical polynomials are merged.
    """
    a, b = (_rational(v) for v in domain)
    if not a < b:
        raise SegmentError(f"empty domain [{a}, {b}]", a)
    segs = [_coerce_segment(s) for s in segments]
    if not segs:
        raise SegmentError("no segments given")
    if segs[0].lo != a:
        raise SegmentError(f"first segment starts at {segs[0].lo}, not at the domain start {a}", segs[0].lo)
    for left, right in zip(segs, segs[1:]):
        if left.hi < right.lo:
            raise SegmentError(f"gap between {left.hi} and {right.lo}", left.hi)
        if left.hi > right.lo:
            raise SegmentError(f"segments overlap at {right.lo}", right.lo)
    if segs[-1].hi != b:
        raise SegmentError(f"last segment ends at {segs[-1].hi}, not at the domain end {b}", segs[-1].hi)
    pts = []
    for x, v in points:
        x, v = _rational(x), _rational(v)
        if not a <= x <= b:
            raise OutOfDomainError(f"point {x} lies outside [{a}, {b}]")
        pts.append((x, v))
    fn = _normalize((a, b), segs, name, pts)
    if check_range:
        violations = pw_range_check(fn)
        if violations:
            raise RangeViolationError(violations)
    return fn


def pw_constant(domain, value, name: str = "U") -> PiecewiseFn:
    a, b = domain
    return pw_from_segments(domain, [(a, b, (value,))], name)


def pw_eval(f: PiecewiseFn, x) -> Fraction:
    x = _rational(x)
    for px, pv in f.points:
        if px == x:
            return pv
    return f.segments[f.segment_index(x)].poly(x)


def pw_complement(f: PiecewiseFn) -> PiecewiseFn:
    segs = [PolySegment(s.lo, s.hi, (1 - s.poly).coeffs, s.lo_closed) for s in f.segments]
    pts = [(x, 1 - v) for x, v in f.points]
    return _normalize(f.domain, segs, f"!{f.name}", pts)


def _poly_on(f: PiecewiseFn, lo: Fraction, hi: Fraction) -> Poly:
    # polynomial in force on the open interval (lo, hi), which lies inside one segment
    return f.segments[bisect.bisect_right(f.breakpoints, (lo + hi) / 2)].poly


def pw_combine(op: Op, f: PiecewiseFn, g: PiecewiseFn, name: str | None = None) -> PiecewiseFn:
    """Apply a binary connective pointwise; ``Op.CONV`` is ``g -> f``."""
    if op is Op.NOT:
        raise ValueError("use pw_complement for the unary operation")
    if f.domain != g.domain:
        raise DomainMismatchError(f"domains {f.domain} and {g.domain} differ")
    a, b = f.domain
    cuts = [a, *sorted(set(f.breakpoints) | set(g.breakpoints)), b]
    polys = [closed_form(op, _poly_on(f, lo, hi), _poly_on(g, lo, hi)) for lo, hi in zip(cuts, cuts[1:])]
    segments, points = _assemble(cuts, polys, lambda t: closed_form(op, pw_eval(f, t), pw_eval(g, t)))
    for x in {x for x, _ in f.points} | {x for x, _ in g.points}:
        if x not in cuts[1:-1]:
            points.append((x, closed_form(op, pw_eval(f, x), pw_eval(g, x))))
    if name is None:
        name = f"({f.name} {op.value} {g.name})"
    return _normalize(f.domain, segments, name, points)


def pw_eval_expression(expr: Formula | str, functions: Mapping[str, PiecewiseFn], name: str | None = None) -> PiecewiseFn:
    """Evaluate an expression whose identifiers name functions.

    On every refined segment the expression's multilinear extension is
    applied to the leaf polynomials, so a function that occurs more than once
    is treated as one proposition (``C | !C`` is the constant 1).  With each
    function occurring once this equals folding :func:`pw_combine`.
    """
    if isinstance(expr, str):
        expr = parse_formula(expr)
    leaves = {}
    for v in variables_of(expr):
        try:
            leaves[v] = functions[v]
        except KeyError:
            raise UnknownSetError(f"no function named {v!r}") from None
    fns = list(leaves.values())
    domain = fns[0].domain
    for g in fns[1:]:
        if g.domain != domain:
            raise DomainMismatchError(f"domains {domain} and {g.domain} differ")
    terms = multilinear_of(expr).terms
    a, b = domain
    cuts = [a, *sorted(set().union(*(g.breakpoints for g in fns))), b]

    def apply(values) -> Poly:
        total = Poly()
        for mono, c in terms.items():
            term = c
            for v in mono:
                term = term * values[v]
            total = total + term
        return total

    def value_at(x):
        return weight_sop(expr, {v: pw_eval(g, x) for v, g in leaves.items()})

    polys = [apply({v: _poly_on(g, lo, hi) for v, g in leaves.items()}) for lo, hi in zip(cuts, cuts[1:])]
    segments, points = _assemble(cuts, polys, value_at)
    for x in set().union(*({x for x, _ in g.points} for g in fns)):
        if x not in cuts[1:-1]:
            points.append((x, value_at(x)))
    return _normalize(domain, segments, name or str(expr), points)


def _assemble(cuts, polys, value_at):
    """Segments on ``cuts`` with breakpoint ownership chosen to match ``value_at``."""
    segments = [PolySegment(cuts[0], cuts[1], polys[0].coeffs)]
    points = []
    for k in range(1, len(polys)):
        t = cuts[k]
        v = value_at(t)
        if polys[k](t) == v:
            closed = True
        elif polys[k - 1](t) == v:
            closed = False
        else:
            closed = True
            points.append((t, v))
        segments.append(PolySegment(t, cuts[k + 1], polys[k].coeffs, closed))
    return segments, points


def format_segments(f: PiecewiseFn) -> list[str]:
    """One line per segment with its true interval brackets, e.g. ``[3, 5): 4/5 + 1/25*x``."""
    lines = []
    segs = f.segments
    for i, s in enumerate(segs):
        left = "[" if s.lo_closed else "("
        right = "]" if i == len(segs) - 1 or not segs[i + 1].lo_closed else ")"
        lines.append(f"{left}{s.lo}, {s.hi}{right}: {s.poly}")
    for x, v in f.points:
        lines.append(f"x = {x}: {v}")
    return lines


# -- range checking ----------------------------------------------------------

def _negative_witness(q: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction | None, bool, str]:
    """Look for x in [lo, hi] with q(x) < 0.

    Returns ``(witness, violated, method)``.  Exact for every degree: a
    vertex/endpoint test up to degree 2, otherwise endpoint tests plus Sturm
    counting of the odd-multiplicity roots (where q can change sign).
    """
    for x in (lo, hi):
        if q(x) < 0:
            return x, True, "vertex" if q.degree <= 2 else "sturm"
    if q.degree <= 1:
        return None, False, "vertex"
    if q.degree == 2:
        c0, c1, c2 = q.coeffs
        vx = -c1 / (2 * c2)
        if lo < vx < hi and q(vx) < 0:
            return vx, True, "vertex"
        return None, False, "vertex"
    odd = Poly.const(1)
    for factor, mult in square_free_decomposition(q):
        if mult % 2:
            odd = odd * factor
    if odd.degree >= 1:
        seq = sturm_sequence(odd)
        inside = count_roots(seq, lo, hi) - (1 if odd(hi) == 0 else 0)
        if inside:
            return _search_negative(q, seq, lo, hi), True, "sturm"
    # no sign change inside: q keeps one sign between its (even) zeros
    steps = q.degree + 2
    for k in range(1, steps):
        x = lo + (hi - lo) * k / steps
        v = q(x)
        if v:
            return (x, True, "sturm") if v < 0 else (None, False, "sturm")
    return None, False, "sturm"


def _search_negative(q: Poly, seq, lo, hi) -> Fraction | None:
    for m in (16, 256, 4096):
        for k in range(1, m):
            x = lo + (hi - lo) * k / m
            if q(x) < 0:
                return x
    # isolate sign-change roots tightly and probe both sides
    stack = [(lo, hi)]
    width = (hi - lo) / 2**48
    while stack:
        u, v = stack.pop()
        n = count_roots(seq, u, v)
        if n == 0:
            continue
        if v - u < width:
            for x in (u, v):
                if q(x) < 0:
                    return x
            continue
        mid = (u + v) / 2
        stack.extend([(u, mid), (mid, v)])
    return None


def pw_range_check(f: PiecewiseFn) -> list[RangeViolation]:
    """Every place where ``f`` leaves [0, 1]; empty when it stays inside.

    Each segment's polynomial is checked on its closed segment.
    """
    out = []
    for i, seg in enumerate(f.segments):
        p = seg.poly
        for q, bound in ((p, "below 0"), (1 - p, "above 1")):
            witness, bad, method = _negative_witness(q, seg.lo, seg.hi)
            if bad:
                out.append(RangeViolation(i, seg.lo, seg.hi, bound, witness, method))
    for x, v in f.points:
        if v < 0 or v > 1:
            out.append(RangeViolation(None, x, x, "below 0" if v < 0 else "above 1", x, "point"))
    return out


# -- sampling and files ------------------------------------------------------

def pw_sample(f: PiecewiseFn, n: int) -> list[tuple[Fraction, Fraction]]:
    """``n`` evenly spaced exact samples including both endpoints."""
    if n < 2:
        raise ValueError("at least two samples are needed")
    a, b = f.domain
    xs = [a + (b - a) * Fraction(k, n - 1) for k in range(n)]
    return [(x, pw_eval(f, x)) for x in xs]


def render_value(x: Fraction) -> str:
    """Exact decimal if terminating, otherwise the rational string."""
    dec = format_decimal(x)
    return dec if dec is not None else str(Fraction(x))


def sample_csv(samples: Iterable[tuple[Fraction, Fraction]]) -> str:
    lines = ["x,value"]
    lines.extend(f"{render_value(x)},{render_value(v)}" for x, v in samples)
    return "\n".join(lines) + "\n"


def functions_from_json(doc: Mapping) -> dict[str, PiecewiseFn]:
    """Read ``{"domain": [a, b], "functions": {name: [segment, ...]}}``."""
    domain = tuple(_rational(v) for v in doc["domain"])
    out = {}
    for name, segs in doc["functions"].items():
        out[name] = pw_from_segments(domain, segs, name)
    return out


def load_pw_file(path: str | PathLike) -> dict[str, PiecewiseFn]:
    with open(path, encoding="utf-8") as fh:
        return functions_from_json(json.load(fh))


def segments_to_json(f: PiecewiseFn) -> list[dict]:
    return [
        {"lo": str(s.lo), "hi": str(s.hi), "coeffs": [str(c) for c in s.coeffs] or ["0"], "lo_closed": s.lo_closed}
        for s in f.segments
    ]
