"""Univariate polynomials with exact rational coefficients.

Just enough algebra for piecewise membership functions: ring arithmetic,
Horner evaluation, exact division, gcd, square-free decomposition and Sturm
root counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Poly", "poly_gcd", "square_free_decomposition", "sturm_sequence", "count_roots"]


def _strip(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, init=False)
class Poly:
    """Polynomial in ``x``; ``coeffs[k]`` multiplies ``x**k`` (zero poly is ``()``)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        lc = self.lead
        return Poly([c / lc for c in self.coeffs]) if lc else self

    def __divmod__(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        if len(rem) < len(dv):
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - len(dv) + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + len(dv) - 1] / dv[-1]
            quot[k] = q
            if q:
                for j, d in enumerate(dv):
                    rem[k + j] -= q * d
        return Poly(quot), Poly(rem[: len(dv) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if parts:
                parts.append(("- " if c < 0 else "+ ") + body)
            else:
                parts.append(("-" if c < 0 else "") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic ``a_i`` with ``f = lead * prod a_i**i``."""
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f // a0
    c = df // a0
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _variations(seq, x) -> int:
    signs = [v for v in (q(x) for q in seq) if v]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s < 0) != (t < 0))


def count_roots(seq: list[Poly], a, b) -> int:
    """Distinct real roots in ``(a, b]`` of the square-free head of ``seq``."""
    return _variations(seq, a) - _variations(seq, b)
