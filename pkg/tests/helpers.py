"""Strategies and independent oracles shared by the test modules.

The oracles deliberately avoid the library's truth-column machinery: they
walk assignments with itertools and evaluate the AST with Python's own
boolean operators.
"""

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from cflogic import BINARY_OPS, Bin, Not, Op, Var, variables_of

VARS = ("q1", "q2", "q3", "q4")

_PY_OPS = {
    Op.OR: lambda a, b: a or b,
    Op.AND: lambda a, b: a and b,
    Op.XOR: lambda a, b: a != b,
    Op.IMP: lambda a, b: (not a) or b,
    Op.CONV: lambda a, b: a or not b,
    Op.IFF: lambda a, b: a == b,
    Op.NAND: lambda a, b: not (a and b),
    Op.NOR: lambda a, b: not (a or b),
}


def oracle_eval(f, env):
    if isinstance(f, Var):
        return bool(env[f.name])
    if isinstance(f, Not):
        return not oracle_eval(f.operand, env)
    return bool(_PY_OPS[f.op](oracle_eval(f.left, env), oracle_eval(f.right, env)))


def oracle_sop(f, weights):
    """Sum over all 2^n assignments of the row product, times the row's truth value."""
    names = sorted(variables_of(f))
    total = Fraction(0)
    for bits in itertools.product((0, 1), repeat=len(names)):
        env = dict(zip(names, bits))
        if oracle_eval(f, env):
            prod = Fraction(1)
            for name, b in env.items():
                w = Fraction(weights[name])
                prod *= w if b else 1 - w
            total += prod
    return total


def sympy_terms(f):
    """Multilinear coefficients of f via sympy expansion of the brute-force SOP."""
    import sympy

    names = sorted(variables_of(f))
    syms = {n: sympy.Symbol(n) for n in names}
    expr = sympy.Integer(0)
    for bits in itertools.product((0, 1), repeat=len(names)):
        env = dict(zip(names, bits))
        if oracle_eval(f, env):
            term = sympy.Integer(1)
            for n, b in env.items():
                term *= syms[n] if b else 1 - syms[n]
            expr += term
    poly = sympy.Poly(sympy.expand(expr), *[syms[n] for n in names]) if names else None
    out = {}
    if poly is None:
        return {frozenset(): Fraction(1)} if expr != 0 else {}
    for exps, coeff in poly.terms():
        if coeff != 0:
            mono = frozenset(n for n, e in zip(names, exps) if e)
            out[mono] = Fraction(int(coeff.p), int(coeff.q))
    return out


def formulas(depth=6, names=VARS):
    leaf = st.sampled_from(names).map(Var)
    strat = leaf
    for _ in range(depth):
        sub = strat
        strat = st.one_of(
            leaf,
            sub.map(Not),
            st.builds(Bin, st.sampled_from(BINARY_OPS), sub, sub),
        )
    return strat


weights01 = st.fractions(min_value=0, max_value=1, max_denominator=1000)


def weight_maps(names=VARS):
    return st.fixed_dictionaries({n: weights01 for n in names})


def random_formula(rng: random.Random, depth=6, names=VARS):
    """Seeded generator used by the acceptance corpus."""
    if depth == 0 or rng.random() < 0.25:
        return Var(rng.choice(names))
    if rng.random() < 0.2:
        return Not(random_formula(rng, depth - 1, names))
    return Bin(rng.choice(BINARY_OPS), random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names))


def random_weights(rng: random.Random, names=VARS):
    return {n: Fraction(rng.randint(0, 1000), 1000) for n in names}
