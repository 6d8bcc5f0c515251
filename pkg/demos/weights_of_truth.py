"""
Weights of truth for compound propositions
==========================================

Each proposition carries a weight in [0, 1].  The weight of a compound
formula is found by walking its truth table: every row where the formula is
true contributes the product of its literal weights.
"""

from fractions import Fraction

from cflogic import Op, connective_weight, parse_formula, sop_addends, weight_sop, zadeh_weight

# Decimal strings are read exactly, so 0.8 is the rational 4/5.
weights = {"q1": "0.8", "q2": "0.6"}

disjunction = parse_formula("q1 | q2")
print(disjunction, "=", weight_sop(disjunction, weights))

# The addends behind that number, one per true row.
names, rows = sop_addends(disjunction, weights)
for row in rows:
    if row.value:
        print("  ", row.symbol, "=", row.weight)

# For independent operands the sum collapses to a closed form.
print("closed form a + b - ab:", connective_weight(Op.OR, "0.8", "0.6"))

# The max/min rule gives a different answer for the same inputs.
print("max rule:", zadeh_weight(Op.OR, "0.8", "0.6"))
print("min rule:", zadeh_weight(Op.AND, "0.8", "0.6"))

# Closed forms only hold for independent operands.  With a shared variable
# the row walk is the authority: q & q weighs q, and q & !q weighs nothing.
w = Fraction(3, 10)
print("q & q  ->", weight_sop(parse_formula("q & q"), {"q": w}), f"(naive product gives {w * w})")
print("q & !q ->", weight_sop(parse_formula("q & !q"), {"q": w}))
