"""
Laws have weight one
====================

The weight of a formula is a multilinear polynomial in its variables' weights.
A formula is a law of the weighted calculus exactly when that polynomial is
the constant 1, which happens exactly when it is a classical tautology.
"""

from cflogic import LAWS, classify_cfl, law_product_identity, multilinear_of, parse_formula

for name, formula in LAWS.items():
    print(f"{name:30s} {str(formula):45s} w = {multilinear_of(formula)}")

# Contingent formulas keep their variables.
for text in ["q1 | q2", "q1 ^ q2", "q1 -> q2", "(q1 & q2) | q3"]:
    f = parse_formula(text)
    print(f"{text:18s} {classify_cfl(f):12s} w = {multilinear_of(f)}")

# Why laws weigh one: summing every row of a truth table multiplies out
# to a product of (1 - w) + w factors.
print("product identity:", law_product_identity(4, ["0.1", "0.25", "1/3", "0.9"]))
