"""
Fuzzy sets of chess pieces
==========================

Five pieces x1..x5 belong to two sets with various weights.  Every set
operation works element by element through the matching connective.
"""

from cflogic import (
    eval_set_expression,
    from_classical,
    is_universal_set,
    make_universe,
    sets_from_json,
    to_classical,
    union,
)
from cflogic.weights import format_weight
from cflogic.worked import CHESS_SETS

universe, sets = sets_from_json(CHESS_SETS)

for expr in ["C1", "C2", "!C1", "C1 | C2", "C1 & C2", "C1 ^ C2", "C1 -> C2", "C2 -> C1", "C1 <-> C2"]:
    result = eval_set_expression(expr, sets)
    print(f"{expr:10s}", "  ".join(f"{format_weight(w):>12s}" for w in result.weights))

# A set united with its complement is the whole universe, even for fuzzy sets.
print("C1 | !C1 universal:", is_universal_set(eval_set_expression("C1 | !C1", sets)))

# Crisp sets behave as classical ones.
u7 = make_universe(f"x{i}" for i in range(1, 8))
a = from_classical(u7, ["x2", "x3", "x5", "x7"])
b = from_classical(u7, ["x1", "x2", "x4", "x7"])
print("classical union:", sorted(to_classical(union(a, b))))
