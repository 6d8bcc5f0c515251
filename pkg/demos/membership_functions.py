"""
Membership functions on an interval
===================================

On a continuous universe each set is a piecewise polynomial membership
function.  Connectives combine them segment by segment, so the result is
again piecewise polynomial and can be written down exactly.
"""

from cflogic import Op, format_segments, functions_from_json, pw_combine, pw_eval_expression, pw_sample
from cflogic.piecewise import sample_csv
from cflogic.worked import PIECEWISE_FUNCTIONS

fns = functions_from_json(PIECEWISE_FUNCTIONS)
triangle, step = fns["C1"], fns["C2"]

for op in (Op.OR, Op.AND, Op.XOR):
    result = pw_combine(op, triangle, step)
    print(result.name)
    for line in format_segments(result):
        print("   ", line)

# Multiplying two linear pieces gives a quadratic one.
print("C1 & C1 as independent operands:", format_segments(pw_combine(Op.AND, triangle, triangle))[0])
# As a single proposition used twice it is just C1 again.
print("C1 & C1 as one expression:      ", format_segments(pw_eval_expression("C1 & C1", fns))[0])

# Samples for plotting.
print(sample_csv(pw_sample(pw_combine(Op.OR, triangle, step), 11)), end="")
