"""Exact weights of truth for propositional formulas, fuzzy sets and
piecewise membership functions.

A formula's weight is the sum, over the truth-table rows where it is true,
of the product of its literal weights.  Every number is a
``fractions.Fraction``; decimal strings such as ``"0.8"`` are read exactly.

>>> from cflogic import parse_formula, weight_sop
>>> weight_sop(parse_formula("q1 | q2"), {"q1": "0.8", "q2": "0.6"})
Fraction(23, 25)
"""

from .errors import (
    CFLError,
    DomainMismatchError,
    DuplicateElementError,
    MissingVariableError,
    NotCrispError,
    OutOfDomainError,
    ParseError,
    RangeViolationError,
    SegmentError,
    TooManyVariablesError,
    UniverseMismatchError,
    UnknownElementError,
    UnknownSetError,
    WeightRangeError,
)
from .formula import (
    BINARY_OPS,
    Bin,
    Formula,
    Not,
    Op,
    TruthTable,
    Var,
    classify_bl,
    eval_bl,
    format_formula,
    is_contradiction_bl,
    is_tautology_bl,
    natural_key,
    parse_formula,
    truth_column,
    truth_table,
    variables_of,
)
from .fuzzysets import (
    FuzzySet,
    SetExpression,
    Universe,
    apply_connective_set,
    bi_implication,
    complement_set,
    converse_implication,
    define_fuzzy_set,
    empty_set,
    eval_set_expression,
    exclusive_union,
    from_classical,
    implication,
    intersection,
    is_empty_set,
    is_universal_set,
    load_set_file,
    make_universe,
    nand_set,
    nor_set,
    sets_from_json,
    to_classical,
    union,
    universal_set,
    verify_set_law,
)
from .piecewise import (
    PiecewiseFn,
    PolySegment,
    RangeViolation,
    format_segments,
    functions_from_json,
    load_pw_file,
    pw_combine,
    pw_complement,
    pw_constant,
    pw_eval,
    pw_eval_expression,
    pw_from_segments,
    pw_range_check,
    pw_sample,
)
from .upoly import Poly
from .weights import (
    LAWS,
    MultilinearPoly,
    classify_cfl,
    closed_form,
    connective_weight,
    format_weight,
    is_cfl_contradiction,
    is_cfl_law,
    law_product_identity,
    multilinear_of,
    parse_weight,
    poly_eval,
    sop_addends,
    weight_sop,
    zadeh_weight,
)

__version__ = "0.1.0"
