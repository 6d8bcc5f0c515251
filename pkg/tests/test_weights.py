from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cflogic import (
    BINARY_OPS,
    LAWS,
    Bin,
    MissingVariableError,
    MultilinearPoly,
    Not,
    Op,
    TooManyVariablesError,
    Var,
    WeightRangeError,
    classify_cfl,
    connective_weight,
    eval_bl,
    format_weight,
    is_cfl_contradiction,
    is_cfl_law,
    is_contradiction_bl,
    is_tautology_bl,
    law_product_identity,
    multilinear_of,
    parse_formula,
    parse_weight,
    poly_eval,
    sop_addends,
    variables_of,
    weight_sop,
    zadeh_weight,
)
from cflogic.weights import format_decimal
from helpers import formulas, oracle_sop, sympy_terms, weight_maps, weights01


def sop(text, **w):
    return weight_sop(parse_formula(text), w)


class TestParseWeight:
    @pytest.mark.parametrize("raw, value", [
        ("0.8", F(4, 5)),
        ("4/5", F(4, 5)),
        (" 1 ", F(1)),
        (0, F(0)),
        (True, F(1)),
        (0.1, F(1, 10)),
        (F(1, 3), F(1, 3)),
    ])
    def test_accepts(self, raw, value):
        assert parse_weight(raw) == value

    @pytest.mark.parametrize("raw", ["1.2", "-0.1", "3/2", -1])
    def test_out_of_range(self, raw):
        with pytest.raises(WeightRangeError):
            parse_weight(raw)

    @pytest.mark.parametrize("raw", ["abc", "", "0.8.1"])
    def test_malformed(self, raw):
        with pytest.raises(ValueError):
            parse_weight(raw)


class TestFormatting:
    @pytest.mark.parametrize("x, text", [
        (F(23, 25), "23/25 = 0.92"),
        (F(0), "0"),
        (F(1), "1"),
        (F(1, 3), "1/3"),
        (F(1, 8), "1/8 = 0.125"),
    ])
    def test_format_weight(self, x, text):
        assert format_weight(x) == text

    def test_format_decimal_negative(self):
        assert format_decimal(F(-1, 20)) == "-0.05"
        assert format_decimal(F(1, 7)) is None


class TestWeightSOP:
    def test_or(self):
        assert sop("q1 | q2", q1="0.8", q2="0.6") == F(92, 100)

    def test_and(self):
        assert sop("q1 & q2", q1="0.8", q2="0.6") == F(48, 100)

    def test_excluded_middle(self):
        assert sop("q1 | !q1", q1="0.3") == 1

    def test_missing_binding(self):
        with pytest.raises(MissingVariableError):
            sop("q1 | q2", q1="0.8")

    def test_out_of_range_binding(self):
        with pytest.raises(WeightRangeError):
            sop("q1", q1="1.5")

    def test_extra_bindings_ignored(self):
        assert sop("q1", q1="0.25", q9="1") == F(1, 4)

    def test_addends_layout(self):
        names, rows = sop_addends(parse_formula("q1 | q2"), {"q1": "0.8", "q2": "0.6"})
        assert names == ("q1", "q2")
        assert [r.symbol for r in rows] == ["0", "w(!q1)*w(q2)", "w(q1)*w(!q2)", "w(q1)*w(q2)"]
        assert [r.weight for r in rows] == [0, F("0.12"), F("0.32"), F("0.48")]
        assert sum(r.weight for r in rows) == F("0.92")

    def test_addends_without_weights(self):
        _, rows = sop_addends(parse_formula("q1 & q2"))
        assert [r.weight for r in rows] == [None] * 4


class TestClosedForms:
    @pytest.mark.parametrize("op, a, b, value", [
        (Op.IMP, "0.4", "0.6", "0.84"),
        (Op.NOR, "0.4", "0.6", "0.24"),
        (Op.NAND, "0.4", "0.6", "0.76"),
        (Op.XOR, "0", "0", "0"),
        (Op.CONV, "0.4", "0.6", "0.64"),
        (Op.IFF, "0.4", "0.6", "0.48"),
        (Op.OR, "0.4", "0.6", "0.76"),
        (Op.AND, "0.4", "0.6", "0.24"),
    ])
    def test_values(self, op, a, b, value):
        assert connective_weight(op, a, b) == F(value)

    def test_not(self):
        assert connective_weight(Op.NOT, "0.4") == F(3, 5)

    def test_arity_checked(self):
        with pytest.raises(TypeError):
            connective_weight(Op.AND, "0.4")
        with pytest.raises(TypeError):
            connective_weight(Op.NOT, "0.4", "0.5")

    @given(st.sampled_from(BINARY_OPS), weights01, weights01)
    def test_matches_sop_on_fresh_variables(self, op, a, b):
        f = Bin(op, Var("p"), Var("q"))
        assert connective_weight(op, a, b) == weight_sop(f, {"p": a, "q": b})


class TestZadeh:
    def test_or_is_max(self):
        assert zadeh_weight(Op.OR, "0.8", "0.6") == F("0.8")

    def test_and_is_min(self):
        assert zadeh_weight(Op.AND, "0.8", "0.6") == F("0.6")

    def test_or_zero(self):
        assert zadeh_weight(Op.OR, 0, 0) == 0

    def test_other_ops_rejected(self):
        with pytest.raises(ValueError):
            zadeh_weight(Op.XOR, "0.1", "0.2")


class TestMultilinear:
    def test_or_terms(self):
        p = multilinear_of(parse_formula("q1 | q2"))
        assert dict(p.terms) == {frozenset({"q1"}): 1, frozenset({"q2"}): 1, frozenset({"q1", "q2"}): -1}

    def test_xor_terms(self):
        p = multilinear_of(parse_formula("q1 ^ q2"))
        assert dict(p.terms) == {frozenset({"q1"}): 1, frozenset({"q2"}): 1, frozenset({"q1", "q2"}): -2}

    def test_contradiction_is_zero(self):
        assert multilinear_of(parse_formula("q1 & !q1")).is_constant(0)

    def test_rendering(self):
        p = multilinear_of(parse_formula("q1 | q2"))
        assert p.format() == "q1 + q2 - q1*q2"
        assert p.format(explicit_coefficients=True) == "1*q1 + 1*q2 - 1*q1*q2"
        assert str(multilinear_of(parse_formula("q2 -> q10"))) == "1 - q2 + q2*q10"

    def test_eval(self):
        p = multilinear_of(parse_formula("q1 | q2"))
        assert poly_eval(p, {"q1": "0.8", "q2": "0.6"}) == F("0.92")
        assert poly_eval(multilinear_of(parse_formula("q1 | !q1")), {}) == 1

    def test_xor_at_half(self):
        # frozen from oracle_sop over the four rows
        assert poly_eval(multilinear_of(parse_formula("q1 ^ q2")), {"q1": F(1, 2), "q2": F(1, 2)}) == F(1, 2)

    def test_eval_missing_variable(self):
        with pytest.raises(MissingVariableError):
            poly_eval(multilinear_of(parse_formula("q1 & q2")), {"q1": 1})

    def test_ring_reduces_squares(self):
        x = MultilinearPoly.variable("x")
        assert x * x == x
        assert (1 - x) * x == MultilinearPoly.constant(0)

    def test_symbolic_cap(self):
        f = Var("v0")
        for i in range(1, 17):
            f = Bin(Op.OR, f, Var(f"v{i}"))
        with pytest.raises(TooManyVariablesError):
            multilinear_of(f)


class TestLaws:
    @pytest.mark.parametrize("name", sorted(LAWS))
    def test_registry_law(self, name):
        f = LAWS[name]
        assert is_cfl_law(f)
        assert is_cfl_contradiction(Not(f))

    def test_transitivity(self):
        assert is_cfl_law(parse_formula("((q1 -> q2) & (q2 -> q3)) -> (q1 -> q3)"))

    def test_xor_biconditional(self):
        assert is_cfl_law(parse_formula("!(q1 ^ q2) <-> (q1 <-> q2)"))

    def test_variable_is_not_a_law(self):
        assert classify_cfl(Var("q1")) == "contingent"

    @pytest.mark.parametrize("n, w", [(1, ["0.3"]), (3, ["0.1", "0.5", "0.9"]), (2, [0, 1])])
    def test_product_identity(self, n, w):
        assert law_product_identity(n, w) == 1

    def test_product_identity_arity(self):
        with pytest.raises(ValueError):
            law_product_identity(2, ["0.5"])
        with pytest.raises(ValueError):
            law_product_identity(0, [])


class TestProperties:
    @settings(max_examples=300)
    @given(formulas(depth=6), weight_maps())
    def test_sop_matches_oracle_and_polynomial(self, f, w):
        value = weight_sop(f, w)
        assert value == oracle_sop(f, w)
        assert poly_eval(multilinear_of(f), w) == value

    @settings(max_examples=60, deadline=None)
    @given(formulas(depth=4))
    def test_polynomial_matches_sympy(self, f):
        assert dict(multilinear_of(f).terms) == sympy_terms(f)

    @given(formulas(depth=5), st.fixed_dictionaries({n: st.sampled_from((0, 1)) for n in ("q1", "q2", "q3", "q4")}))
    def test_crisp_weights_reduce_to_bl(self, f, bits):
        assert weight_sop(f, bits) == eval_bl(f, bits)

    @settings(max_examples=200)
    @given(formulas(depth=5))
    def test_law_iff_tautology(self, f):
        assert is_cfl_law(f) == is_tautology_bl(f)
        assert is_cfl_contradiction(f) == is_contradiction_bl(f)

    @given(formulas(depth=5), weight_maps())
    def test_complement_law(self, f, w):
        assert weight_sop(Not(f), w) == 1 - weight_sop(f, w)

    @given(weights01)
    def test_shared_variable_sentinel(self, w):
        q = Var("q")
        assert weight_sop(Bin(Op.AND, q, q), {"q": w}) == w
        assert weight_sop(Bin(Op.AND, q, Not(q)), {"q": w}) == 0
        assert weight_sop(Bin(Op.OR, q, Not(q)), {"q": w}) == 1

    @given(formulas(depth=5), weight_maps())
    def test_weight_in_unit_interval(self, f, w):
        assert 0 <= weight_sop(f, w) <= 1

    @given(st.lists(weights01, min_size=1, max_size=10))
    def test_product_identity_is_one(self, ws):
        assert law_product_identity(len(ws), ws) == 1

    @settings(max_examples=100)
    @given(st.sampled_from(sorted(LAWS)), weight_maps(("q1", "q2", "q3")))
    def test_laws_weigh_one(self, name, w):
        assert weight_sop(LAWS[name], w) == 1
        assert set(variables_of(LAWS[name])) <= set(w)
