import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cflogic import (
    LAWS,
    Bin,
    Var,
    DuplicateElementError,
    MissingVariableError,
    NotCrispError,
    Op,
    UniverseMismatchError,
    UnknownElementError,
    UnknownSetError,
    apply_connective_set,
    bi_implication,
    complement_set,
    connective_weight,
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
from cflogic.formula import BINARY_OPS
from cflogic.worked import CHESS_SETS
from helpers import weights01

U5 = make_universe(["x1", "x2", "x3", "x4", "x5"])
C1 = define_fuzzy_set(U5, "C1", {"x2": 1, "x5": "0.4"})
C2 = define_fuzzy_set(U5, "C2", {"x1": "0.9", "x2": "0.8", "x3": "0.7", "x5": "0.6"})
SETS = {"C1": C1, "C2": C2}


def vec(*values):
    return tuple(F(v) for v in values)


def fuzzy_sets(universe, name):
    return st.lists(weights01, min_size=len(universe), max_size=len(universe)).map(
        lambda ws: define_fuzzy_set(universe, name, dict(zip(universe.elements, ws))))


class TestUniverse:
    def test_universal_and_empty(self):
        assert universal_set(U5).weights == vec(1, 1, 1, 1, 1)
        assert empty_set(U5).weights == vec(0, 0, 0, 0, 0)

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateElementError):
            make_universe(["a", "b", "a"])

    def test_empty_universe_rejected(self):
        with pytest.raises(ValueError):
            make_universe([])


class TestDefine:
    def test_chess_sets(self):
        assert C1.weights == vec(0, 1, 0, 0, "0.4")
        assert C2.weights == vec("0.9", "0.8", "0.7", 0, "0.6")

    def test_unknown_element(self):
        with pytest.raises(UnknownElementError):
            define_fuzzy_set(U5, "B", {"x9": "0.5"})

    def test_lookup(self):
        assert C1["x5"] == F(2, 5)
        with pytest.raises(UnknownElementError):
            C1["y"]

    def test_name_not_part_of_equality(self):
        assert C1.renamed("other") == C1


class TestComplement:
    def test_C1(self):
        assert complement_set(C1).weights == vec(1, 0, 1, 1, "0.6")

    def test_C2(self):
        assert complement_set(C2).weights == vec("0.1", "0.2", "0.3", 1, "0.4")

    def test_universal_to_empty(self):
        assert complement_set(universal_set(U5)) == empty_set(U5)
        assert complement_set(empty_set(U5)) == universal_set(U5)


class TestOperations:
    @pytest.mark.parametrize("fn, expected", [
        (union, vec("0.9", 1, "0.7", 0, "0.76")),
        (intersection, vec(0, "0.8", 0, 0, "0.24")),
        (exclusive_union, vec("0.9", "0.2", "0.7", 0, "0.52")),
        (implication, vec(1, "0.8", 1, 1, "0.84")),
        (converse_implication, vec("0.1", 1, "0.3", 1, "0.64")),
        (bi_implication, vec("0.1", "0.8", "0.3", 1, "0.48")),
        (nand_set, vec(1, "0.2", 1, 1, "0.76")),
        (nor_set, vec("0.1", 0, "0.3", 1, "0.24")),
    ])
    def test_chess_vectors(self, fn, expected):
        assert fn(C1, C2).weights == expected

    def test_result_name(self):
        assert union(C1, C2).name == "(C1 | C2)"
        assert complement_set(C1).name == "!C1"

    def test_universe_mismatch(self):
        other = define_fuzzy_set(make_universe(["a"]), "B")
        with pytest.raises(UniverseMismatchError):
            union(C1, other)

    def test_not_rejected(self):
        with pytest.raises(ValueError):
            apply_connective_set(Op.NOT, C1, C2)


class TestExpressions:
    def test_union(self):
        assert eval_set_expression("C1 | C2", SETS).weights == union(C1, C2).weights

    def test_converse_expression(self):
        assert eval_set_expression("C2 -> C1", SETS).weights == converse_implication(C1, C2).weights

    def test_excluded_middle_universal(self):
        assert is_universal_set(eval_set_expression("C1 | !C1", SETS))

    def test_non_contradiction_empty(self):
        assert is_empty_set(eval_set_expression("C2 & !C2", SETS))

    def test_modus_ponens_universal(self):
        assert is_universal_set(eval_set_expression("((C1 -> C2) & C1) -> C2", SETS))

    def test_unknown_set(self):
        with pytest.raises(UnknownSetError):
            eval_set_expression("C1 | C3", SETS)

    def test_predicates(self):
        u = universal_set(U5)
        assert (is_universal_set(u), is_empty_set(u)) == (True, False)
        assert (is_universal_set(C1), is_empty_set(C1)) == (False, False)
        assert (is_universal_set(complement_set(u)), is_empty_set(complement_set(u))) == (False, True)


class TestSetLaws:
    def test_de_morgan(self):
        assert verify_set_law("!(v1 & v2) <-> (!v1 | !v2)", {"v1": C1, "v2": C2})

    def test_excluded_middle(self):
        assert verify_set_law("v1 | !v1", {"v1": C2})

    def test_contingent(self):
        assert not verify_set_law("v1", {"v1": C1})

    def test_unmapped_variable(self):
        with pytest.raises(MissingVariableError):
            verify_set_law("v1 | v2", {"v1": C1})


class TestClassical:
    U7 = make_universe([f"x{i}" for i in range(1, 8)])
    A = from_classical(U7, ["x2", "x3", "x5", "x7"])
    B = from_classical(U7, ["x1", "x2", "x4", "x7"])

    def test_union(self):
        assert to_classical(union(self.A, self.B)) == {"x1", "x2", "x3", "x4", "x5", "x7"}

    def test_intersection(self):
        assert to_classical(intersection(self.A, self.B)) == {"x2", "x7"}

    def test_exclusive_union(self):
        assert to_classical(exclusive_union(self.A, self.B)) == {"x1", "x3", "x4", "x5"}

    def test_round_trip(self):
        assert to_classical(self.A) == {"x2", "x3", "x5", "x7"}

    def test_not_crisp(self):
        with pytest.raises(NotCrispError) as info:
            to_classical(C1)
        assert info.value.element == "x5"

    def test_unknown_member(self):
        with pytest.raises(UnknownElementError):
            from_classical(self.U7, ["x8"])


class TestFiles:
    def test_json_round_trip(self, tmp_path):
        path = tmp_path / "sets.json"
        path.write_text(json.dumps(CHESS_SETS))
        u, sets = load_set_file(path)
        assert u == U5
        assert sets == SETS

    def test_sets_from_json_missing_sets(self):
        u, sets = sets_from_json({"universe": ["a", "b"]})
        assert len(u) == 2 and sets == {}


class TestProperties:
    @given(fuzzy_sets(U5, "A"), fuzzy_sets(U5, "B"), st.sampled_from(BINARY_OPS))
    def test_elementwise_reduction(self, a, b, op):
        res = apply_connective_set(op, a, b)
        for e in U5:
            assert res[e] == connective_weight(op, a[e], b[e])

    @given(fuzzy_sets(U5, "A"), fuzzy_sets(U5, "B"))
    def test_de_morgan_duality(self, a, b):
        assert complement_set(union(a, b)).weights == intersection(complement_set(a), complement_set(b)).weights

    @given(fuzzy_sets(U5, "A"))
    def test_involution(self, a):
        assert complement_set(complement_set(a)).weights == a.weights

    @settings(max_examples=100)
    @given(st.sampled_from(sorted(LAWS)), fuzzy_sets(U5, "A"), fuzzy_sets(U5, "B"), fuzzy_sets(U5, "C"))
    def test_law_lifting(self, name, a, b, c):
        assert verify_set_law(LAWS[name], {"q1": a, "q2": b, "q3": c})

    @given(st.sets(st.sampled_from(U5.elements)), st.sets(st.sampled_from(U5.elements)), st.sampled_from(BINARY_OPS))
    def test_crisp_closure(self, ma, mb, op):
        a, b = from_classical(U5, ma), from_classical(U5, mb)
        res = apply_connective_set(op, a, b)
        assert res.is_crisp
        for e in U5:
            assert res[e] == connective_weight(op, int(e in ma), int(e in mb))

    @given(fuzzy_sets(U5, "C1"), fuzzy_sets(U5, "C2"), st.sampled_from(BINARY_OPS))
    def test_expression_matches_fold_for_distinct_sets(self, a, b, op):
        expr = Bin(op, Var("C1"), Var("C2"))
        assert eval_set_expression(expr, {"C1": a, "C2": b}).weights == apply_connective_set(op, a, b).weights
