import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from godelforest import (
    And,
    Bot,
    Iff,
    Implies,
    Lhd,
    Not,
    Or,
    ParseError,
    Top,
    Var,
    arity,
    eval_formula,
    expand_derived,
    format_formula,
    parse_formula,
)
from helpers import random_formula


def test_parse_examples():
    assert parse_formula("~(X1 & X3)") == Not(And(Var(1), Var(3)))
    assert parse_formula("X1 <| X2") == Lhd(Var(1), Var(2))
    assert parse_formula("X1 -> X2 -> X3") == Implies(Var(1), Implies(Var(2), Var(3)))


def test_parse_constants_and_keywords():
    assert parse_formula("0") == Bot()
    assert parse_formula("bot") == Bot()
    assert parse_formula("1") == Top()
    assert parse_formula("top") == Top()
    assert parse_formula("X12") == Var(12)


def test_parse_precedence():
    assert parse_formula("~X1 & X2") == And(Not(Var(1)), Var(2))
    assert parse_formula("X1 & X2 | X3") == Or(And(Var(1), Var(2)), Var(3))
    assert parse_formula("X1 | X2 -> X3") == Implies(Or(Var(1), Var(2)), Var(3))
    assert parse_formula("X1 & X2 & X3") == And(And(Var(1), Var(2)), Var(3))


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_formula("X1 & )")
    assert err.value.pos == 5
    with pytest.raises(ParseError):
        parse_formula("X0")
    with pytest.raises(ParseError):
        parse_formula("X1 &")
    with pytest.raises(ParseError):
        parse_formula("(X1")
    with pytest.raises(ParseError):
        parse_formula("X1 X2")
    with pytest.raises(ParseError):
        parse_formula("foo")
    with pytest.raises(ParseError):
        parse_formula("")


def test_parse_mixed_arrows_need_parens():
    with pytest.raises(ParseError):
        parse_formula("X1 -> X2 <-> X3")
    assert parse_formula("X1 -> (X2 <-> X3)") == Implies(Var(1), Iff(Var(2), Var(3)))
    assert parse_formula("(X1 -> X2) <-> X3") == Iff(Implies(Var(1), Var(2)), Var(3))


def test_var_index_zero_rejected():
    with pytest.raises(ValueError):
        Var(0)


def test_eval_residuum():
    f = parse_formula("X1 -> X2")
    assert eval_formula(f, (Fraction(1, 2), Fraction(1, 3))) == Fraction(1, 3)
    assert eval_formula(f, (Fraction(1, 3), Fraction(1, 2))) == 1


def test_eval_double_negation():
    f = parse_formula("~~X1")
    assert eval_formula(f, (Fraction(1, 4),)) == 1
    assert eval_formula(f, (Fraction(0),)) == 0
    assert eval_formula(f, (Fraction(1),)) == 1


def test_eval_strict_order_connective():
    f = parse_formula("X1 <| X2")
    assert eval_formula(f, (Fraction(1), Fraction(1))) == 1
    assert eval_formula(f, (Fraction(1, 2), Fraction(1, 2))) == Fraction(1, 2)
    assert eval_formula(f, (Fraction(1, 4), Fraction(1, 2))) == 1
    assert eval_formula(f, (Fraction(1, 2), Fraction(1, 4))) == Fraction(1, 4)


def test_eval_min_max_constants():
    a = (Fraction(1, 3), Fraction(2, 3))
    assert eval_formula(parse_formula("X1 & X2"), a) == Fraction(1, 3)
    assert eval_formula(parse_formula("X1 | X2"), a) == Fraction(2, 3)
    assert eval_formula(parse_formula("0"), a) == 0
    assert eval_formula(parse_formula("1"), a) == 1
    assert eval_formula(parse_formula("~X1"), a) == 0


def test_eval_arity_error():
    with pytest.raises(ValueError):
        eval_formula(Var(3), (Fraction(1),))


def test_format_examples():
    assert format_formula(Not(And(Var(1), Var(2)))) == "~(X1 & X2)"
    assert format_formula(And(Var(1), Or(Var(2), Var(3)))) == "X1 & (X2 | X3)"
    assert format_formula(Bot()) == "0"
    assert format_formula(Implies(Var(1), Implies(Var(2), Var(3)))) == "X1 -> X2 -> X3"
    assert format_formula(Implies(Implies(Var(1), Var(2)), Var(3))) == "(X1 -> X2) -> X3"
    assert format_formula(Implies(Var(1), Iff(Var(2), Var(3)))) == "X1 -> (X2 <-> X3)"


def test_roundtrip_random_formulas():
    rng = random.Random(20240811)
    for _ in range(500):
        f = random_formula(rng, 4, 6)
        assert parse_formula(format_formula(f)) == f


@st.composite
def formulas(draw, max_depth=5):
    if max_depth == 0 or draw(st.booleans()):
        choice = draw(st.integers(0, 5))
        if choice == 0:
            return Bot()
        if choice == 1:
            return Top()
        return Var(draw(st.integers(1, 5)))
    kind = draw(st.sampled_from(["not", "and", "or", "implies", "iff", "lhd"]))
    if kind == "not":
        return Not(draw(formulas(max_depth=max_depth - 1)))
    node = {"and": And, "or": Or, "implies": Implies, "iff": Iff, "lhd": Lhd}[kind]
    return node(
        draw(formulas(max_depth=max_depth - 1)),
        draw(formulas(max_depth=max_depth - 1)),
    )


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_roundtrip_property(f):
    assert parse_formula(format_formula(f)) == f


def test_expand_derived_idempotent():
    rng = random.Random(7)
    for _ in range(200):
        f = random_formula(rng, 3, 5)
        once = expand_derived(f)
        assert expand_derived(once) == once


def test_derived_connectives_evaluate_via_expansion():
    rng = random.Random(11)
    pool = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]
    for _ in range(300):
        f = random_formula(rng, 3, 5)
        values = tuple(rng.choice(pool) for _ in range(3))
        assert eval_formula(f, values) == eval_formula(expand_derived(f), values)


def test_eval_never_invents_truth_values():
    rng = random.Random(13)
    pool = [Fraction(k, 7) for k in range(8)]
    for _ in range(300):
        f = random_formula(rng, 3, 5)
        values = tuple(rng.choice(pool) for _ in range(3))
        result = eval_formula(f, values)
        assert result in set(values) | {Fraction(0), Fraction(1)}


def test_arity():
    assert arity(parse_formula("X2 & ~X5")) == 5
    assert arity(Bot()) == 0
    assert arity(parse_formula("X1 <-> X1")) == 1
