import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propkit.errors import TooManyVariables
from propkit.formula import BOT, Conj, Disj, Impl, Var, neg, parse
from propkit.semantics import (
    evaluate,
    find_countermodel,
    format_valuation,
    is_valid,
    models,
    parse_valuation,
    satisfies,
    sequent_countermodel,
    sequent_models,
    truth_table,
    valuations,
)

import oracle
from strategies import contexts, formulas

p, q = Var("p"), Var("q")


def test_eval_examples():
    assert evaluate({}, BOT) is False
    assert evaluate({"p": True}, BOT) is False
    assert evaluate({"p": False}, Impl(p, BOT)) is True
    assert evaluate({"p": False, "q": True}, Conj(Disj(p, q), Impl(p, BOT))) is True


def test_missing_names_default_to_false():
    assert evaluate({}, p) is False
    assert evaluate({}, neg(p)) is True


def test_satisfies():
    assert satisfies({}, [])
    assert satisfies({"p": True}, [p, p])
    assert not satisfies({"p": True, "q": False}, [p, q])


def test_models_examples():
    assert models([], Disj(p, neg(p)))
    assert find_countermodel([], p) == {"p": False}
    assert models([p], Disj(p, q))


def test_sequent_models_examples():
    assert sequent_models([p], [p])
    assert sequent_countermodel([], []) == {}
    assert sequent_models([BOT], [])


def test_first_countervaluation_in_counting_order():
    # rows run p=F q=F, p=F q=T, p=T q=F, ...; the first falsifying row wins
    assert find_countermodel([], parse("p -> q")) == {"p": True, "q": False}
    assert find_countermodel([], parse("q | p")) == {"q": False, "p": False}
    assert find_countermodel([parse("q")], parse("p")) == {"q": True, "p": False}


def test_truth_table_order():
    names, rows = truth_table(parse("q -> p"))
    assert names == ("q", "p")
    assert [tuple(v.values()) + (b,) for v, b in rows] == [
        (False, False, True),
        (False, True, True),
        (True, False, False),
        (True, True, True),
    ]


def test_enumeration_cap():
    with pytest.raises(TooManyVariables):
        list(valuations([f"x{i}" for i in range(5)], cap=4))


def test_valuation_text():
    v = {"q": False, "p": True}
    assert format_valuation(v) == "p=true,q=false"
    assert parse_valuation("p=true, q = FALSE") == {"p": True, "q": False}
    assert parse_valuation("") == {}
    with pytest.raises(ValueError):
        parse_valuation("p=yes")


@settings(max_examples=300)
@given(contexts, formulas())
def test_models_agrees_with_oracle(ctx, f):
    assert models(ctx, f) == oracle.entails(ctx, f)


@settings(max_examples=200)
@given(st.lists(formulas(6), max_size=3), st.lists(formulas(6), max_size=3))
def test_sequent_countermodel_is_a_countermodel(gamma, delta):
    v = sequent_countermodel(gamma, delta)
    assert (v is None) == oracle.sequent_holds(gamma, delta)
    if v is not None:
        assert all(evaluate(v, a) for a in gamma)
        assert not any(evaluate(v, a) for a in delta)


@given(formulas())
def test_is_valid_matches_oracle(f):
    assert is_valid(f) == oracle.valid(f)
