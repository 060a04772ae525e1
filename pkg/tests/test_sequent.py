import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propkit.errors import BadArity, BadIndex, PreconditionViolated, RuleMismatch, UnknownRule
from propkit.formula import BOT, Conj, Disj, Impl, Var, neg, parse
from propkit.natded import check_nc, imp_e, imp_i, nax
from propkit.normalforms import complete
from propkit.semantics import sequent_models
from propkit.sequent import (
    GcDerivation,
    and_l,
    and_r,
    big_or,
    check_gc,
    cut,
    g_to_nc,
    g_to_nc_neg,
    gax,
    gbot,
    gc_weaken,
    gc_weaken_to,
    imp_l,
    imp_r,
    nc_to_g,
    neg_list,
    or_l,
    or_r,
)

from strategies import formulas, gc_derivations, nc_derivations

p, q, r = Var("p"), Var("q"), Var("r")


def test_axioms():
    pq = Impl(p, q)
    assert check_gc(gax([pq], [pq], 0, 0)) == ((pq,), (pq,))
    assert check_gc(gbot([p, BOT], [], 1)) == ((p, BOT), ())


def test_and_r_with_disagreeing_premises_is_rejected():
    left = gax([p, q], [p], 0, 0)
    right = gax([p, q], [q, r], 1, 0)
    bad = GcDerivation("AndR", (p, q), (Conj(p, q),), (left, right), (0,))
    with pytest.raises(RuleMismatch) as e:
        check_gc(bad)
    assert "premise 1" in str(e.value)


@pytest.mark.parametrize(
    "d, err",
    [
        (GcDerivation("Gax", (p,), (q,), (), (0, 0)), RuleMismatch),
        (GcDerivation("Gax", (p,), (p,), (), (0, 1)), BadIndex),
        (GcDerivation("GBot", (p,), (), (), (0,)), RuleMismatch),
        (GcDerivation("Weird", (p,), (p,)), UnknownRule),
        (GcDerivation("Cut", (p,), (p,), (), (), (p,)), BadArity),
        (GcDerivation("AndL", (p,), (p,), (gax([p], [p], 0, 0),), (0,)), RuleMismatch),
    ],
)
def test_checker_errors(d, err):
    with pytest.raises(err):
        check_gc(d)


def test_split_index_disambiguates_repeats():
    pq = Conj(p, q)
    prem = gax([pq, p, q], [p], 1, 0)
    assert check_gc(and_l(prem, 1)) == ((pq, pq), (p,))
    wrong = GcDerivation("AndL", (pq, pq), (p,), (prem,), (0,))
    with pytest.raises(RuleMismatch):
        check_gc(wrong)


def test_builders_cover_every_rule():
    ax_q = gax([p, q], [q, r], 1, 0)  # p, q => q, r
    ax_p = gax([p], [p, q, r], 0, 0)  # p => p, q, r
    d = imp_l(ax_q, ax_p, 1)  # p, p -> q => q, r
    d = or_r(and_l(d, 0), 0)
    assert check_gc(d) == ((Conj(p, Impl(p, q)),), (Disj(q, r),))
    c = cut(gax([p], [p, p], 0, 0), gax([p, p], [p], 0, 0))
    assert check_gc(c) == ((p,), (p,))
    o = or_l(gax([p], [p], 0, 0), gbot([BOT], [p], 0), 0)
    assert check_gc(o) == ((Disj(p, BOT),), (p,))
    i = imp_r(gax([p, q], [p], 0, 0), 0)
    assert check_gc(i) == ((q,), (Impl(p, p),))
    a = and_r(gax([p], [p], 0, 0), gax([p], [p], 0, 0), 0)
    assert check_gc(a) == ((p,), (Conj(p, p),))


def test_weaken_examples():
    d = gax([p], [p], 0, 0)
    w = gc_weaken(d, "left", 0, q)
    assert check_gc(w) == ((q, p), (p,))
    w = gc_weaken(d, "right", 1, r)
    assert check_gc(w) == ((p,), (p, r))
    assert w.pos == (0, 0)
    with pytest.raises(PreconditionViolated):
        gc_weaken(d, "up", 0, q)
    with pytest.raises(PreconditionViolated):
        gc_weaken(d, "left", 5, q)


@settings(max_examples=200, deadline=None)
@given(gc_derivations, st.booleans(), st.integers(0, 20), formulas(4))
def test_weaken_random_insertion(d, left, raw_pos, a):
    side = d.gamma if left else d.delta
    pos = raw_pos % (len(side) + 1)
    w = gc_weaken(d, "left" if left else "right", pos, a)
    if left:
        assert check_gc(w) == (d.gamma[:pos] + (a,) + d.gamma[pos:], d.delta)
    else:
        assert check_gc(w) == (d.gamma, d.delta[:pos] + (a,) + d.delta[pos:])


def test_weaken_to():
    d = gax([p], [p], 0, 0)
    w = gc_weaken_to(d, [q, p, q], [r, p])
    assert check_gc(w) == ((q, p, q), (r, p))
    with pytest.raises(PreconditionViolated):
        gc_weaken_to(d, [q], [p])


def test_big_or_and_neg_list():
    assert big_or([]) == BOT
    assert big_or([p]) == Disj(p, BOT)
    assert big_or([p, q]) == Disj(p, Disj(q, BOT))
    assert neg_list([]) == ()
    assert neg_list([p]) == (Impl(p, BOT),)
    assert neg_list([BOT, q]) == (neg(BOT), neg(q))


def test_g_to_nc_neg_examples():
    d = g_to_nc_neg(gax([p], [p], 0, 0))
    assert check_nc(d) == ((p, neg(p)), BOT)
    assert d.rule == "ImpE"
    d = g_to_nc_neg(gbot([BOT], [], 0))
    assert d.rule == "Nax" and check_nc(d) == ((BOT,), BOT)
    c = cut(gax([p], [p, p], 0, 0), gax([p, p], [p], 0, 0))
    assert check_nc(g_to_nc_neg(c)) == ((p, neg(p)), BOT)


def test_g_to_nc_examples():
    assert check_nc(g_to_nc(gax([p], [p], 0, 0))) == ((p,), Disj(p, BOT))
    assert check_nc(g_to_nc(gbot([BOT], [], 0))) == ((BOT,), BOT)


@settings(max_examples=150, deadline=None)
@given(gc_derivations)
def test_g_to_nc_random(d):
    assert sequent_models(d.gamma, d.delta)
    assert check_nc(g_to_nc(d)) == (d.gamma, big_or(d.delta))
    assert check_nc(g_to_nc_neg(d)) == (d.gamma + neg_list(d.delta), BOT)


def test_nc_to_g_examples():
    leaf = nc_to_g(nax([q, p], 1))
    assert leaf.rule == "Gax" and leaf.pos == (1, 0)
    d = nc_to_g(imp_i(p, nax([p], 0)))
    assert d.rule == "ImpR" and check_gc(d) == ((), (Impl(p, p),))
    ctx = (Impl(p, q), p)
    d = nc_to_g(imp_e(nax(ctx, 0), nax(ctx, 1)))
    assert d.rule == "Cut" and d.aux == (Impl(p, q),)
    assert check_gc(d) == (ctx, (q,))


@settings(max_examples=150, deadline=None)
@given(nc_derivations)
def test_nc_to_g_random(d):
    assert check_gc(nc_to_g(d)) == (d.context, (d.formula,))


def test_completeness_proof_translates():
    f = parse("((p -> q) -> p) -> p")
    g = nc_to_g(complete(f))
    assert check_gc(g) == ((), (f,))
