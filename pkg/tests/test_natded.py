import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propkit.errors import BadArity, BadIndex, EmbeddingInvalid, RuleMismatch, UnknownRule
from propkit.formula import BOT, TOP, Conj, Disj, Impl, Var, neg
from propkit.natded import (
    NcDerivation,
    and_e1,
    and_e2,
    and_i,
    assume,
    bot_c,
    check_nc,
    discharge,
    ex_falso,
    imp_e,
    imp_i,
    is_nc_proof,
    nax,
    nc_prepend,
    nc_transport,
    nc_weaken,
    or_e,
    or_i1,
    or_i2,
    or_inject,
    prove_top,
)
from propkit.semantics import models

from strategies import nc_derivations

p, q, r = Var("p"), Var("q"), Var("r")


def test_nax_leaf():
    assert check_nc(nax([p], 0)) == ((p,), p)


def test_identity():
    d = imp_i(p, nax([p], 0))
    assert check_nc(d) == ((), Impl(p, p))


def test_botc_with_wrong_premise_context_is_rejected():
    premise = NcDerivation("ImpE", (p,), BOT, (nax([p], 0), nax([p], 0)), aux=(p,))
    d = NcDerivation("BotC", (), p, (premise,))
    with pytest.raises(RuleMismatch) as e:
        check_nc(d)
    assert e.value.path == ()


def test_and_i_of_top():
    d = and_i(prove_top([]), prove_top([]))
    assert check_nc(d) == ((), Conj(TOP, TOP))


def test_or_e_shape():
    ctx = (Disj(p, q),)
    left = or_i2(q, nax((p,) + ctx, 0))
    right = or_i1(nax((q,) + ctx, 0), p)
    d = or_e(nax(ctx, 0), left, right)
    assert check_nc(d) == (ctx, Disj(q, p))
    assert [x.context for x in d.premises] == [ctx, (p,) + ctx, (q,) + ctx]


def test_elimination_builders():
    ctx = (Conj(p, q), Impl(p, r))
    pq = nax(ctx, 0)
    assert check_nc(and_e1(pq))[1] == p
    assert check_nc(and_e2(pq))[1] == q
    assert check_nc(imp_e(nax(ctx, 1), and_e1(pq)))[1] == r


def test_bot_c_double_negation():
    ctx = (neg(neg(p)),)
    body = imp_e(nax((neg(p),) + ctx, 1), nax((neg(p),) + ctx, 0))
    d = imp_i(neg(neg(p)), bot_c(body))
    assert check_nc(d) == ((), Impl(neg(neg(p)), p))


@pytest.mark.parametrize(
    "d, err, path",
    [
        (NcDerivation("Nax", (p,), p, (), 1), BadIndex, ()),
        (NcDerivation("Nax", (p,), q, (), 0), RuleMismatch, ()),
        (NcDerivation("Magic", (), p), UnknownRule, ()),
        (NcDerivation("AndI", (p,), Conj(p, p), (nax([p], 0),)), BadArity, ()),
        (imp_i(p, NcDerivation("Nax", (p,), p, (), 3)), BadIndex, (0,)),
    ],
)
def test_checker_errors(d, err, path):
    with pytest.raises(err) as e:
        check_nc(d)
    assert e.value.path == path
    assert not is_nc_proof(d)


def test_builders_refuse_bad_steps():
    with pytest.raises(RuleMismatch):
        imp_i(q, nax([p], 0))
    with pytest.raises(RuleMismatch):
        imp_e(nax([p], 0), nax([p], 0))
    with pytest.raises(RuleMismatch):
        and_i(nax([p], 0), nax([q], 0))
    with pytest.raises(RuleMismatch):
        bot_c(nax([BOT], 0))
    with pytest.raises(RuleMismatch):
        assume([p], q)


def test_weaken_shifts_index():
    d = nc_weaken(nax([p], 0), [q, p], [1])
    assert check_nc(d) == ((q, p), p)
    assert d.index == 1


def test_weaken_closed_proof():
    d = nc_weaken(imp_i(p, nax([p], 0)), [q], [])
    assert check_nc(d) == ((q,), Impl(p, p))


@pytest.mark.parametrize(
    "source, target, emb",
    [
        ([p], [p, q], [1]),  # formula changes
        ([p, p], [p], [0, 0]),  # not injective
        ([p], [p], [3]),  # out of range
        ([p], [p, q], [0, 1]),  # too many entries
        ([p, q], [p, q], {0: 0}),  # incomplete
    ],
)
def test_weaken_rejects_bad_embeddings(source, target, emb):
    with pytest.raises(EmbeddingInvalid):
        nc_weaken(nax(source, 0), target, emb)


@settings(max_examples=150, deadline=None)
@given(nc_derivations, st.randoms(use_true_random=False))
def test_weaken_random_embedding_keeps_checking(d, rng):
    extra = [Var(f"x{i}") for i in range(rng.randint(0, 3))]
    target = list(d.context) + extra
    rng.shuffle(target)
    used = set()
    emb = []
    for a in d.context:
        j = next(j for j, b in enumerate(target) if b == a and j not in used)
        used.add(j)
        emb.append(j)
    w = nc_weaken(d, target, emb)
    assert check_nc(w) == (tuple(target), d.formula)


def test_weaken_under_or_e():
    ctx = (Disj(p, q),)
    d = or_e(nax(ctx, 0), or_i2(q, nax((p,) + ctx, 0)), or_i1(nax((q,) + ctx, 0), p))
    w = nc_weaken(d, [r, Disj(p, q)], [1])
    assert check_nc(w) == ((r, Disj(p, q)), Disj(q, p))


def test_transport_allows_contraction():
    d = and_i(nax([p, p], 0), nax([p, p], 1))
    t = nc_transport(d, [q, p])
    assert check_nc(t) == ((q, p), Conj(p, p))
    with pytest.raises(EmbeddingInvalid):
        nc_transport(d, [q])


def test_derived_helpers():
    assert check_nc(nc_prepend(nax([p], 0), q, r)) == ((q, r, p), p)
    assert check_nc(ex_falso(nax([BOT], 0), q)) == ((BOT,), q)
    d = or_inject(nax([q], 0), [p, q, r], 1)
    assert check_nc(d) == ((q,), Disj(p, Disj(q, Disj(r, BOT))))


def test_discharge():
    t = (p, Impl(p, q))
    body = and_i(nax((q,) + t, 1), nax((q,) + t, 0))  # q :: t |- p & q
    d = discharge(body, [imp_e(nax(t, 1), nax(t, 0))])
    assert check_nc(d) == (t, Conj(p, q))


@settings(max_examples=200, deadline=None)
@given(nc_derivations)
def test_generated_derivations_are_sound(d):
    ctx, a = check_nc(d)
    assert models(ctx, a)


def test_generator_is_deterministic():
    from propkit.generators import random_nc

    assert random_nc(random.Random(7)) == random_nc(random.Random(7))
