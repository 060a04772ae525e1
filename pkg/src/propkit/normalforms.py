"""Negation and conjunctive normal forms, and proof synthesis for valid formulas.

The CNF here is the naive distributive one: a clause is a tuple of literals,
a CNF is a tuple of clauses, and both embed into formulas as right-nested
folds ending in ``bot`` and ``top`` respectively.

:func:`complete` turns any formula into either a checked natural deduction
proof of it or a valuation falsifying it.  The proof is assembled from three
pieces, each built by structural recursion:

* a proof of the CNF embedding, one clause at a time (:func:`cnf_provable`),
* ``CNF -> NNF`` (:func:`cnf_impl_prov`),
* ``NNF -> A`` (:func:`nnf_impl_prov`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence, TypeVar, Union

from .errors import PreconditionViolated
from .formula import BOT, TOP, Bot, Conj, Disj, Formula, Impl, Var, neg, variables_of
from .natded import (
    NcDerivation,
    and_e1,
    and_e2,
    and_i,
    bot_c,
    check_nc,
    ex_falso,
    imp_e,
    imp_i,
    nax,
    nc_prepend,
    or_e,
    or_i1,
    or_i2,
    or_inject,
    prove_top,
)

T = TypeVar("T")
B = TypeVar("B")


def map_fold_right(f: Callable[[B], T], g: Callable[[T, T], T], base: T, xs: Sequence[B]) -> T:
    """``g(f(x0), g(f(x1), ... g(f(xn), base)))``."""
    return reduce(lambda acc, x: g(f(x), acc), reversed(xs), base)


# --- data -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class NPos:
    name: str


@dataclass(frozen=True, slots=True)
class NNeg:
    name: str


@dataclass(frozen=True, slots=True)
class NBot:
    pass


@dataclass(frozen=True, slots=True)
class NTop:
    pass


@dataclass(frozen=True, slots=True)
class NConj:
    lhs: Nnf
    rhs: Nnf


@dataclass(frozen=True, slots=True)
class NDisj:
    lhs: Nnf
    rhs: Nnf


Nnf = Union[NPos, NNeg, NBot, NTop, NConj, NDisj]


@dataclass(frozen=True, slots=True)
class LPos:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class LNeg:
    name: str

    def __str__(self) -> str:
        return "~" + self.name


@dataclass(frozen=True, slots=True)
class LBot:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True, slots=True)
class LTop:
    def __str__(self) -> str:
        return "top"


Literal = Union[LPos, LNeg, LBot, LTop]
Clause = tuple  # of Literal
Cnf = tuple  # of Clause


def parse_literal(text: str) -> Literal:
    text = text.strip()
    if text == "bot":
        return LBot()
    if text == "top":
        return LTop()
    if text.startswith("~"):
        return LNeg(text[1:].strip())
    return LPos(text)


def cnf_to_json(c: Cnf) -> list[list[str]]:
    return [[str(lit) for lit in clause] for clause in c]


def cnf_from_json(data: list[list[str]]) -> Cnf:
    return tuple(tuple(parse_literal(s) for s in clause) for clause in data)


# --- embeddings into formulas -----------------------------------------------


def nnf_to_formula(n: Nnf) -> Formula:
    t = type(n)
    if t is NPos:
        return Var(n.name)
    if t is NNeg:
        return neg(Var(n.name))
    if t is NBot:
        return BOT
    if t is NTop:
        return TOP
    if t is NConj:
        return Conj(nnf_to_formula(n.lhs), nnf_to_formula(n.rhs))
    return Disj(nnf_to_formula(n.lhs), nnf_to_formula(n.rhs))


def literal_to_formula(lit: Literal) -> Formula:
    t = type(lit)
    if t is LPos:
        return Var(lit.name)
    if t is LNeg:
        return neg(Var(lit.name))
    if t is LBot:
        return BOT
    return TOP


def clause_to_formula(c: Sequence[Literal]) -> Formula:
    return map_fold_right(literal_to_formula, Disj, BOT, c)


def cnf_to_formula(c: Sequence[Sequence[Literal]]) -> Formula:
    return map_fold_right(clause_to_formula, Conj, TOP, c)


# --- transformations --------------------------------------------------------


def make_nnf(a: Formula, negate: bool = False) -> Nnf:
    """NNF of ``a`` (or of ``~a`` when ``negate``), by the mutual recursion on both polarities."""
    t = type(a)
    if t is Var:
        return NNeg(a.name) if negate else NPos(a.name)
    if t is Bot:
        return NTop() if negate else NBot()
    if t is Disj:
        if negate:
            return NConj(make_nnf(a.lhs, True), make_nnf(a.rhs, True))
        return NDisj(make_nnf(a.lhs), make_nnf(a.rhs))
    if t is Conj:
        if negate:
            return NDisj(make_nnf(a.lhs, True), make_nnf(a.rhs, True))
        return NConj(make_nnf(a.lhs), make_nnf(a.rhs))
    if t is Impl:
        if negate:
            return NConj(make_nnf(a.lhs), make_nnf(a.rhs, True))
        return NDisj(make_nnf(a.lhs, True), make_nnf(a.rhs))
    raise TypeError(f"not a formula: {a!r}")


def add_clause(prefix: Sequence[Literal], cnf: Sequence[Clause]) -> Cnf:
    prefix = tuple(prefix)
    return tuple(prefix + tuple(c) for c in cnf)


def disjunct(left: Sequence[Clause], right: Sequence[Clause]) -> Cnf:
    return tuple(c for clause in left for c in add_clause(clause, right))


def make_cnf(n: Nnf) -> Cnf:
    t = type(n)
    if t is NPos:
        return ((LPos(n.name),),)
    if t is NNeg:
        return ((LNeg(n.name),),)
    if t is NBot:
        return ((LBot(),),)
    if t is NTop:
        return ((LTop(),),)
    if t is NConj:
        return make_cnf(n.lhs) + make_cnf(n.rhs)
    return disjunct(make_cnf(n.lhs), make_cnf(n.rhs))


# --- syntactic validity -----------------------------------------------------


def _witness(c: Sequence[Literal]) -> tuple[int, int] | int | None:
    """Position of ``top``, or a complementary pair ``(pos, neg)``, or ``None``."""
    for k, lit in enumerate(c):
        if type(lit) is LTop:
            return k
    negs: dict[str, int] = {}
    for k, lit in enumerate(c):
        if type(lit) is LNeg:
            negs.setdefault(lit.name, k)
    for k, lit in enumerate(c):
        if type(lit) is LPos and lit.name in negs:
            return k, negs[lit.name]
    return None


def clause_is_valid(c: Sequence[Literal]) -> bool:
    return _witness(c) is not None


def clause_countermodel(c: Sequence[Literal]) -> dict[str, bool] | None:
    """``None`` for a syntactically valid clause, else the valuation making exactly its negated variables true."""
    if clause_is_valid(c):
        return None
    negated = {lit.name for lit in c if type(lit) is LNeg}
    names = [lit.name for lit in c if type(lit) in (LPos, LNeg)]
    return {name: name in negated for name in dict.fromkeys(names)}


def cnf_countermodel(c: Sequence[Clause]) -> tuple[int, dict[str, bool]] | None:
    """``None`` when every clause is valid; else the first refuted clause and its countervaluation."""
    for i, clause in enumerate(c):
        v = clause_countermodel(clause)
        if v is not None:
            return i, v
    return None


def cnf_is_valid(c: Sequence[Clause]) -> bool:
    return cnf_countermodel(c) is None


# decision procedures under their usual names: ``None`` means valid
clause_decide = clause_countermodel
cnf_decide = cnf_countermodel


# --- proof synthesis --------------------------------------------------------


def prove_clause(ctx: Sequence[Formula], c: Sequence[Literal]) -> NcDerivation:
    """``ctx |- clause_to_formula(c)`` for a syntactically valid clause."""
    ctx = tuple(ctx)
    w = _witness(c)
    if w is None:
        raise PreconditionViolated("clause is not syntactically valid")
    items = [literal_to_formula(lit) for lit in c]
    if isinstance(w, int):
        return or_inject(prove_top(ctx), items, w)
    i, j = w
    goal = clause_to_formula(c)
    # Under ~goal: p would give goal, so ~p; and ~p gives goal too.
    inner = (neg(goal),) + ctx
    p = items[i]
    with_p = (p,) + inner
    not_p = imp_i(p, imp_e(nax(with_p, 1), or_inject(nax(with_p, 0), items, i)))
    contradiction = imp_e(nax(inner, 0), or_inject(not_p, items, j))
    return bot_c(contradiction)


def conj_list(ctx: Sequence[Formula], proofs: Sequence[NcDerivation]) -> NcDerivation:
    """``AndI`` the proofs into a right-nested conjunction ending in ``top``."""
    d = prove_top(ctx)
    for p in reversed(proofs):
        d = and_i(p, d)
    return d


def cnf_provable(c: Sequence[Clause]) -> NcDerivation:
    """Checked proof of ``[] |- cnf_to_formula(c)``; ``c`` must be syntactically valid."""
    found = cnf_countermodel(c)
    if found is not None:
        raise PreconditionViolated(f"clause {found[0]} is not syntactically valid")
    return conj_list((), [prove_clause((), clause) for clause in c])


def _component(d: NcDerivation, k: int) -> NcDerivation:
    """From a proof of ``f0 & (f1 & ... top)``, the proof of ``fk``."""
    for _ in range(k):
        d = and_e2(d)
    return and_e1(d)


def _tail(d: NcDerivation, k: int) -> NcDerivation:
    for _ in range(k):
        d = and_e2(d)
    return d


def _split_conj(d: NcDerivation, n_left: int) -> tuple[NcDerivation, NcDerivation]:
    """Split a proof of ``cnf(X ++ Y)`` into proofs of ``cnf(X)`` and ``cnf(Y)``, with ``|X| = n_left``."""
    left = conj_list(d.context, [_component(d, k) for k in range(n_left)])
    return left, _tail(d, n_left)


def _clause_split(d: NcDerivation, left: Sequence[Literal], right: Sequence[Literal]) -> NcDerivation:
    """From ``ctx |- clause(left ++ right)`` prove ``clause(left) | clause(right)``."""
    fl, fr = clause_to_formula(left), clause_to_formula(right)
    if not left:
        return or_i2(fl, d)
    head = literal_to_formula(left[0])
    rest = tuple(left[1:])
    # d proves head | clause(rest ++ right)
    ctx_a = (head,) + d.context
    branch_a = or_i1(or_i1(nax(ctx_a, 0), clause_to_formula(rest)), fr)
    rest_formula = clause_to_formula(rest + tuple(right))
    ctx_b = (rest_formula,) + d.context
    inner = _clause_split(nax(ctx_b, 0), rest, right)
    ctx_c = (clause_to_formula(rest),) + ctx_b
    ctx_r = (fr,) + ctx_b
    branch_b = or_e(
        inner,
        or_i1(or_i2(head, nax(ctx_c, 0)), fr),
        or_i2(fl, nax(ctx_r, 0)),
    )
    return or_e(d, branch_a, branch_b)


def _collect(ctx: tuple[Formula, ...], proofs: Sequence[NcDerivation], q: Formula, q_left: bool) -> NcDerivation:
    """Gather disjunctions sharing the side ``q``.

    With ``q_left`` the proofs show ``q | Bk`` and the result shows
    ``q | (B0 & (B1 & ... top))``; otherwise they show ``Bk | q`` and the
    result shows ``(B0 & ... top) | q``.
    """
    parts = [p.formula.rhs if q_left else p.formula.lhs for p in proofs]
    tail_formula = map_fold_right(lambda f: f, Conj, TOP, parts)
    if not proofs:
        top = prove_top(ctx)
        return or_i2(q, top) if q_left else or_i1(top, q)
    rest = _collect(ctx, proofs[1:], q, q_left)
    first = proofs[0]
    b0 = parts[0]
    rest_conj = map_fold_right(lambda f: f, Conj, TOP, parts[1:])

    def wrap(d: NcDerivation) -> NcDerivation:
        return or_i2(q, d) if q_left else or_i1(d, q)

    def q_in(d_ctx: tuple[Formula, ...]) -> NcDerivation:
        # Q is the head of d_ctx
        q_proof = nax(d_ctx, 0)
        return or_i1(q_proof, tail_formula) if q_left else or_i2(tail_formula, q_proof)

    ctx_q = (q,) + ctx
    ctx_b = (b0,) + ctx
    # inside the b0 branch, split the rest
    ctx_bq = (q,) + ctx_b
    ctx_br = (rest_conj,) + ctx_b
    rest_in_b = nc_prepend(rest, b0)
    both = and_i(nax(ctx_br, 1), nax(ctx_br, 0))
    if q_left:
        inner = or_e(rest_in_b, q_in(ctx_bq), wrap(both))
        return or_e(first, q_in(ctx_q), inner)
    inner = or_e(rest_in_b, wrap(both), q_in(ctx_bq))
    return or_e(first, inner, q_in(ctx_q))


def _cnf_disjunct_split(d: NcDerivation, left: Sequence[Clause], right: Sequence[Clause]) -> NcDerivation:
    """From ``ctx |- cnf(disjunct(left, right))`` prove ``cnf(left) | cnf(right)``."""
    ctx = d.context
    fy = cnf_to_formula(right)
    per_left = []
    for i, x in enumerate(left):
        # clause x | y_j for every j, then x | cnf(right)
        pieces = [
            _clause_split(_component(d, i * len(right) + j), x, y) for j, y in enumerate(right)
        ]
        per_left.append(_collect(ctx, pieces, clause_to_formula(x), q_left=True))
    # per_left[i] proves clause(x_i) | cnf(right); collect the left sides
    return _collect(ctx, per_left, fy, q_left=False)


def _cnf_to_nnf(n: Nnf, d: NcDerivation) -> NcDerivation:
    """From ``ctx |- cnf_to_formula(make_cnf(n))`` prove ``ctx |- nnf_to_formula(n)``."""
    t = type(n)
    ctx = d.context
    if t is NTop:
        return prove_top(ctx)
    if t in (NPos, NNeg, NBot):
        lit = nnf_to_formula(n)
        single = and_e1(d)  # lit | bot
        hyp = (lit,) + ctx
        absurd = (BOT,) + ctx
        from_bot = nax(absurd, 0) if t is NBot else ex_falso(nax(absurd, 0), lit)
        return or_e(single, nax(hyp, 0), from_bot)
    if t is NConj:
        d_left, d_right = _split_conj(d, len(make_cnf(n.lhs)))
        return and_i(_cnf_to_nnf(n.lhs, d_left), _cnf_to_nnf(n.rhs, d_right))
    cl, cr = make_cnf(n.lhs), make_cnf(n.rhs)
    split = _cnf_disjunct_split(d, cl, cr)
    fl, fr = nnf_to_formula(n.lhs), nnf_to_formula(n.rhs)
    ctx_l = (cnf_to_formula(cl),) + ctx
    ctx_r = (cnf_to_formula(cr),) + ctx
    return or_e(
        split,
        or_i1(_cnf_to_nnf(n.lhs, nax(ctx_l, 0)), fr),
        or_i2(fl, _cnf_to_nnf(n.rhs, nax(ctx_r, 0))),
    )


def cnf_impl_prov(n: Nnf) -> NcDerivation:
    """Checked proof of ``[] |- cnf_to_formula(make_cnf(n)) -> nnf_to_formula(n)``."""
    hyp = cnf_to_formula(make_cnf(n))
    return imp_i(hyp, _cnf_to_nnf(n, nax((hyp,), 0)))


def _nnf_to_formula_proof(a: Formula, negate: bool, d: NcDerivation) -> NcDerivation:
    """From ``ctx |- nnf(make_nnf(a, negate))`` prove ``a`` (or ``~a``)."""
    ctx = d.context
    t = type(a)
    if t in (Var, Bot):
        return d
    if not negate:
        if t is Conj:
            return and_i(
                _nnf_to_formula_proof(a.lhs, False, and_e1(d)),
                _nnf_to_formula_proof(a.rhs, False, and_e2(d)),
            )
        nl = nnf_to_formula(make_nnf(a.lhs, t is Impl))
        nr = nnf_to_formula(make_nnf(a.rhs))
        ctx_l, ctx_r = (nl,) + ctx, (nr,) + ctx
        if t is Disj:
            return or_e(
                d,
                or_i1(_nnf_to_formula_proof(a.lhs, False, nax(ctx_l, 0)), a.rhs),
                or_i2(a.lhs, _nnf_to_formula_proof(a.rhs, False, nax(ctx_r, 0))),
            )
        # implication: ~B | C gives B -> C
        under_b = (a.lhs,) + ctx_l
        not_b = _nnf_to_formula_proof(a.lhs, True, nax(under_b, 1))
        left = imp_i(a.lhs, ex_falso(imp_e(not_b, nax(under_b, 0)), a.rhs))
        c_proof = _nnf_to_formula_proof(a.rhs, False, nax(ctx_r, 0))
        right = imp_i(a.lhs, nc_prepend(c_proof, a.lhs))
        return or_e(d, left, right)
    if t is Disj:
        # ~B & ~C gives ~(B | C)
        not_b = _nnf_to_formula_proof(a.lhs, True, and_e1(d))
        not_c = _nnf_to_formula_proof(a.rhs, True, and_e2(d))
        under = (a,) + ctx
        kill_b = imp_e(nc_prepend(not_b, a.lhs, a), nax((a.lhs,) + under, 0))
        kill_c = imp_e(nc_prepend(not_c, a.rhs, a), nax((a.rhs,) + under, 0))
        return imp_i(a, or_e(nax(under, 0), kill_b, kill_c))
    if t is Conj:
        # ~B | ~C gives ~(B & C)
        nl = nnf_to_formula(make_nnf(a.lhs, True))
        nr = nnf_to_formula(make_nnf(a.rhs, True))
        ctx_l, ctx_r = (nl,) + ctx, (nr,) + ctx
        not_b = _nnf_to_formula_proof(a.lhs, True, nax(ctx_l, 0))
        not_c = _nnf_to_formula_proof(a.rhs, True, nax(ctx_r, 0))
        left = imp_i(a, imp_e(nc_prepend(not_b, a), and_e1(nax((a,) + ctx_l, 0))))
        right = imp_i(a, imp_e(nc_prepend(not_c, a), and_e2(nax((a,) + ctx_r, 0))))
        return or_e(d, left, right)
    # ~(B -> C) from B & ~C
    b_proof = _nnf_to_formula_proof(a.lhs, False, and_e1(d))
    not_c = _nnf_to_formula_proof(a.rhs, True, and_e2(d))
    under = (a,) + ctx
    return imp_i(a, imp_e(nc_prepend(not_c, a), imp_e(nax(under, 0), nc_prepend(b_proof, a))))


def nnf_impl_prov(a: Formula, negate: bool = False) -> NcDerivation:
    """Checked proof of ``nnf(make_nnf(a)) -> a``, or ``nnf(make_nnf(a, True)) -> ~a`` when ``negate``."""
    hyp = nnf_to_formula(make_nnf(a, negate))
    return imp_i(hyp, _nnf_to_formula_proof(a, negate, nax((hyp,), 0)))


def complete(a: Formula) -> NcDerivation | dict[str, bool]:
    """A checked proof of ``[] |- a`` if ``a`` is valid, else a falsifying valuation.

    The valuation assigns every variable of ``a``; it is the clause
    countervaluation of the first refuted CNF clause, padded with ``False``.
    """
    n = make_nnf(a)
    c = make_cnf(n)
    refuted = cnf_countermodel(c)
    if refuted is not None:
        _, v = refuted
        return {name: v.get(name, False) for name in variables_of(a)}
    nnf_proof = imp_e(cnf_impl_prov(n), cnf_provable(c))
    proof = imp_e(nnf_impl_prov(a), nnf_proof)
    check_nc(proof)
    return proof
