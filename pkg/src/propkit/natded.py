"""Natural deduction with shared contexts: derivation trees, checker, builders.

Every node stores its own conclusion ``context |- formula``.  The checker
verifies each node locally against its premises' stored conclusions, so a
tree is accepted exactly when every node is a correct rule instance.

Rule parameters that cannot be recovered from the conclusion are kept on the
node: ``index`` for ``Nax`` and ``aux`` for the eliminations (the cut formula
of ``ImpE``, the discarded conjunct of ``AndE1``/``AndE2``, and the two
disjuncts of ``OrE``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import BadArity, BadIndex, EmbeddingInvalid, ProofError, RuleMismatch, UnknownRule
from .formula import BOT, Conj, Disj, Formula, Impl, format_formula, is_neg, neg

Context = tuple[Formula, ...]

# rule -> (number of premises, number of aux formulas)
NC_RULES: dict[str, tuple[int, int]] = {
    "Nax": (0, 0),
    "ImpI": (1, 0),
    "ImpE": (2, 1),
    "BotC": (1, 0),
    "AndI": (2, 0),
    "AndE1": (1, 1),
    "AndE2": (1, 1),
    "OrI1": (1, 0),
    "OrI2": (1, 0),
    "OrE": (3, 2),
}


@dataclass(frozen=True, slots=True)
class NcDerivation:
    rule: str
    context: Context
    formula: Formula
    premises: tuple[NcDerivation, ...] = ()
    index: int | None = None
    aux: tuple[Formula, ...] = ()

    @property
    def conclusion(self) -> tuple[Context, Formula]:
        return self.context, self.formula

    def nodes(self) -> Iterator[tuple[tuple[int, ...], NcDerivation]]:
        """All nodes with their paths, root first."""
        stack: list[tuple[tuple[int, ...], NcDerivation]] = [((), self)]
        while stack:
            path, d = stack.pop()
            yield path, d
            for i in range(len(d.premises) - 1, -1, -1):
                stack.append((path + (i,), d.premises[i]))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


def show_judgement(ctx: Sequence[Formula], a: Formula) -> str:
    return f"[{', '.join(map(format_formula, ctx))}] |- {format_formula(a)}"


def _expected_premises(d: NcDerivation, path: tuple[int, ...]) -> list[tuple[Context, Formula]]:
    ctx, a = d.context, d.formula
    rule = d.rule
    if rule == "ImpI":
        if type(a) is not Impl:
            raise RuleMismatch(f"ImpI concludes an implication, found {format_formula(a)}", path)
        return [((a.lhs,) + ctx, a.rhs)]
    if rule == "ImpE":
        (cut,) = d.aux
        return [(ctx, Impl(cut, a)), (ctx, cut)]
    if rule == "BotC":
        return [((neg(a),) + ctx, BOT)]
    if rule == "AndI":
        if type(a) is not Conj:
            raise RuleMismatch(f"AndI concludes a conjunction, found {format_formula(a)}", path)
        return [(ctx, a.lhs), (ctx, a.rhs)]
    if rule == "AndE1":
        return [(ctx, Conj(a, d.aux[0]))]
    if rule == "AndE2":
        return [(ctx, Conj(d.aux[0], a))]
    if rule in ("OrI1", "OrI2"):
        if type(a) is not Disj:
            raise RuleMismatch(f"{rule} concludes a disjunction, found {format_formula(a)}", path)
        return [(ctx, a.lhs if rule == "OrI1" else a.rhs)]
    if rule == "OrE":
        left, right = d.aux
        return [(ctx, Disj(left, right)), ((left,) + ctx, a), ((right,) + ctx, a)]
    raise UnknownRule(f"unknown rule {rule!r}", path)


def check_node(d: NcDerivation, path: tuple[int, ...] = ()) -> None:
    """Check one node against its premises' stored conclusions."""
    if d.rule not in NC_RULES:
        raise UnknownRule(f"unknown natural deduction rule {d.rule!r}", path)
    arity, n_aux = NC_RULES[d.rule]
    if len(d.premises) != arity:
        raise BadArity(f"{d.rule} takes {arity} premises, found {len(d.premises)}", path)
    if len(d.aux) != n_aux:
        raise BadArity(f"{d.rule} stores {n_aux} auxiliary formulas, found {len(d.aux)}", path)
    if d.rule == "Nax":
        i = d.index
        if type(i) is not int or not 0 <= i < len(d.context):
            raise BadIndex(f"Nax index {i!r} outside a context of length {len(d.context)}", path)
        if d.context[i] != d.formula:
            raise RuleMismatch(
                f"Nax index {i} holds {format_formula(d.context[i])}, not {format_formula(d.formula)}", path
            )
        return
    if d.index is not None:
        raise BadIndex(f"{d.rule} takes no index", path)
    for k, (want, prem) in enumerate(zip(_expected_premises(d, path), d.premises)):
        if (prem.context, prem.formula) != want:
            raise RuleMismatch(
                f"{d.rule} premise {k}: expected {show_judgement(*want)}, "
                f"found {show_judgement(prem.context, prem.formula)}",
                path,
            )


def check_nc(d: NcDerivation) -> tuple[Context, Formula]:
    """Verify every node; return the root conclusion or raise a :class:`ProofError`."""
    for path, node in d.nodes():
        check_node(node, path)
    return d.context, d.formula


def is_nc_proof(d: NcDerivation) -> bool:
    try:
        check_nc(d)
    except ProofError:
        return False
    return True


# --- builders ---------------------------------------------------------------
# Each builder computes the conclusion from its premises and checks the new
# node eagerly.


def _node(rule: str, ctx: Sequence[Formula], a: Formula, premises=(), index=None, aux=()) -> NcDerivation:
    d = NcDerivation(rule, tuple(ctx), a, tuple(premises), index, tuple(aux))
    check_node(d)
    return d


def nax(ctx: Sequence[Formula], index: int) -> NcDerivation:
    ctx = tuple(ctx)
    if not 0 <= index < len(ctx):
        raise BadIndex(f"Nax index {index} outside a context of length {len(ctx)}")
    return NcDerivation("Nax", ctx, ctx[index], (), index)


def assume(ctx: Sequence[Formula], a: Formula) -> NcDerivation:
    """``Nax`` at the first position of ``ctx`` holding ``a``."""
    ctx = tuple(ctx)
    try:
        return nax(ctx, ctx.index(a))
    except ValueError:
        raise RuleMismatch(f"{format_formula(a)} is not in the context") from None


def imp_i(a: Formula, body: NcDerivation) -> NcDerivation:
    if not body.context or body.context[0] != a:
        raise RuleMismatch(f"ImpI needs {format_formula(a)} at the head of the premise context")
    return _node("ImpI", body.context[1:], Impl(a, body.formula), (body,))


def imp_e(major: NcDerivation, minor: NcDerivation) -> NcDerivation:
    if type(major.formula) is not Impl:
        raise RuleMismatch(f"ImpE needs an implication, found {format_formula(major.formula)}")
    return _node("ImpE", major.context, major.formula.rhs, (major, minor), aux=(minor.formula,))


def bot_c(body: NcDerivation) -> NcDerivation:
    if not body.context or not is_neg(body.context[0]):
        raise RuleMismatch("BotC needs a negated formula at the head of the premise context")
    return _node("BotC", body.context[1:], body.context[0].lhs, (body,))


def and_i(left: NcDerivation, right: NcDerivation) -> NcDerivation:
    return _node("AndI", left.context, Conj(left.formula, right.formula), (left, right))


def and_e1(d: NcDerivation) -> NcDerivation:
    if type(d.formula) is not Conj:
        raise RuleMismatch(f"AndE1 needs a conjunction, found {format_formula(d.formula)}")
    return _node("AndE1", d.context, d.formula.lhs, (d,), aux=(d.formula.rhs,))


def and_e2(d: NcDerivation) -> NcDerivation:
    if type(d.formula) is not Conj:
        raise RuleMismatch(f"AndE2 needs a conjunction, found {format_formula(d.formula)}")
    return _node("AndE2", d.context, d.formula.rhs, (d,), aux=(d.formula.lhs,))


def or_i1(d: NcDerivation, other: Formula) -> NcDerivation:
    return _node("OrI1", d.context, Disj(d.formula, other), (d,))


def or_i2(other: Formula, d: NcDerivation) -> NcDerivation:
    return _node("OrI2", d.context, Disj(other, d.formula), (d,))


def or_e(major: NcDerivation, left: NcDerivation, right: NcDerivation) -> NcDerivation:
    if type(major.formula) is not Disj:
        raise RuleMismatch(f"OrE needs a disjunction, found {format_formula(major.formula)}")
    disj = major.formula
    return _node("OrE", major.context, left.formula, (major, left, right), aux=(disj.lhs, disj.rhs))


# --- weakening --------------------------------------------------------------

_BINDERS = {"ImpI": (0,), "BotC": (0,), "OrE": (1, 2)}


def _reindex(d: NcDerivation, target: Context, emb: Sequence[int]) -> NcDerivation:
    if d.rule == "Nax":
        return NcDerivation("Nax", target, d.formula, (), emb[d.index])
    bound = _BINDERS.get(d.rule, ())
    premises = []
    for k, p in enumerate(d.premises):
        if k in bound:
            head = p.context[0]
            premises.append(_reindex(p, (head,) + target, [0] + [e + 1 for e in emb]))
        else:
            premises.append(_reindex(p, target, emb))
    return NcDerivation(d.rule, target, d.formula, tuple(premises), None, d.aux)


def nc_weaken(d: NcDerivation, target: Sequence[Formula], embedding: Sequence[int] | Mapping[int, int]) -> NcDerivation:
    """Move ``d`` into the larger context ``target``.

    ``embedding[i]`` is the position in ``target`` of the formula at position
    ``i`` of ``d``'s context.  It must be injective and formula-preserving.
    """
    target = tuple(target)
    n = len(d.context)
    try:
        emb = [embedding[i] for i in range(n)]
    except (KeyError, IndexError):
        raise EmbeddingInvalid(f"embedding must map all {n} context positions") from None
    if isinstance(embedding, Mapping) and set(embedding) != set(range(n)):
        raise EmbeddingInvalid("embedding has keys outside the source context")
    if not isinstance(embedding, Mapping) and len(embedding) != n:
        raise EmbeddingInvalid(f"embedding must have exactly {n} entries")
    if len(set(emb)) != n:
        raise EmbeddingInvalid("embedding is not injective")
    for i, j in enumerate(emb):
        if type(j) is not int or not 0 <= j < len(target):
            raise EmbeddingInvalid(f"position {i} maps outside the target context")
        if target[j] != d.context[i]:
            raise EmbeddingInvalid(f"position {i} maps to a different formula")
    return _reindex(d, target, emb)


def nc_transport(d: NcDerivation, target: Sequence[Formula]) -> NcDerivation:
    """Move ``d`` into any context containing every formula of its own context.

    Each hypothesis is sent to its first occurrence in ``target``; duplicates
    may collapse onto one position, which the shared-context rules allow.
    """
    target = tuple(target)
    first: dict[Formula, int] = {}
    for j, a in enumerate(target):
        first.setdefault(a, j)
    try:
        emb = [first[a] for a in d.context]
    except KeyError as e:
        raise EmbeddingInvalid(f"{format_formula(e.args[0])} is missing from the target context") from None
    return _reindex(d, target, emb)


def nc_prepend(d: NcDerivation, *formulas: Formula) -> NcDerivation:
    k = len(formulas)
    return _reindex(d, tuple(formulas) + d.context, [i + k for i in range(len(d.context))])


# --- small derived constructions -------------------------------------------


def prove_top(ctx: Sequence[Formula]) -> NcDerivation:
    """``ctx |- top`` as ``ImpI`` over ``Nax``."""
    return imp_i(BOT, nax((BOT,) + tuple(ctx), 0))


def ex_falso(d: NcDerivation, a: Formula) -> NcDerivation:
    """From ``ctx |- bot`` get ``ctx |- a``."""
    return bot_c(nc_prepend(d, neg(a)))


def discharge(body: NcDerivation, proofs: Sequence[NcDerivation]) -> NcDerivation:
    """Cut hypotheses out of ``body``.

    ``body`` has context ``[h1, ..., hm] + T`` and ``proofs[i]`` proves ``h(i+1)``
    in ``T``.  The result proves ``body.formula`` in ``T``, by ``m`` implication
    introductions followed by ``m`` eliminations.
    """
    d = body
    for h in body.context[: len(proofs)]:
        d = imp_i(h, d)
    for p in reversed(proofs):
        d = imp_e(d, p)
    return d


def or_inject(d: NcDerivation, disjuncts: Sequence[Formula], k: int) -> NcDerivation:
    """From ``ctx |- disjuncts[k]`` prove the right-nested disjunction ending in ``bot``."""
    disjuncts = tuple(disjuncts)
    tail: Formula = BOT
    for a in reversed(disjuncts[k + 1 :]):
        tail = Disj(a, tail)
    out = or_i1(d, tail)
    for a in reversed(disjuncts[:k]):
        out = or_i2(a, out)
    return out
