"""Sequent calculus with rules that act anywhere in the lists.

A node concludes ``gamma => delta``.  The principal formula's position is
stored on the node (``pos``), which fixes the ``Gamma1/Gamma2`` split the rule
is applied at even when the formula occurs several times:

=========  ==========================  =====================================
rule       ``pos``                     premises (conclusion side at ``k``)
=========  ==========================  =====================================
Gax        (left i, right j)           none; ``gamma[i] == delta[j]``
GBot       (left i,)                   none; ``gamma[i]`` is ``bot``
AndL       (k,)                        A, B in place of A & B
OrL        (k,)                        A in place of A | B;  B in its place
ImpL       (k,)                        B in its place;  drop it, A :: delta
AndR       (k,)                        A in its place;  B in its place
OrR        (k,)                        A, B in place of A | B
ImpR       (k,)                        A :: gamma with B in place of A -> B
Cut        ()  ``aux = (A,)``          gamma => A :: delta;  A :: gamma => delta
=========  ==========================  =====================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BadArity, BadIndex, PreconditionViolated, ProofError, RuleMismatch, UnknownRule
from .formula import BOT, Bot, Conj, Disj, Formula, Impl, Var, format_formula, neg
from .natded import (
    NcDerivation,
    and_e1,
    and_e2,
    and_i,
    bot_c,
    check_nc,
    discharge,
    ex_falso,
    imp_e,
    imp_i,
    nax,
    nc_transport,
    or_e,
    or_i1,
    or_i2,
    or_inject,
)

Context = tuple[Formula, ...]

# rule -> (premises, stored positions, aux formulas)
GC_RULES: dict[str, tuple[int, int, int]] = {
    "Gax": (0, 2, 0),
    "GBot": (0, 1, 0),
    "AndL": (1, 1, 0),
    "OrL": (2, 1, 0),
    "ImpL": (2, 1, 0),
    "AndR": (2, 1, 0),
    "OrR": (1, 1, 0),
    "ImpR": (1, 1, 0),
    "Cut": (2, 0, 1),
}
LEFT_RULES = {"AndL": Conj, "OrL": Disj, "ImpL": Impl}
RIGHT_RULES = {"AndR": Conj, "OrR": Disj, "ImpR": Impl}


@dataclass(frozen=True, slots=True)
class GcDerivation:
    rule: str
    gamma: Context
    delta: Context
    premises: tuple[GcDerivation, ...] = ()
    pos: tuple[int, ...] = ()
    aux: tuple[Formula, ...] = ()

    @property
    def sequent(self) -> tuple[Context, Context]:
        return self.gamma, self.delta

    def nodes(self) -> Iterator[tuple[tuple[int, ...], GcDerivation]]:
        stack: list[tuple[tuple[int, ...], GcDerivation]] = [((), self)]
        while stack:
            path, d = stack.pop()
            yield path, d
            for i in range(len(d.premises) - 1, -1, -1):
                stack.append((path + (i,), d.premises[i]))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def has_cut(self) -> bool:
        return any(d.rule == "Cut" for _, d in self.nodes())


def show_sequent(gamma: Sequence[Formula], delta: Sequence[Formula]) -> str:
    return f"{', '.join(map(format_formula, gamma))} => {', '.join(map(format_formula, delta))}".strip()


def big_or(delta: Sequence[Formula]) -> Formula:
    out: Formula = BOT
    for a in reversed(delta):
        out = Disj(a, out)
    return out


def neg_list(delta: Sequence[Formula]) -> Context:
    return tuple(neg(a) for a in delta)


def _replace(xs: Context, k: int, *new: Formula) -> Context:
    return xs[:k] + new + xs[k + 1 :]


def expected_premises(d: GcDerivation, path: tuple[int, ...] = ()) -> list[tuple[Context, Context]]:
    g, dl, rule = d.gamma, d.delta, d.rule
    if rule in LEFT_RULES or rule in RIGHT_RULES:
        (k,) = d.pos
        side = g if rule in LEFT_RULES else dl
        if type(k) is not int or not 0 <= k < len(side):
            raise BadIndex(f"{rule} position {k!r} outside a list of length {len(side)}", path)
        c = side[k]
        want = LEFT_RULES.get(rule) or RIGHT_RULES[rule]
        if type(c) is not want:
            raise RuleMismatch(f"{rule} at position {k} found {format_formula(c)}", path)
        a, b = c.lhs, c.rhs
        if rule == "AndL":
            return [(_replace(g, k, a, b), dl)]
        if rule == "OrL":
            return [(_replace(g, k, a), dl), (_replace(g, k, b), dl)]
        if rule == "ImpL":
            return [(_replace(g, k, b), dl), (_replace(g, k), (a,) + dl)]
        if rule == "AndR":
            return [(g, _replace(dl, k, a)), (g, _replace(dl, k, b))]
        if rule == "OrR":
            return [(g, _replace(dl, k, a, b))]
        return [((a,) + g, _replace(dl, k, b))]
    if rule == "Cut":
        (a,) = d.aux
        return [(g, (a,) + dl), ((a,) + g, dl)]
    raise UnknownRule(f"unknown sequent rule {rule!r}", path)


def check_node(d: GcDerivation, path: tuple[int, ...] = (), cut_free: bool = False) -> None:
    if d.rule not in GC_RULES:
        raise UnknownRule(f"unknown sequent rule {d.rule!r}", path)
    n_prem, n_pos, n_aux = GC_RULES[d.rule]
    if len(d.premises) != n_prem:
        raise BadArity(f"{d.rule} takes {n_prem} premises, found {len(d.premises)}", path)
    if len(d.pos) != n_pos:
        raise BadArity(f"{d.rule} stores {n_pos} positions, found {len(d.pos)}", path)
    if len(d.aux) != n_aux:
        raise BadArity(f"{d.rule} stores {n_aux} auxiliary formulas, found {len(d.aux)}", path)
    if cut_free and d.rule == "Cut":
        raise RuleMismatch("Cut is not a rule of the cut-free calculus", path)
    if d.rule == "Gax":
        i, j = d.pos
        if type(i) is not int or not 0 <= i < len(d.gamma):
            raise BadIndex(f"Gax left position {i!r} outside a list of length {len(d.gamma)}", path)
        if type(j) is not int or not 0 <= j < len(d.delta):
            raise BadIndex(f"Gax right position {j!r} outside a list of length {len(d.delta)}", path)
        if d.gamma[i] != d.delta[j]:
            raise RuleMismatch(
                f"Gax joins {format_formula(d.gamma[i])} with {format_formula(d.delta[j])}", path
            )
        if cut_free and type(d.gamma[i]) is not Var:
            raise RuleMismatch(f"cut-free axiom on non-atomic {format_formula(d.gamma[i])}", path)
        return
    if d.rule == "GBot":
        (i,) = d.pos
        if type(i) is not int or not 0 <= i < len(d.gamma):
            raise BadIndex(f"GBot position {i!r} outside a list of length {len(d.gamma)}", path)
        if type(d.gamma[i]) is not Bot:
            raise RuleMismatch(f"GBot position {i} holds {format_formula(d.gamma[i])}", path)
        return
    for k, (want, prem) in enumerate(zip(expected_premises(d, path), d.premises)):
        if (prem.gamma, prem.delta) != want:
            raise RuleMismatch(
                f"{d.rule} premise {k}: expected {show_sequent(*want)}, found {show_sequent(prem.gamma, prem.delta)}",
                path,
            )


def check_gc(d: GcDerivation) -> tuple[Context, Context]:
    for path, node in d.nodes():
        check_node(node, path)
    return d.gamma, d.delta


# --- builders ---------------------------------------------------------------


def _node(rule, gamma, delta, premises=(), pos=(), aux=(), cls=GcDerivation) -> GcDerivation:
    d = cls(rule, tuple(gamma), tuple(delta), tuple(premises), tuple(pos), tuple(aux))
    check_node(d)
    return d


def gax(gamma: Sequence[Formula], delta: Sequence[Formula], i: int, j: int) -> GcDerivation:
    return _node("Gax", gamma, delta, pos=(i, j))


def gbot(gamma: Sequence[Formula], delta: Sequence[Formula], i: int) -> GcDerivation:
    return _node("GBot", gamma, delta, pos=(i,))


def and_l(p: GcDerivation, k: int) -> GcDerivation:
    g = p.gamma
    return _node("AndL", _replace(g[: k + 1] + g[k + 2 :], k, Conj(g[k], g[k + 1])), p.delta, (p,), (k,), cls=type(p))


def or_l(p1: GcDerivation, p2: GcDerivation, k: int) -> GcDerivation:
    return _node("OrL", _replace(p1.gamma, k, Disj(p1.gamma[k], p2.gamma[k])), p1.delta, (p1, p2), (k,), cls=type(p1))


def imp_l(p1: GcDerivation, p2: GcDerivation, k: int) -> GcDerivation:
    """``p1``: B at ``k`` on the left; ``p2``: the same list without it, A heading the right."""
    c = Impl(p2.delta[0], p1.gamma[k])
    return _node("ImpL", _replace(p1.gamma, k, c), p1.delta, (p1, p2), (k,), cls=type(p1))


def and_r(p1: GcDerivation, p2: GcDerivation, k: int) -> GcDerivation:
    return _node("AndR", p1.gamma, _replace(p1.delta, k, Conj(p1.delta[k], p2.delta[k])), (p1, p2), (k,), cls=type(p1))


def or_r(p: GcDerivation, k: int) -> GcDerivation:
    d = p.delta
    return _node("OrR", p.gamma, _replace(d[: k + 1] + d[k + 2 :], k, Disj(d[k], d[k + 1])), (p,), (k,), cls=type(p))


def imp_r(p: GcDerivation, k: int) -> GcDerivation:
    return _node("ImpR", p.gamma[1:], _replace(p.delta, k, Impl(p.gamma[0], p.delta[k])), (p,), (k,), cls=type(p))


def cut(p1: GcDerivation, p2: GcDerivation) -> GcDerivation:
    return _node("Cut", p1.gamma, p1.delta[1:], (p1, p2), aux=(p1.delta[0],))


# --- weakening ---------------------------------------------------------------


def _bump(k: int, p: int) -> int:
    """Index ``k`` after inserting one formula at position ``p`` of the same list."""
    return k + 1 if p <= k else k


def _weaken(d: GcDerivation, left: bool, p: int, a: Formula) -> GcDerivation:
    rule = d.rule
    gamma = d.gamma[:p] + (a,) + d.gamma[p:] if left else d.gamma
    delta = d.delta if left else d.delta[:p] + (a,) + d.delta[p:]
    cls = type(d)
    if rule == "Gax":
        i, j = d.pos
        return cls(rule, gamma, delta, (), (_bump(i, p), j) if left else (i, _bump(j, p)))
    if rule == "GBot":
        (i,) = d.pos
        return cls(rule, gamma, delta, (), (_bump(i, p),) if left else d.pos)
    if rule == "Cut":
        # gamma => A :: delta  and  A :: gamma => delta
        q0, q1 = (p, p + 1) if left else (p + 1, p)
        prem = (_weaken(d.premises[0], left, q0, a), _weaken(d.premises[1], left, q1, a))
        return cls(rule, gamma, delta, prem, (), d.aux)
    (k,) = d.pos
    acts_here = (rule in LEFT_RULES) == left
    if acts_here:
        # the insertion shares a list with the principal formula
        new_k = _bump(k, p)
        if rule in ("AndL", "OrR"):
            spots = [p if p <= k else p + 1]
        elif rule == "ImpL":
            spots = [p, p if p <= k else p - 1]
        else:  # OrL, AndR, ImpR: one formula replaced by one
            spots = [p] * len(d.premises)
    else:
        new_k = k
        if rule == "ImpR":  # left insertion, premise gamma gains A at the head
            spots = [p + 1]
        elif rule == "ImpL":  # right insertion, second premise delta gains A at the head
            spots = [p, p + 1]
        else:
            spots = [p] * len(d.premises)
    prem = tuple(_weaken(q, left, s, a) for q, s in zip(d.premises, spots))
    return cls(rule, gamma, delta, prem, (new_k,), d.aux)


def gc_weaken(d: GcDerivation, side: str, position: int, a: Formula) -> GcDerivation:
    """Insert ``a`` at ``position`` of the left (``side="left"``) or right list of the endsequent."""
    if side not in ("left", "right"):
        raise PreconditionViolated(f"side must be 'left' or 'right', not {side!r}")
    try:
        _check_any(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    n = len(d.gamma if side == "left" else d.delta)
    if not 0 <= position <= n:
        raise PreconditionViolated(f"position {position} outside 0..{n}")
    return _weaken(d, side == "left", position, a)


def _check_any(d: GcDerivation) -> None:
    cut_free = type(d) is not GcDerivation
    for path, node in d.nodes():
        check_node(node, path, cut_free)


def _weaken_to(d: GcDerivation, gamma: Sequence[Formula], delta: Sequence[Formula]) -> GcDerivation:
    """Weaken until the endsequent is ``gamma => delta``; both sides must be supersequences."""
    for left, target in ((True, tuple(gamma)), (False, tuple(delta))):
        cur = list(d.gamma if left else d.delta)
        for j, t in enumerate(target):
            if j < len(cur) and cur[j] == t:
                continue
            d = _weaken(d, left, j, t)
            cur.insert(j, t)
        if len(cur) != len(target):
            raise PreconditionViolated("target is not a supersequence of the endsequent")
    return d


def gc_weaken_to(d: GcDerivation, gamma: Sequence[Formula], delta: Sequence[Formula]) -> GcDerivation:
    try:
        _check_any(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    return _weaken_to(d, gamma, delta)


# --- Gc -> Nc ---------------------------------------------------------------


def _g_to_nc_neg(d: GcDerivation) -> NcDerivation:
    g, dl, rule = d.gamma, d.delta, d.rule
    t = g + neg_list(dl)
    if rule == "Gax":
        i, j = d.pos
        return imp_e(nax(t, len(g) + j), nax(t, i))
    if rule == "GBot":
        return nax(t, d.pos[0])
    ps = [_g_to_nc_neg(p) for p in d.premises]
    if rule == "Cut":
        (a,) = d.aux
        not_a = imp_i(a, ps[1])
        return discharge(nc_transport(ps[0], (neg(a),) + t), [not_a])
    (k,) = d.pos
    if rule in LEFT_RULES:
        c = g[k]
        a, b = c.lhs, c.rhs
        if rule == "AndL":
            body = nc_transport(ps[0], (a, b) + t)
            return discharge(body, [and_e1(nax(t, k)), and_e2(nax(t, k))])
        if rule == "OrL":
            return or_e(nax(t, k), nc_transport(ps[0], (a,) + t), nc_transport(ps[1], (b,) + t))
        a_proof = bot_c(nc_transport(ps[1], (neg(a),) + t))
        b_proof = imp_e(nax(t, k), a_proof)
        return discharge(nc_transport(ps[0], (b,) + t), [b_proof])
    c = dl[k]
    a, b = c.lhs, c.rhs
    m = len(g) + k  # position of ~c in t
    if rule == "AndR":
        under_a = (a,) + t
        b_proof = bot_c(nc_transport(ps[1], (neg(b),) + under_a))
        clash = imp_e(nax(under_a, m + 1), and_i(nax(under_a, 0), b_proof))
        return discharge(nc_transport(ps[0], (neg(a),) + t), [imp_i(a, clash)])
    if rule == "OrR":
        under_a, under_b = (a,) + t, (b,) + t
        not_a = imp_i(a, imp_e(nax(under_a, m + 1), or_i1(nax(under_a, 0), b)))
        not_b = imp_i(b, imp_e(nax(under_b, m + 1), or_i2(a, nax(under_b, 0))))
        return discharge(nc_transport(ps[0], (neg(a), neg(b)) + t), [not_a, not_b])
    # ImpR
    under_b = (b,) + t
    not_b = imp_i(b, imp_e(nax(under_b, m + 1), imp_i(a, nax((a,) + under_b, 1))))
    under_na = (neg(a),) + t
    both = (a,) + under_na
    a_to_b = imp_i(a, ex_falso(imp_e(nax(both, 1), nax(both, 0)), b))
    a_proof = bot_c(imp_e(nax(under_na, m + 1), a_to_b))
    return discharge(nc_transport(ps[0], (a, neg(b)) + t), [a_proof, not_b])


def g_to_nc_neg(d: GcDerivation) -> NcDerivation:
    """From ``gamma => delta`` build ``gamma ++ ~delta |- bot`` in natural deduction."""
    try:
        _check_any(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    return _g_to_nc_neg(d)


def g_to_nc(d: GcDerivation) -> NcDerivation:
    """From ``gamma => delta`` build ``gamma |- big_or(delta)``."""
    refutation = g_to_nc_neg(d)
    g, dl = d.gamma, d.delta
    if not dl:
        return refutation
    goal = big_or(dl)
    u = (neg(goal),) + g
    negs = []
    for i, a in enumerate(dl):
        under = (a,) + u
        negs.append(imp_i(a, imp_e(nax(under, 1), or_inject(nax(under, 0), dl, i))))
    return bot_c(discharge(nc_transport(refutation, neg_list(dl) + u), negs))


# --- Nc -> Gc ---------------------------------------------------------------


def _nc_to_g(d: NcDerivation) -> GcDerivation:
    g, a, rule = d.context, d.formula, d.rule
    if rule == "Nax":
        return gax(g, (a,), d.index, 0)
    rs = [_nc_to_g(p) for p in d.premises]
    if rule == "ImpI":
        return imp_r(rs[0], 0)
    if rule == "AndI":
        return and_r(rs[0], rs[1], 0)
    if rule == "OrI1":
        return or_r(_weaken(rs[0], False, 1, a.rhs), 0)
    if rule == "OrI2":
        return or_r(_weaken(rs[0], False, 0, a.lhs), 0)
    if rule == "ImpE":
        major = rs[0]  # g => A -> B
        c = major.delta[0]
        axiom = gax((a,) + g, (a,), 0, 0)
        use = imp_l(axiom, _weaken(rs[1], False, 1, a), 0)
        return cut(_weaken(major, False, 1, a), use)
    if rule in ("AndE1", "AndE2"):
        c = rs[0].delta[0]
        axiom = gax((c.lhs, c.rhs) + g, (a,), 0 if rule == "AndE1" else 1, 0)
        return cut(_weaken(rs[0], False, 1, a), and_l(axiom, 0))
    if rule == "OrE":
        return cut(_weaken(rs[0], False, 1, a), or_l(rs[1], rs[2], 0))
    if rule == "BotC":
        not_a = neg(a)
        # g => ~a, a
        excluded = imp_r(gax((a,) + g, (BOT, a), 0, 1), 0)
        # ~a :: g => a, removing bot from the right by a cut against GBot
        drop_bot = cut(_weaken(rs[0], False, 1, a), gbot((BOT, not_a) + g, (a,), 0))
        return cut(excluded, drop_bot)
    raise UnknownRule(f"unknown natural deduction rule {rule!r}")


def nc_to_g(d: NcDerivation) -> GcDerivation:
    """From ``gamma |- a`` build ``gamma => [a]``."""
    try:
        check_nc(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    return _nc_to_g(d)
