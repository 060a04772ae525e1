"""Cut-free sequent proofs by backward search, and cut elimination through it.

The search is deterministic: it decomposes the leftmost compound formula on
the left, then the leftmost compound on the right, and closes an atomic
sequent with ``GBot`` before trying an axiom.  Every rule removes exactly one
connective, so the combined size of the sequent drops by one per step and the
search terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add
from typing import Sequence

from .errors import InternalSoundnessBreach, PreconditionViolated, ProofError
from .formula import Bot, Conj, Disj, Formula, Impl, Var, variables_of
from .normalforms import map_fold_right
from .sequent import GcDerivation, check_gc, check_node, expected_premises


@dataclass(frozen=True, slots=True)
class GcfDerivation(GcDerivation):
    """A sequent derivation restricted to the cut-free rules with atomic axioms."""


def size(f: Formula) -> int:
    """Number of binary connectives; atoms and ``bot`` count zero."""
    n, stack = 0, [f]
    while stack:
        g = stack.pop()
        if type(g) in (Conj, Disj, Impl):
            n += 1
            stack.append(g.lhs)
            stack.append(g.rhs)
    return n


def sizel(xs: Sequence[Formula]) -> int:
    return map_fold_right(size, add, 0, xs)


def sizes(gamma: Sequence[Formula], delta: Sequence[Formula]) -> int:
    return sizel(gamma) + sizel(delta)


def check_gcf(d: GcDerivation) -> tuple[tuple[Formula, ...], tuple[Formula, ...]]:
    for path, node in d.nodes():
        check_node(node, path, cut_free=True)
    return d.gamma, d.delta


def _compound(xs: Sequence[Formula]) -> int | None:
    for i, a in enumerate(xs):
        if type(a) in (Conj, Disj, Impl):
            return i
    return None


_LEFT = {Conj: "AndL", Disj: "OrL", Impl: "ImpL"}
_RIGHT = {Conj: "AndR", Disj: "OrR", Impl: "ImpR"}


def _search(gamma: tuple, delta: tuple) -> GcfDerivation | dict[str, bool]:
    k = _compound(gamma)
    if k is not None:
        rule = _LEFT[type(gamma[k])]
    else:
        k = _compound(delta)
        rule = _RIGHT[type(delta[k])] if k is not None else None
    if rule is None:
        for i, a in enumerate(gamma):
            if type(a) is Bot:
                return GcfDerivation("GBot", gamma, delta, (), (i,))
        for i, a in enumerate(gamma):
            if type(a) is Var and a in delta:
                return GcfDerivation("Gax", gamma, delta, (), (i, delta.index(a)))
        return {a.name: True for a in gamma if type(a) is Var}
    node = GcfDerivation(rule, gamma, delta, (), (k,))
    before = sizes(gamma, delta)
    premises = []
    for g2, d2 in expected_premises(node):
        if sizes(g2, d2) >= before:
            raise InternalSoundnessBreach(f"{rule} premise does not shrink the sequent")
        sub = _search(g2, d2)
        if isinstance(sub, dict):
            return sub
        premises.append(sub)
    return GcfDerivation(rule, gamma, delta, tuple(premises), (k,))


def gcf_prove(gamma: Sequence[Formula], delta: Sequence[Formula]) -> GcfDerivation | dict[str, bool]:
    """A cut-free proof of ``gamma => delta`` or a valuation refuting it.

    The valuation is defined on every variable of the sequent.
    """
    gamma, delta = tuple(gamma), tuple(delta)
    out = _search(gamma, delta)
    if isinstance(out, dict):
        return {x: out.get(x, False) for x in variables_of(*gamma, *delta)}
    return out


def cut_elimination(d: GcDerivation) -> GcfDerivation:
    """A cut-free derivation of the same endsequent as ``d``."""
    try:
        check_gc(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    out = gcf_prove(d.gamma, d.delta)
    if isinstance(out, dict):
        raise InternalSoundnessBreach(f"checked derivation has a countervaluation {out}")
    return out
