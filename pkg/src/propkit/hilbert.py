"""Hilbert calculus: axiom schemata plus modus ponens.

Axiom leaves record the schema name and the formulas filling its
metavariables; the checker rebuilds the instance and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import BadArity, BadIndex, PreconditionViolated, ProofError, RuleMismatch, UnknownRule
from .formula import Conj, Disj, Formula, Impl, format_formula, neg
from .natded import (
    Context,
    NcDerivation,
    and_e1,
    and_e2,
    and_i,
    bot_c,
    check_nc,
    imp_e,
    imp_i,
    nax,
    nc_weaken,
    or_e,
    or_i1,
    or_i2,
    show_judgement,
)


def _imp(*parts: Formula) -> Formula:
    out = parts[-1]
    for a in reversed(parts[:-1]):
        out = Impl(a, out)
    return out


SCHEMATA: dict[str, tuple[int, Callable[..., Formula]]] = {
    "HOrI1": (2, lambda a, b: _imp(a, Disj(a, b))),
    "HOrI2": (2, lambda a, b: _imp(b, Disj(a, b))),
    "HAndI": (2, lambda a, b: _imp(a, b, Conj(a, b))),
    "HOrE": (3, lambda a, b, c: _imp(Disj(a, b), Impl(a, c), Impl(b, c), c)),
    "HAndE1": (2, lambda a, b: _imp(Conj(a, b), a)),
    "HAndE2": (2, lambda a, b: _imp(Conj(a, b), b)),
    "HS": (3, lambda a, b, c: _imp(_imp(a, b, c), Impl(a, b), a, c)),
    "HK": (2, lambda a, b: _imp(a, b, a)),
    "HClas": (1, lambda a: _imp(neg(neg(a)), a)),
}


def axiom_instance(schema: str, args: Sequence[Formula]) -> Formula:
    if schema not in SCHEMATA:
        raise UnknownRule(f"unknown axiom schema {schema!r}")
    n, build = SCHEMATA[schema]
    if len(args) != n:
        raise BadArity(f"{schema} takes {n} formulas, found {len(args)}")
    return build(*args)


@dataclass(frozen=True, slots=True)
class HcDerivation:
    rule: str  # Hass | Hax | HImpE
    context: Context
    formula: Formula
    premises: tuple[HcDerivation, ...] = ()
    index: int | None = None
    schema: str | None = None
    aux: tuple[Formula, ...] = ()  # Hax: schema arguments; HImpE: (cut formula,)

    def nodes(self) -> Iterator[tuple[tuple[int, ...], HcDerivation]]:
        stack: list[tuple[tuple[int, ...], HcDerivation]] = [((), self)]
        while stack:
            path, d = stack.pop()
            yield path, d
            for i in range(len(d.premises) - 1, -1, -1):
                stack.append((path + (i,), d.premises[i]))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())


_ARITY = {"Hass": 0, "Hax": 0, "HImpE": 2}


def check_node(d: HcDerivation, path: tuple[int, ...] = ()) -> None:
    if d.rule not in _ARITY:
        raise UnknownRule(f"unknown Hilbert rule {d.rule!r}", path)
    if len(d.premises) != _ARITY[d.rule]:
        raise BadArity(f"{d.rule} takes {_ARITY[d.rule]} premises, found {len(d.premises)}", path)
    if d.rule != "Hass" and d.index is not None:
        raise BadIndex(f"{d.rule} takes no index", path)
    if d.rule != "Hax" and d.schema is not None:
        raise RuleMismatch(f"{d.rule} takes no axiom schema", path)
    if d.rule == "Hass":
        i = d.index
        if type(i) is not int or not 0 <= i < len(d.context):
            raise BadIndex(f"Hass index {i!r} outside a context of length {len(d.context)}", path)
        if d.aux:
            raise BadArity("Hass stores no formulas", path)
        if d.context[i] != d.formula:
            raise RuleMismatch(
                f"Hass index {i} holds {format_formula(d.context[i])}, not {format_formula(d.formula)}", path
            )
    elif d.rule == "Hax":
        try:
            instance = axiom_instance(d.schema, d.aux)
        except ProofError as e:
            raise type(e)(e.message, path) from None
        if instance != d.formula:
            raise RuleMismatch(
                f"{d.schema} instance is {format_formula(instance)}, not {format_formula(d.formula)}", path
            )
    else:
        if len(d.aux) != 1:
            raise BadArity("HImpE stores exactly one cut formula", path)
        cut = d.aux[0]
        want = [(d.context, Impl(cut, d.formula)), (d.context, cut)]
        for k, (w, p) in enumerate(zip(want, d.premises)):
            if (p.context, p.formula) != w:
                raise RuleMismatch(
                    f"HImpE premise {k}: expected {show_judgement(*w)}, found {show_judgement(p.context, p.formula)}",
                    path,
                )


def check_hc(d: HcDerivation) -> tuple[Context, Formula]:
    for path, node in d.nodes():
        check_node(node, path)
    return d.context, d.formula


# --- builders ---------------------------------------------------------------


def hass(ctx: Sequence[Formula], index: int) -> HcDerivation:
    ctx = tuple(ctx)
    if not 0 <= index < len(ctx):
        raise BadIndex(f"Hass index {index} outside a context of length {len(ctx)}")
    return HcDerivation("Hass", ctx, ctx[index], index=index)


def hax(ctx: Sequence[Formula], schema: str, *args: Formula) -> HcDerivation:
    return HcDerivation("Hax", tuple(ctx), axiom_instance(schema, args), schema=schema, aux=tuple(args))


def mp(major: HcDerivation, minor: HcDerivation) -> HcDerivation:
    if type(major.formula) is not Impl:
        raise RuleMismatch(f"HImpE needs an implication, found {format_formula(major.formula)}")
    d = HcDerivation("HImpE", major.context, major.formula.rhs, (major, minor), aux=(minor.formula,))
    check_node(d)
    return d


def hc_identity(ctx: Sequence[Formula], a: Formula) -> HcDerivation:
    """``ctx |-H a -> a`` from S and K."""
    s = hax(ctx, "HS", a, Impl(a, a), a)
    k1 = hax(ctx, "HK", a, Impl(a, a))
    k2 = hax(ctx, "HK", a, a)
    return mp(mp(s, k1), k2)


def _shift_down(d: HcDerivation, ctx: Context) -> HcDerivation:
    """Drop the head of the context from a proof that never uses it."""
    if d.rule == "Hass":
        return HcDerivation("Hass", ctx, d.formula, index=d.index - 1)
    if d.rule == "Hax":
        return HcDerivation("Hax", ctx, d.formula, schema=d.schema, aux=d.aux)
    premises = tuple(_shift_down(p, ctx) for p in d.premises)
    return HcDerivation("HImpE", ctx, d.formula, premises, aux=d.aux)


def _deduce(d: HcDerivation, a: Formula, ctx: Context, uses: dict[int, bool]) -> HcDerivation:
    if d.rule == "Hass" and d.index == 0:
        return hc_identity(ctx, a)
    if d.rule == "HImpE" and _uses_head(d, uses):
        major, minor = d.premises
        cut = d.aux[0]
        s = hax(ctx, "HS", a, cut, d.formula)
        return mp(mp(s, _deduce(major, a, ctx, uses)), _deduce(minor, a, ctx, uses))
    return mp(hax(ctx, "HK", d.formula, a), _shift_down(d, ctx))


def _uses_head(d: HcDerivation, memo: dict[int, bool]) -> bool:
    key = id(d)
    if key not in memo:
        if d.rule == "Hass":
            memo[key] = d.index == 0
        else:
            memo[key] = any(_uses_head(p, memo) for p in d.premises)
    return memo[key]


def hc_deduction(d: HcDerivation) -> HcDerivation:
    """Turn a proof of ``a :: ctx |-H b`` into one of ``ctx |-H a -> b``.

    The hypothesis ``a`` itself becomes the S/K identity, subtrees that never
    use it are lifted whole with K, and modus ponens steps that do use it are
    rebuilt with S.
    """
    try:
        check_hc(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    if not d.context:
        raise PreconditionViolated("deduction needs a nonempty context")
    return _deduce(d, d.context[0], d.context[1:], {})


def _hc_deduction_unchecked(d: HcDerivation) -> HcDerivation:
    return _deduce(d, d.context[0], d.context[1:], {})


# --- Nc <-> Hc ---------------------------------------------------------------


def _nc_to_hc(d: NcDerivation) -> HcDerivation:
    ctx, a, rule = d.context, d.formula, d.rule
    if rule == "Nax":
        return hass(ctx, d.index)
    ps = d.premises
    if rule == "ImpI":
        return _hc_deduction_unchecked(_nc_to_hc(ps[0]))
    if rule == "ImpE":
        return mp(_nc_to_hc(ps[0]), _nc_to_hc(ps[1]))
    if rule == "BotC":
        not_not = _hc_deduction_unchecked(_nc_to_hc(ps[0]))
        return mp(hax(ctx, "HClas", a), not_not)
    if rule == "AndI":
        return mp(mp(hax(ctx, "HAndI", a.lhs, a.rhs), _nc_to_hc(ps[0])), _nc_to_hc(ps[1]))
    if rule == "AndE1":
        return mp(hax(ctx, "HAndE1", a, d.aux[0]), _nc_to_hc(ps[0]))
    if rule == "AndE2":
        return mp(hax(ctx, "HAndE2", d.aux[0], a), _nc_to_hc(ps[0]))
    if rule == "OrI1":
        return mp(hax(ctx, "HOrI1", a.lhs, a.rhs), _nc_to_hc(ps[0]))
    if rule == "OrI2":
        return mp(hax(ctx, "HOrI2", a.lhs, a.rhs), _nc_to_hc(ps[0]))
    if rule == "OrE":
        left, right = d.aux
        elim = mp(hax(ctx, "HOrE", left, right, a), _nc_to_hc(ps[0]))
        elim = mp(elim, _hc_deduction_unchecked(_nc_to_hc(ps[1])))
        return mp(elim, _hc_deduction_unchecked(_nc_to_hc(ps[2])))
    raise UnknownRule(f"unknown natural deduction rule {rule!r}")


def nc_to_hc(d: NcDerivation) -> HcDerivation:
    """Translate a checked natural deduction proof into a Hilbert proof of the same judgement."""
    try:
        check_nc(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    return _nc_to_hc(d)


def _axiom_template(schema: str, args: Sequence[Formula]) -> NcDerivation:
    """Closed natural deduction proof of an axiom instance."""
    if schema == "HOrI1":
        a, b = args
        return imp_i(a, or_i1(nax((a,), 0), b))
    if schema == "HOrI2":
        a, b = args
        return imp_i(b, or_i2(a, nax((b,), 0)))
    if schema == "HAndI":
        a, b = args
        ctx = (b, a)
        return imp_i(a, imp_i(b, and_i(nax(ctx, 1), nax(ctx, 0))))
    if schema == "HOrE":
        a, b, c = args
        ctx = (Impl(b, c), Impl(a, c), Disj(a, b))
        left = imp_e(nax((a,) + ctx, 2), nax((a,) + ctx, 0))
        right = imp_e(nax((b,) + ctx, 1), nax((b,) + ctx, 0))
        body = or_e(nax(ctx, 2), left, right)
        return imp_i(Disj(a, b), imp_i(Impl(a, c), imp_i(Impl(b, c), body)))
    if schema == "HAndE1":
        a, b = args
        return imp_i(Conj(a, b), and_e1(nax((Conj(a, b),), 0)))
    if schema == "HAndE2":
        a, b = args
        return imp_i(Conj(a, b), and_e2(nax((Conj(a, b),), 0)))
    if schema == "HS":
        a, b, c = args
        abc, ab = _imp(a, b, c), Impl(a, b)
        ctx = (a, ab, abc)
        body = imp_e(imp_e(nax(ctx, 2), nax(ctx, 0)), imp_e(nax(ctx, 1), nax(ctx, 0)))
        return imp_i(abc, imp_i(ab, imp_i(a, body)))
    if schema == "HK":
        a, b = args
        return imp_i(a, imp_i(b, nax((b, a), 1)))
    if schema == "HClas":
        (a,) = args
        nn = neg(neg(a))
        ctx = (neg(a), nn)
        return imp_i(nn, bot_c(imp_e(nax(ctx, 1), nax(ctx, 0))))
    raise UnknownRule(f"unknown axiom schema {schema!r}")


def _hc_to_nc(d: HcDerivation) -> NcDerivation:
    if d.rule == "Hass":
        return nax(d.context, d.index)
    if d.rule == "Hax":
        return nc_weaken(_axiom_template(d.schema, d.aux), d.context, [])
    return imp_e(_hc_to_nc(d.premises[0]), _hc_to_nc(d.premises[1]))


def hc_to_nc(d: HcDerivation) -> NcDerivation:
    """Translate a checked Hilbert proof into a natural deduction proof of the same judgement."""
    try:
        check_hc(d)
    except ProofError as e:
        raise PreconditionViolated(f"input does not check: {e}") from None
    return _hc_to_nc(d)
