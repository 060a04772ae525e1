"""Truth-value semantics and finite entailment checking.

A valuation is a plain ``dict`` from variable name to ``bool``; names that are
missing evaluate to ``False``.  Entailment is decided by enumerating every
valuation of the variables that actually occur, which is enough because a
formula's value depends on nothing else.

Valuations are enumerated in counting order: variables in first-occurrence
order, ``False`` before ``True``, the last variable flipping fastest.  The
first countervaluation found is the one reported.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import TooManyVariables
from .formula import Bot, Conj, Disj, Formula, Impl, Var, variables_of

Valuation = Mapping[str, bool]

MAX_VARIABLES = 24


def evaluate(v: Valuation, f: Formula) -> bool:
    t = type(f)
    if t is Var:
        return v.get(f.name, False)
    if t is Bot:
        return False
    if t is Conj:
        return evaluate(v, f.lhs) and evaluate(v, f.rhs)
    if t is Disj:
        return evaluate(v, f.lhs) or evaluate(v, f.rhs)
    if t is Impl:
        return not evaluate(v, f.lhs) or evaluate(v, f.rhs)
    raise TypeError(f"not a formula: {f!r}")


def satisfies(v: Valuation, ctx: Iterable[Formula]) -> bool:
    return all(evaluate(v, a) for a in ctx)


def validates(v: Valuation, delta: Iterable[Formula]) -> bool:
    """Some member of ``delta`` is true (so the empty list validates nothing)."""
    return any(evaluate(v, a) for a in delta)


def valuations(names: Sequence[str], cap: int = MAX_VARIABLES) -> Iterator[dict[str, bool]]:
    if len(names) > cap:
        raise TooManyVariables(f"{len(names)} variables exceeds the enumeration cap of {cap}")
    for bits in product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def sequent_countermodel(
    gamma: Sequence[Formula], delta: Sequence[Formula], cap: int = MAX_VARIABLES
) -> dict[str, bool] | None:
    """First valuation satisfying all of ``gamma`` and none of ``delta``, or ``None``."""
    names = variables_of(*gamma, *delta)
    for v in valuations(names, cap):
        if satisfies(v, gamma) and not validates(v, delta):
            return v
    return None


def find_countermodel(
    ctx: Sequence[Formula], f: Formula, cap: int = MAX_VARIABLES
) -> dict[str, bool] | None:
    """First valuation satisfying ``ctx`` but falsifying ``f``, or ``None`` if ``ctx`` entails ``f``."""
    return sequent_countermodel(ctx, [f], cap)


def models(ctx: Sequence[Formula], f: Formula, cap: int = MAX_VARIABLES) -> bool:
    return find_countermodel(ctx, f, cap) is None


def sequent_models(gamma: Sequence[Formula], delta: Sequence[Formula], cap: int = MAX_VARIABLES) -> bool:
    return sequent_countermodel(gamma, delta, cap) is None


def is_valid(f: Formula, cap: int = MAX_VARIABLES) -> bool:
    return models([], f, cap)


def truth_table(f: Formula, cap: int = MAX_VARIABLES) -> tuple[tuple[str, ...], list[tuple[dict[str, bool], bool]]]:
    names = variables_of(f)
    return names, [(v, evaluate(v, f)) for v in valuations(names, cap)]


def format_valuation(v: Valuation) -> str:
    return ",".join(f"{k}={'true' if v[k] else 'false'}" for k in sorted(v))


def parse_valuation(text: str) -> dict[str, bool]:
    out: dict[str, bool] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        name, value = name.strip(), value.strip().lower()
        if not sep or not name or value not in ("true", "false"):
            raise ValueError(f"bad valuation entry {item!r}; expected name=true or name=false")
        out[name] = value == "true"
    return out
