"""Random and exhaustive sources of formulas and derivations.

Everything takes an explicit ``random.Random`` so runs are reproducible.  The
derivation generators build trees with the checked builders, so whatever they
return already passes its checker.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Sequence

from .formula import BOT, Bot, Conj, Disj, Formula, Impl, Var, neg
from .natded import NcDerivation, and_e1, and_e2, and_i, bot_c, imp_e, imp_i, nax, nc_prepend, or_e, or_i1, or_i2
from .sequent import (
    GcDerivation,
    _weaken,
    _weaken_to,
    and_l,
    and_r,
    cut,
    gax,
    gbot,
    imp_l,
    imp_r,
    or_l,
    or_r,
)
from .cutfree import sizes

DEFAULT_NAMES = ("p", "q", "r", "s")
_BINARY = (Conj, Disj, Impl)


def formulas_up_to(depth: int, atoms: Sequence[Formula]) -> list[Formula]:
    """Every formula of depth at most ``depth`` built from ``atoms`` (atoms have depth 1)."""
    if depth < 1:
        return []
    level = list(dict.fromkeys(atoms))
    for _ in range(depth - 1):
        level = list(atoms) + [op(a, b) for op in _BINARY for a, b in product(level, repeat=2)]
        level = list(dict.fromkeys(level))
    return level


def lists_up_to(items: Sequence, length: int) -> list[tuple]:
    out: list[tuple] = []
    for n in range(length + 1):
        out.extend(product(items, repeat=n))
    return out


def random_formula(rng: random.Random, names: Sequence[str] = DEFAULT_NAMES, depth: int = 4, bot: float = 0.1) -> Formula:
    """A formula of depth at most ``depth``; ``bot`` is the chance a leaf is ``bot``."""
    if depth <= 1 or rng.random() < 0.25:
        return BOT if rng.random() < bot else Var(rng.choice(names))
    if rng.random() < 0.15:
        return neg(random_formula(rng, names, depth - 1, bot))
    op = rng.choice(_BINARY)
    return op(random_formula(rng, names, depth - 1, bot), random_formula(rng, names, depth - 1, bot))


# --- natural deduction -------------------------------------------------------


def random_nc(
    rng: random.Random,
    depth: int = 8,
    names: Sequence[str] = DEFAULT_NAMES,
    ctx: Sequence[Formula] | None = None,
) -> NcDerivation:
    """A checked natural deduction derivation of height at most ``depth``."""
    if ctx is None:
        ctx = tuple(random_formula(rng, names, 3) for _ in range(rng.randint(0, 3)))
    return _nc(rng, tuple(ctx), max(depth, 2), names)


def _nc(rng: random.Random, ctx: tuple, depth: int, names) -> NcDerivation:
    def small() -> Formula:
        return random_formula(rng, names, 2)

    if depth <= 2 or rng.random() < 0.15:
        if ctx and (depth < 2 or rng.random() < 0.8):
            return nax(ctx, rng.randrange(len(ctx)))
        a = small()
        return imp_i(a, nax((a,) + ctx, 0))
    choice = rng.choice(["ImpI", "ImpE", "AndI", "AndE", "OrI", "OrE", "BotC"] if depth >= 4 else ["ImpI", "AndI", "OrI"])
    if choice == "ImpI":
        a = small()
        return imp_i(a, _nc(rng, (a,) + ctx, depth - 1, names))
    if choice == "AndI":
        return and_i(_nc(rng, ctx, depth - 1, names), _nc(rng, ctx, depth - 1, names))
    if choice == "OrI":
        d = _nc(rng, ctx, depth - 1, names)
        return or_i1(d, small()) if rng.random() < 0.5 else or_i2(small(), d)
    if choice == "AndE":
        conj = [i for i, a in enumerate(ctx) if type(a) is Conj]
        if conj and rng.random() < 0.5:
            major = nax(ctx, rng.choice(conj))
        else:
            major = and_i(_nc(rng, ctx, depth - 2, names), _nc(rng, ctx, depth - 2, names))
        return and_e1(major) if rng.random() < 0.5 else and_e2(major)
    if choice == "ImpE":
        minor = _nc(rng, ctx, depth - 1, names)
        a = minor.formula
        major = imp_i(a, _nc(rng, (a,) + ctx, depth - 2, names))
        return imp_e(major, minor)
    if choice == "OrE":
        disj = [i for i, a in enumerate(ctx) if type(a) is Disj]
        if disj and rng.random() < 0.6:
            major = nax(ctx, rng.choice(disj))
        else:
            d = _nc(rng, ctx, depth - 2, names)
            major = or_i1(d, small()) if rng.random() < 0.5 else or_i2(small(), d)
        a, b = major.formula.lhs, major.formula.rhs
        left = _nc(rng, (a,) + ctx, depth - 2, names)
        right = _nc(rng, (b,) + ctx, depth - 2, names)
        c1, c2 = left.formula, right.formula
        return or_e(major, or_i1(left, c2), or_i2(c1, right))
    # BotC: refute ~x for some x already provable, then conclude x classically
    d = _nc(rng, ctx, depth - 2, names)
    x = d.formula
    clash = imp_e(nax((neg(x),) + ctx, 0), nc_prepend(d, neg(x)))
    return bot_c(clash)


# --- sequent calculus --------------------------------------------------------


def _merge_at(xs: tuple, i: int, ys: tuple, j: int) -> tuple[tuple, tuple, int]:
    """Interleave so both ``xs[i]`` and ``ys[j]`` can sit at one shared position.

    Returns the surrounding formulas (left part, right part) and that position.
    """
    head = xs[:i] + ys[:j]
    return head, xs[i + 1 :] + ys[j + 1 :], len(head)


def _ensure(d: GcDerivation, rng, left: bool, n: int, names) -> GcDerivation:
    side = d.gamma if left else d.delta
    while len(side) < n:
        p = rng.randint(0, len(side))
        d = _weaken(d, left, p, random_formula(rng, names, 2))
        side = d.gamma if left else d.delta
    return d


def _gc_leaf(rng: random.Random, names) -> GcDerivation:
    def extras() -> list[Formula]:
        return [random_formula(rng, names, 2) for _ in range(rng.choice((0, 0, 1, 1, 2)))]

    g, dl = extras(), extras()
    if rng.random() < 0.15:
        i = rng.randint(0, len(g))
        return gbot(g[:i] + [BOT] + g[i:], dl, i)
    a = random_formula(rng, names, 2) if rng.random() < 0.3 else Var(rng.choice(names))
    i, j = rng.randint(0, len(g)), rng.randint(0, len(dl))
    return gax(g[:i] + [a] + g[i:], dl[:j] + [a] + dl[j:], i, j)


def random_gc(
    rng: random.Random,
    depth: int = 4,
    names: Sequence[str] = DEFAULT_NAMES,
    force_cut: bool = False,
    max_sizes: int | None = 16,
) -> GcDerivation:
    """A checked sequent derivation of height at most ``depth + 1``.

    ``force_cut`` makes the last rule a Cut.  ``max_sizes`` bounds the
    combined size of the endsequent (by resampling), which keeps cut-free
    proof search on the result cheap.
    """
    while True:
        d = _gc(rng, depth, names, force_cut)
        if max_sizes is None or sizes(d.gamma, d.delta) <= max_sizes:
            return d


def _gc(rng: random.Random, depth: int, names, force_cut: bool = False) -> GcDerivation:
    if depth <= 0 or (not force_cut and rng.random() < 0.2):
        return _gc_leaf(rng, names)
    rule = "Cut" if force_cut else rng.choice(["AndL", "OrL", "ImpL", "AndR", "OrR", "ImpR", "Cut"])
    sub = lambda: _gc(rng, depth - 1, names)  # noqa: E731
    if rule in ("AndL", "OrR"):
        left = rule == "AndL"
        d = _ensure(sub(), rng, left, 2, names)
        side = d.gamma if left else d.delta
        k = rng.randrange(len(side) - 1)
        return and_l(d, k) if left else or_r(d, k)
    if rule == "ImpR":
        d = _ensure(_ensure(sub(), rng, True, 1, names), rng, False, 1, names)
        return imp_r(d, rng.randrange(len(d.delta)))
    if rule in ("OrL", "AndR"):
        left = rule == "OrL"
        p1 = _ensure(sub(), rng, left, 1, names)
        p2 = _ensure(sub(), rng, left, 1, names)
        s1, s2 = (p1.gamma, p2.gamma) if left else (p1.delta, p2.delta)
        i, j = rng.randrange(len(s1)), rng.randrange(len(s2))
        head, tail, k = _merge_at(s1, i, s2, j)
        other = (p1.delta + p2.delta) if left else (p1.gamma + p2.gamma)
        if left:
            p1 = _weaken_to(p1, head + (s1[i],) + tail, other)
            p2 = _weaken_to(p2, head + (s2[j],) + tail, other)
            return or_l(p1, p2, k)
        p1 = _weaken_to(p1, other, head + (s1[i],) + tail)
        p2 = _weaken_to(p2, other, head + (s2[j],) + tail)
        return and_r(p1, p2, k)
    if rule == "ImpL":
        p1 = _ensure(sub(), rng, True, 1, names)
        p2 = _ensure(sub(), rng, False, 1, names)
        i = rng.randrange(len(p1.gamma))
        b, a = p1.gamma[i], p2.delta[0]
        rest = p1.gamma[:i] + p2.gamma + p1.gamma[i + 1 :]
        k = i + len(p2.gamma)
        dl = p1.delta + p2.delta[1:]
        p1 = _weaken_to(p1, rest[:k] + (b,) + rest[k:], dl)
        p2 = _weaken_to(p2, rest, (a,) + dl)
        return imp_l(p1, p2, k)
    # Cut: one premise is used as is, the other is weakened with the cut formula
    if rng.random() < 0.5:
        p1 = _ensure(sub(), rng, False, 1, names)
        a = p1.delta[0]
        p2 = sub()
        if not (p2.gamma and p2.gamma[0] == a):
            p2 = _weaken(p2, True, 0, a)
    else:
        p2 = _ensure(sub(), rng, True, 1, names)
        a = p2.gamma[0]
        p1 = sub()
        if not (p1.delta and p1.delta[0] == a):
            p1 = _weaken(p1, False, 0, a)
    g = p1.gamma + p2.gamma[1:]
    dl = p1.delta[1:] + p2.delta
    p1 = _weaken_to(p1, g, (a,) + dl)
    p2 = _weaken_to(p2, (a,) + g, dl)
    return cut(p1, p2)
