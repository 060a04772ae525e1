"""One JSON envelope for derivations of all four calculi.

The root object is an ordinary node with two extra keys, ``format`` and
``calculus``.  Every node carries ``rule`` and ``premises``; the rest depends on
the calculus::

    nc, hc    "context": [str], "formula": str
    gc, gcf   "sequent": {"gamma": [str], "delta": [str]}

plus the rule parameters that are present: ``index`` (assumption position),
``aux`` (stored formulas such as cut formulas), ``axiom`` (Hilbert schema name
and its arguments) and ``pos`` (sequent positions).  Formulas are written in the
grammar of :mod:`propkit.formula`.  Output uses sorted keys and no whitespace,
so equal derivations serialize to equal bytes.

Loading only checks the shape of the document.  Whether the rules are applied
correctly is the checker's job, so a tampered file loads fine and then fails
:func:`check_derivation` with the path of the offending node.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .cutfree import GcfDerivation, check_gcf
from .errors import ParseError, SerializationError
from .formula import Formula, format_formula, parse
from .hilbert import HcDerivation, check_hc
from .natded import NcDerivation, check_nc
from .sequent import GcDerivation, check_gc

FORMAT = "propkit-derivation/1"
CALCULI = ("nc", "hc", "gc", "gcf")

Derivation = Union[NcDerivation, HcDerivation, GcDerivation, GcfDerivation]

_CLASS = {"nc": NcDerivation, "hc": HcDerivation, "gc": GcDerivation, "gcf": GcfDerivation}
_KEYS = {
    "nc": {"rule", "premises", "context", "formula", "index", "aux"},
    "hc": {"rule", "premises", "context", "formula", "index", "aux", "axiom"},
    "gc": {"rule", "premises", "sequent", "pos", "aux"},
}
_KEYS["gcf"] = _KEYS["gc"]


def calculus_of(d: Derivation) -> str:
    for name, cls in _CLASS.items():
        if type(d) is cls:
            return name
    raise SerializationError(f"not a derivation: {type(d).__name__}")


def check_derivation(d: Derivation):
    """Run the checker matching ``d``'s calculus."""
    return {"nc": check_nc, "hc": check_hc, "gc": check_gc, "gcf": check_gcf}[calculus_of(d)](d)


# --- writing ---------------------------------------------------------------


def _to_obj(d: Derivation, calculus: str, fmt) -> dict[str, Any]:
    out: dict[str, Any] = {"rule": d.rule, "premises": [_to_obj(p, calculus, fmt) for p in d.premises]}
    if calculus in ("nc", "hc"):
        out["context"] = [fmt(a) for a in d.context]
        out["formula"] = fmt(d.formula)
        if d.index is not None:
            out["index"] = d.index
    else:
        out["sequent"] = {"gamma": [fmt(a) for a in d.gamma], "delta": [fmt(a) for a in d.delta]}
        if d.pos:
            out["pos"] = list(d.pos)
    if calculus == "hc" and d.schema is not None:
        out["axiom"] = {"schema": d.schema, "args": [fmt(a) for a in d.aux]}
    elif d.aux:
        out["aux"] = [fmt(a) for a in d.aux]
    return out


def to_json(d: Derivation) -> str:
    calculus = calculus_of(d)
    cache: dict[Formula, str] = {}

    def fmt(a: Formula) -> str:
        s = cache.get(a)
        if s is None:
            s = cache[a] = format_formula(a)
        return s

    obj = _to_obj(d, calculus, fmt)
    obj["format"] = FORMAT
    obj["calculus"] = calculus
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


# --- reading ---------------------------------------------------------------


class _Reader:
    def __init__(self, calculus: str):
        self.calculus = calculus
        self.cls = _CLASS[calculus]
        self.cache: dict[str, Formula] = {}

    def formula(self, s: Any, where: str) -> Formula:
        if not isinstance(s, str):
            raise SerializationError(f"{where}: formula must be a string")
        f = self.cache.get(s)
        if f is None:
            try:
                f = self.cache[s] = parse(s)
            except ParseError as e:
                raise SerializationError(f"{where}: {e}") from None
        return f

    def formulas(self, xs: Any, where: str) -> tuple[Formula, ...]:
        if not isinstance(xs, list):
            raise SerializationError(f"{where}: expected a list of formulas")
        return tuple(self.formula(s, where) for s in xs)

    def node(self, obj: Any, where: str) -> Derivation:
        if not isinstance(obj, dict):
            raise SerializationError(f"{where}: node must be an object")
        extra = set(obj) - _KEYS[self.calculus] - ({"format", "calculus"} if where == "root" else set())
        if extra:
            raise SerializationError(f"{where}: unexpected keys {sorted(extra)}")
        rule = obj.get("rule")
        if not isinstance(rule, str):
            raise SerializationError(f"{where}: missing rule name")
        prem = obj.get("premises")
        if not isinstance(prem, list):
            raise SerializationError(f"{where}: premises must be a list")
        premises = tuple(self.node(p, f"{where}.{i}") for i, p in enumerate(prem))
        aux = self.formulas(obj.get("aux", []), where)
        if self.calculus in ("nc", "hc"):
            ctx = self.formulas(obj.get("context"), where)
            a = self.formula(obj.get("formula"), where)
            index = obj.get("index")
            if index is not None and type(index) is not int:
                raise SerializationError(f"{where}: index must be an integer")
            if self.calculus == "nc":
                return NcDerivation(rule, ctx, a, premises, index, aux)
            schema = None
            if "axiom" in obj:
                ax = obj["axiom"]
                if not isinstance(ax, dict) or set(ax) != {"schema", "args"} or not isinstance(ax["schema"], str):
                    raise SerializationError(f"{where}: axiom must hold a schema name and args")
                if "aux" in obj:
                    raise SerializationError(f"{where}: axiom nodes keep their formulas under axiom.args")
                schema, aux = ax["schema"], self.formulas(ax["args"], where)
            return HcDerivation(rule, ctx, a, premises, index, schema, aux)
        seq = obj.get("sequent")
        if not isinstance(seq, dict) or set(seq) != {"gamma", "delta"}:
            raise SerializationError(f"{where}: sequent must hold gamma and delta")
        pos = obj.get("pos", [])
        if not isinstance(pos, list) or any(type(k) is not int for k in pos):
            raise SerializationError(f"{where}: pos must be a list of integers")
        return self.cls(
            rule, self.formulas(seq["gamma"], where), self.formulas(seq["delta"], where), premises, tuple(pos), aux
        )


def from_json(text: str | bytes) -> Derivation:
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SerializationError(f"not JSON: {e}") from None
    if not isinstance(obj, dict):
        raise SerializationError("root: derivation document must be an object")
    if obj.get("format") != FORMAT:
        raise SerializationError(f"root: format must be {FORMAT!r}")
    calculus = obj.get("calculus")
    if calculus not in CALCULI:
        raise SerializationError(f"root: calculus must be one of {', '.join(CALCULI)}")
    try:
        return _Reader(calculus).node(obj, "root")
    except RecursionError:
        raise SerializationError("derivation is nested too deeply") from None
