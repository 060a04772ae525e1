"""Propositional formulas: the AST, a parser for the ASCII syntax, and a printer.

Negation and truth are not constructors.  ``~A`` is stored as ``A -> bot`` and
``top`` as ``bot -> bot``; the printer folds them back.

Grammar (loosest to tightest, every binary connective right-associative)::

    formula := imp
    imp     := or ("->" imp)?
    or      := and ("|" or)?
    and     := unary ("&" and)?
    unary   := "~" unary | atom
    atom    := ident | "bot" | "top" | "(" formula ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ParseError

KEYWORDS = frozenset({"bot", "top"})
IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Bot:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True, slots=True)
class Conj:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Disj:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Impl:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return format_formula(self)


Formula = Union[Var, Bot, Conj, Disj, Impl]

BOT = Bot()


def neg(a: Formula) -> Impl:
    return Impl(a, BOT)


TOP = neg(BOT)


def is_neg(a: Formula) -> bool:
    return type(a) is Impl and type(a.rhs) is Bot


def is_valid_name(name: str) -> bool:
    return bool(IDENT_RE.fullmatch(name)) and name not in KEYWORDS and name.isascii()


def variables_of(*formulas: Formula) -> tuple[str, ...]:
    """Variable names in first-occurrence order (left to right, preorder)."""
    seen: dict[str, None] = {}
    for f in formulas:
        stack = [f]
        while stack:
            g = stack.pop()
            if type(g) is Var:
                seen.setdefault(g.name)
            elif type(g) is not Bot:
                stack.append(g.rhs)
                stack.append(g.lhs)
    return tuple(seen)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if type(f) in (Conj, Disj, Impl):
        yield from subformulas(f.lhs)
        yield from subformulas(f.rhs)


def depth(f: Formula) -> int:
    """Height of the tree; atoms (variables and ``bot``) have depth 1."""
    if type(f) in (Var, Bot):
        return 1
    return 1 + max(depth(f.lhs), depth(f.rhs))


# --- printing ---------------------------------------------------------------

_IMP, _OR, _AND, _UNARY, _ATOM = 1, 2, 3, 4, 5


def _fmt(f: Formula) -> tuple[str, int]:
    t = type(f)
    if t is Var:
        return f.name, _ATOM
    if t is Bot:
        return "bot", _ATOM
    if t is Impl and type(f.rhs) is Bot:
        if type(f.lhs) is Bot:
            return "top", _ATOM
        return "~" + _wrap(f.lhs, _UNARY), _UNARY
    if t is Conj:
        return f"{_wrap(f.lhs, _UNARY)} & {_wrap(f.rhs, _AND)}", _AND
    if t is Disj:
        return f"{_wrap(f.lhs, _AND)} | {_wrap(f.rhs, _OR)}", _OR
    if t is Impl:
        return f"{_wrap(f.lhs, _OR)} -> {_wrap(f.rhs, _IMP)}", _IMP
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f: Formula, level: int) -> str:
    text, own = _fmt(f)
    return text if own >= level else f"({text})"


def format_formula(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that still parse back to ``f``."""
    return _fmt(f)[0]


# --- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(->)|([~&|()])|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        arrow, punct, ident, junk = m.groups()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r}", start)
        if arrow or punct:
            tokens.append((arrow or punct, arrow or punct, start))
        elif ident in KEYWORDS:
            tokens.append((ident, ident, start))
        else:
            tokens.append(("ident", ident, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        if not text.isascii():
            bad = next(i for i, ch in enumerate(text) if not ch.isascii())
            raise ParseError("non-ASCII input", len(text[:bad].encode()))
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> ParseError:
        kind, value, pos = self.tokens[self.i]
        found = "end of input" if kind == "eof" else repr(value)
        return ParseError(f"unexpected {found}", pos, expected)

    def formula(self) -> Formula:
        lhs = self.disj()
        if self.peek() == "->":
            self.take()
            return Impl(lhs, self.formula())
        return lhs

    def disj(self) -> Formula:
        lhs = self.conj()
        if self.peek() == "|":
            self.take()
            return Disj(lhs, self.disj())
        return lhs

    def conj(self) -> Formula:
        lhs = self.unary()
        if self.peek() == "&":
            self.take()
            return Conj(lhs, self.conj())
        return lhs

    def unary(self) -> Formula:
        if self.peek() == "~":
            self.take()
            return neg(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.tokens[self.i]
        if kind == "ident":
            self.take()
            return Var(value)
        if kind == "bot":
            self.take()
            return BOT
        if kind == "top":
            self.take()
            return TOP
        if kind == "(":
            self.take()
            inner = self.formula()
            if self.peek() != ")":
                raise self.fail(("')'", "'->'", "'|'", "'&'"))
            self.take()
            return inner
        raise self.fail(("identifier", "'bot'", "'top'", "'~'", "'('"))


def parse(text: str) -> Formula:
    """Parse the ASCII formula syntax.  Raises :class:`ParseError` with a byte offset."""
    p = _Parser(text)
    if p.peek() == "eof":
        raise ParseError("empty input", p.tokens[0][2], ("formula",))
    f = p.formula()
    if p.peek() != "eof":
        raise p.fail(("'->'", "'|'", "'&'", "end of input"))
    return f


def parse_list(text: str) -> list[Formula]:
    """Comma-separated formulas; blank text is the empty list."""
    if not text.strip():
        return []
    out = []
    offset = 0
    for chunk in text.split(","):
        try:
            out.append(parse(chunk))
        except ParseError as e:
            raise ParseError(e.reason, offset + e.position, e.expected) from None
        offset += len(chunk) + 1
    return out
