"""Expression language for words.

Grammar (``.`` binds loosest, then ``*``, then ``^``):

    expr    := tens ('.' tens)*
    tens    := power (('*' | U+22A0) power)*
    power   := whisk ('^' INT)*
    whisk   := (INT U+25C1)* primary (U+25B7 INT)*
    primary := 'gen' NAME | 'id' '(' INT ')' | 'dup' | 'del'
             | 'braid' '(' INT ',' INT ')' | 'branch' '(' INT ',' INT ')'
             | 'fm' '[' INT '->' INT ':' [INT (',' INT)*] ']'
             | 'pad' '(' INT ',' expr ',' INT ')' | '(' expr ')'

Map atoms denote length-0 words read in the opposite direction, so ``dup``
is a word 1 -> 2 and ``del`` a word 1 -> 0. Unicode operators are accepted
on input and never printed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .alphabet import Alphabet
from .errors import ArityError, ParseError
from .finmap import FinMap, braid, branch, f0, f2
from .words import (Word, compose_words, gen_word, identity_word, op_word,
                    tensor_power, tensor_words, whisker)


class Expr:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class EGen(Expr):
    name: str


@dataclass(frozen=True, slots=True)
class EId(Expr):
    n: int


@dataclass(frozen=True, slots=True)
class EMap(Expr):
    src: int
    tgt: int
    table: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class EBraid(Expr):
    m: int
    m2: int


@dataclass(frozen=True, slots=True)
class EBranch(Expr):
    a: int
    m: int


@dataclass(frozen=True, slots=True)
class EDup(Expr):
    pass


@dataclass(frozen=True, slots=True)
class EDel(Expr):
    pass


@dataclass(frozen=True, slots=True)
class ECompose(Expr):
    parts: tuple[Expr, ...]


@dataclass(frozen=True, slots=True)
class ETensor(Expr):
    parts: tuple[Expr, ...]


@dataclass(frozen=True, slots=True)
class EPower(Expr):
    base: Expr
    k: int


@dataclass(frozen=True, slots=True)
class EPad(Expr):
    q: int
    body: Expr
    p: int


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[.*^(),\[\]:⊠◁▷])
""", re.VERBOSE)

_KEYWORDS = {"gen", "id", "dup", "del", "braid", "branch", "fm", "pad"}


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            toks.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.next()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end'!r}", pos)

    def integer(self) -> int:
        kind, text, pos = self.next()
        if kind != "int":
            raise ParseError(f"expected an integer, found {text!r}", pos)
        return int(text)

    def expr(self) -> Expr:
        parts = [self.tens()]
        while self.peek()[1] == ".":
            self.next()
            parts.append(self.tens())
        return parts[0] if len(parts) == 1 else ECompose(tuple(parts))

    def tens(self) -> Expr:
        parts = [self.power()]
        while self.peek()[1] in ("*", "⊠"):
            self.next()
            parts.append(self.power())
        return parts[0] if len(parts) == 1 else ETensor(tuple(parts))

    def power(self) -> Expr:
        e = self.whisk()
        while self.peek()[1] == "^":
            self.next()
            e = EPower(e, self.integer())
        return e

    def whisk(self) -> Expr:
        q = 0
        while (self.peek()[0] == "int"
               and self.toks[self.i + 1][1] == "◁"):
            q += self.integer()
            self.next()
        e = self.primary()
        p = 0
        while self.peek()[1] == "▷":
            self.next()
            p += self.integer()
        if q or p:
            return EPad(q, e, p)
        return e

    def primary(self) -> Expr:
        kind, text, pos = self.next()
        if text == "(":
            e = self.expr()
            self.expect(")")
            return e
        if text == "gen":
            kind2, name, pos2 = self.next()
            if kind2 != "name" or name in _KEYWORDS:
                raise ParseError("expected a generator name after 'gen'", pos2)
            return EGen(name)
        if text == "id":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return EId(n)
        if text == "dup":
            return EDup()
        if text == "del":
            return EDel()
        if text in ("braid", "branch"):
            self.expect("(")
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect(")")
            return EBraid(a, b) if text == "braid" else EBranch(a, b)
        if text == "pad":
            self.expect("(")
            q = self.integer()
            self.expect(",")
            e = self.expr()
            self.expect(",")
            p = self.integer()
            self.expect(")")
            return EPad(q, e, p)
        if text == "fm":
            self.expect("[")
            src = self.integer()
            self.expect("->")
            tgt = self.integer()
            self.expect(":")
            table = []
            if self.peek()[0] == "int":
                table.append(self.integer())
                while self.peek()[1] == ",":
                    self.next()
                    table.append(self.integer())
            self.expect("]")
            return EMap(src, tgt, tuple(table))
        raise ParseError(f"unexpected token {text or 'end'!r}", pos)


def parse(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    kind, tok, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {tok!r}", pos)
    return e


_PREC_COMPOSE, _PREC_TENSOR, _PREC_POWER, _PREC_ATOM = 0, 1, 2, 3


def _prec(e: Expr) -> int:
    if isinstance(e, ECompose):
        return _PREC_COMPOSE
    if isinstance(e, ETensor):
        return _PREC_TENSOR
    if isinstance(e, EPower):
        return _PREC_POWER
    return _PREC_ATOM


def print_expr(e: Expr) -> str:
    if isinstance(e, EGen):
        return f"gen {e.name}"
    if isinstance(e, EId):
        return f"id({e.n})"
    if isinstance(e, EDup):
        return "dup"
    if isinstance(e, EDel):
        return "del"
    if isinstance(e, EBraid):
        return f"braid({e.m},{e.m2})"
    if isinstance(e, EBranch):
        return f"branch({e.a},{e.m})"
    if isinstance(e, EMap):
        return f"fm[{e.src}->{e.tgt}: {','.join(map(str, e.table))}]"
    if isinstance(e, EPad):
        return f"pad({e.q}, {print_expr(e.body)}, {e.p})"
    if isinstance(e, ECompose):
        return " . ".join(_child(part, _PREC_TENSOR) for part in e.parts)
    if isinstance(e, ETensor):
        return " * ".join(_child(part, _PREC_POWER) for part in e.parts)
    if isinstance(e, EPower):
        return f"{_child(e.base, _PREC_POWER)}^{e.k}"
    raise TypeError(f"not an expression: {e!r}")


def _child(e: Expr, need: int) -> str:
    text = print_expr(e)
    return f"({text})" if _prec(e) < need else text


def elaborate(e: Expr, alphabet: Alphabet) -> Word:
    if isinstance(e, EGen):
        return gen_word(alphabet.lookup(e.name))
    if isinstance(e, EId):
        return identity_word(e.n)
    if isinstance(e, EDup):
        return op_word(f2())
    if isinstance(e, EDel):
        return op_word(f0())
    if isinstance(e, EBraid):
        return op_word(braid(e.m, e.m2))
    if isinstance(e, EBranch):
        return op_word(branch(e.a, e.m))
    if isinstance(e, EMap):
        return op_word(FinMap(e.src, e.tgt, e.table))
    if isinstance(e, EPad):
        return whisker(e.q, elaborate(e.body, alphabet), e.p)
    if isinstance(e, EPower):
        return tensor_power(elaborate(e.base, alphabet), e.k)
    if isinstance(e, ETensor):
        out = elaborate(e.parts[0], alphabet)
        for part in e.parts[1:]:
            out = tensor_words(out, elaborate(part, alphabet))
        return out
    if isinstance(e, ECompose):
        out = elaborate(e.parts[0], alphabet)
        for part in e.parts[1:]:
            nxt = elaborate(part, alphabet)
            if out.tgt != nxt.src:
                raise ArityError(
                    f"cannot compose onto {print_expr(part)!r}: "
                    f"{out.tgt} strands meet {nxt.src}")
            out = compose_words(out, nxt)
        return out
    raise TypeError(f"not an expression: {e!r}")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    return elaborate(parse(text), alphabet)


def map_expr(f: FinMap) -> Expr:
    if f.is_identity:
        return EId(f.src)
    return EMap(f.src, f.tgt, f.table)


def word_expr(w: Word) -> Expr:
    """A canonical expression that elaborates back to w (its decomposition)."""
    parts: list[Expr] = []
    if len(w) == 0 or not w.boundaries[0].is_identity:
        parts.append(map_expr(w.boundaries[0]))
    for (l, g, r), b in zip(w.letters, w.boundaries[1:]):
        parts.append(EPad(l, EGen(g.name), r) if l or r else EGen(g.name))
        if not b.is_identity:
            parts.append(map_expr(b))
    if len(parts) == 1:
        return parts[0]
    return ECompose(tuple(parts))


def print_word(w: Word) -> str:
    return print_expr(word_expr(w))
