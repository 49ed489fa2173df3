"""Text format for programs.

Grammar::

    program   := statement*
    statement := rule "."
    rule      := head? (":-" body?)?
    head      := atom ("|" atom)*
    body      := literal ("," literal)*
    literal   := atom | "not" atom
    atom      := [a-z][A-Za-z0-9_]*

"%" starts a comment running to the end of the line; whitespace is
insignificant. ``a.`` is a fact, ``:- .`` is the contradictory rule.

One extension beyond the grammar above: atom names starting with the
reserved gadget prefix ``_g`` are accepted, so that programs produced by
the reduction constructions can be read back. No other underscore-initial
name is allowed, and uppercase-initial identifiers are always rejected.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Optional

from .errors import ParseError
from .program import FRESH_PREFIX, AtomTable, Program, Rule

IDENT_RE = re.compile(r"_g[A-Za-z0-9_]*|[a-z][A-Za-z0-9_]*")

_PUNCT = (":-", "|", ",", ".")


class _Token(NamedTuple):
    kind: str  # "ident", "not", ":-", "|", ",", "."
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith(":-", i):
            tokens.append(_Token(":-", ":-", line, col))
            i += 2
            col += 2
            continue
        if ch in "|,.":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        match = IDENT_RE.match(text, i)
        if match:
            word = match.group()
            kind = "not" if word == "not" else "ident"
            tokens.append(_Token(kind, word, line, col))
            i = match.end()
            col += len(word)
            continue
        if ch.isupper():
            raise ParseError("identifiers must start with a lowercase letter", line, col)
        if ch == "_":
            raise ParseError(
                f"only the reserved {FRESH_PREFIX!r} prefix may start with an underscore",
                line,
                col,
            )
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], table: AtomTable):
        self.tokens = tokens
        self.pos = 0
        self.table = table

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token(".", ".", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.col + len(last.text))
        self.pos += 1
        return tok

    def expect_atom(self) -> int:
        tok = self.take()
        if tok.kind == "not":
            raise ParseError("the keyword 'not' cannot be used as an atom", tok.line, tok.col)
        if tok.kind != "ident":
            raise ParseError(f"expected an atom, found {tok.text!r}", tok.line, tok.col)
        return self.table.intern(tok.text)

    def statement(self) -> Rule:
        head: list[int] = []
        pos: list[int] = []
        neg: list[int] = []
        tok = self.peek()
        if tok is not None and tok.kind == "ident":
            head.append(self.expect_atom())
            while self.peek() is not None and self.peek().kind == "|":
                self.take()
                head.append(self.expect_atom())
        tok = self.peek()
        if tok is not None and tok.kind == ":-":
            self.take()
            nxt = self.peek()
            if nxt is not None and nxt.kind in ("ident", "not"):
                while True:
                    lit = self.take()
                    if lit.kind == "not":
                        neg.append(self.expect_atom())
                    else:
                        pos.append(self.table.intern(lit.text))
                    sep = self.peek()
                    if sep is not None and sep.kind == ",":
                        self.take()
                        continue
                    break
        dot = self.take()
        if dot.kind != ".":
            raise ParseError(f"expected '.', found {dot.text!r}", dot.line, dot.col)
        return Rule(tuple(head), tuple(pos), tuple(neg))


def parse_program(text: str, table: Optional[AtomTable] = None) -> Program:
    """Parse program text into a :class:`Program`.

    Raises :class:`ParseError` with line/column information on malformed
    input. Atom ids are assigned in first-occurrence order.
    """
    table = table if table is not None else AtomTable()
    parser = _Parser(_tokenize(text), table)
    rules = []
    while parser.peek() is not None:
        rules.append(parser.statement())
    return Program(rules, table)


def serialize_rule(r: Rule, table: AtomTable) -> str:
    head = " | ".join(table.name(a) for a in r.head)
    body_parts = [table.name(a) for a in r.pos] + [f"not {table.name(a)}" for a in r.neg]
    body = ", ".join(body_parts)
    if head and body:
        return f"{head} :- {body}."
    if head:
        return f"{head}."
    if body:
        return f":- {body}."
    return ":- ."


def serialize_program(p: Program) -> str:
    """Render ``p`` in the text format; one statement per line.

    Round-trips: parsing the result yields a program structurally
    identical to ``p``.
    """
    return "\n".join(serialize_rule(r, p.table) for r in p.rules)
