"""Text frontend for ground programs (``.lp``) and interpretations.

Grammar (whitespace-insensitive, ``%`` starts a line comment)::

    program := rule*
    rule    := head? (":-" body)? "."
    head    := atom (";" atom)*
    body    := lit ("," lit)*
    lit     := atom | "not" atom | "not" "not" atom
    atom    := [a-z][A-Za-z0-9_]*
"""
from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .errors import ParseError
from .program import AtomSet, Mode, Program, Rule, classify, make_program

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<if>:-)
  | (?P<punct>[.,;{}])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[Token]:
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        column = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind, value = m.lastgroup, m.group()
        if kind == "ident":
            if not value[0].islower():
                raise ParseError(
                    f"identifier {value!r} must start with a lowercase letter", line, column
                )
            yield Token("not" if value == "not" else "atom", value, line, column)
        elif kind in ("if", "punct"):
            yield Token(value, value, line, column)
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    column = pos - line_start + 1
    yield Token("eof", "", line, column)


class _Parser:
    def __init__(self, text):
        self.tokens = list(_tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"expected {expected}, found {found}", t.line, t.column)

    def expect(self, kind, what=None):
        if self.tok.kind != kind:
            self.fail(what or repr(kind))
        return self.advance()

    def program(self) -> list[Rule]:
        rules = []
        while self.tok.kind != "eof":
            rules.append(self.rule())
        return rules

    def rule(self) -> Rule:
        head = []
        if self.tok.kind == "atom":
            head.append(self.advance().text)
            while self.tok.kind == ";":
                self.advance()
                head.append(self.expect("atom", "an atom").text)
        pos, neg, nneg = [], [], []
        if self.tok.kind == ":-":
            self.advance()
            self.literal(pos, neg, nneg)
            while self.tok.kind == ",":
                self.advance()
                self.literal(pos, neg, nneg)
        if self.tok.kind != ".":
            self.fail("'.'" if head or pos or neg or nneg else "a rule")
        self.advance()
        return Rule(AtomSet(head), AtomSet(pos), AtomSet(neg), AtomSet(nneg))

    def literal(self, pos, neg, nneg):
        if self.tok.kind != "not":
            pos.append(self.expect("atom", "a literal").text)
            return
        self.advance()
        if self.tok.kind == "not":
            self.advance()
            nneg.append(self.expect("atom", "an atom").text)
        else:
            neg.append(self.expect("atom", "an atom").text)


def parse_program(text: str, mode: Mode | str | None = None) -> Program:
    """Parse ``.lp`` text.  ``mode=None`` auto-detects the program class."""
    parser = _Parser(text)
    rules = parser.program()
    if mode is None:
        mode = classify(Program(rules))
    if Mode(mode) is Mode.NONDISJUNCTIVE:
        # locate the first double negation for a positioned diagnostic
        for t, nxt in zip(parser.tokens, parser.tokens[1:]):
            if t.kind == "not" and nxt.kind == "not":
                raise ParseError(
                    "'not not' is only allowed in disjunctive programs", nxt.line, nxt.column
                )
    return make_program(rules, mode)


def render_program(program: Program) -> str:
    """Canonical text: one rule per line, atoms sorted within each part."""
    return str(program)


def parse_atomset(text: str) -> AtomSet:
    """Parse ``p,q,r`` or ``{p, q, r}``; the empty string and ``{}`` mean the empty set."""
    tokens = list(_tokenize(text))
    if tokens[0].kind == "{":
        if tokens[-2].kind != "}":
            t = tokens[-1]
            raise ParseError("expected '}'", t.line, t.column)
        tokens = tokens[1:-2] + tokens[-1:]
    atoms = []
    expect_atom = True
    for t in tokens[:-1]:
        if expect_atom and t.kind == "atom":
            atoms.append(t.text)
        elif not expect_atom and t.kind == ",":
            pass
        else:
            raise ParseError(f"unexpected {t.text!r} in atom set", t.line, t.column)
        expect_atom = not expect_atom
    if atoms and expect_atom:
        t = tokens[-1]
        raise ParseError("trailing ',' in atom set", t.line, t.column)
    return AtomSet(atoms)
