"""Reader and printer for the COPS-style plain-text CTRS format.

::

    (CONDITIONTYPE ORIENTED)
    (VAR x y)
    (RULES
      min(x,y) -> x | le(x,y) == true
      le(0,y) -> true
    )

Identifiers declared in ``VAR`` are variables, everything else is a function
symbol.  Lines starting with ``%`` are comments, and a ``(COMMENT ...)``
section is skipped.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from .ctrs import CTRS, CTRSError, LhsVariableError, Rule
from .terms import App, Term, Var


class ParseError(CTRSError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnsupportedSemantics(CTRSError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "(", ")", ",", "|", "->", "==", "ident" or "eof"
    text: str
    line: int
    column: int


_PUNCT = re.compile(r"->|==|[(),|]")
_IDENT = re.compile(r"(?:(?!->|==)[^\s(),|])+")


def tokenize(text: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith("%"):
            continue
        col = 0
        while col < len(line):
            ch = line[col]
            if ch.isspace():
                col += 1
                continue
            m = _PUNCT.match(line, col) or _IDENT.match(line, col)
            kind = m.group() if m.re is _PUNCT else "ident"
            tokens.append(Token(kind, m.group(), lineno, col + 1))
            col = m.end()
    last = len(text.splitlines()) or 1
    tokens.append(Token("eof", "", last + 1, 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.variables: set[str] = set()

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{message} (found {found!r})", tok.line, tok.column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            self.error(f"expected {text or kind!r}")
        self.pos += 1
        return tok

    def at_section(self, name: str) -> bool:
        nxt = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else self.tok
        return self.tok.kind == "(" and nxt.kind == "ident" and nxt.text == name

    def skip_comment_sections(self):
        while self.at_section("COMMENT"):
            depth = 0
            while True:
                tok = self.tok
                if tok.kind == "eof":
                    self.error("unterminated COMMENT section")
                self.pos += 1
                if tok.kind == "(":
                    depth += 1
                elif tok.kind == ")":
                    depth -= 1
                    if depth == 0:
                        break

    def parse_file(self) -> CTRS:
        self.skip_comment_sections()
        if self.at_section("CONDITIONTYPE"):
            self.expect("(")
            self.expect("ident")
            kind = self.expect("ident")
            if kind.text != "ORIENTED":
                raise UnsupportedSemantics(
                    f"line {kind.line}, column {kind.column}: condition type "
                    f"{kind.text} is not supported (only ORIENTED)"
                )
            self.expect(")")
            self.skip_comment_sections()
        self.expect("(")
        self.expect("ident", "VAR")
        while self.tok.kind == "ident":
            self.variables.add(self.tok.text)
            self.pos += 1
        self.expect(")")
        self.skip_comment_sections()
        self.expect("(")
        self.expect("ident", "RULES")
        rules = []
        while self.tok.kind != ")":
            rules.append(self.parse_rule(str(len(rules) + 1)))
        self.expect(")")
        self.skip_comment_sections()
        if self.tok.kind != "eof":
            self.error("unexpected trailing input")
        return CTRS(tuple(rules))

    def parse_rule(self, label: str) -> Rule:
        start = self.tok
        lhs = self.parse_term()
        self.expect("->")
        rhs = self.parse_term()
        conditions = []
        if self.tok.kind == "|":
            self.pos += 1
            conditions.append(self.parse_condition())
            while self.tok.kind == ",":
                self.pos += 1
                conditions.append(self.parse_condition())
        if isinstance(lhs, Var):
            raise LhsVariableError(
                f"line {start.line}, column {start.column}: left-hand side {lhs} "
                f"of rule {label} is a variable"
            )
        return Rule(label, lhs, rhs, tuple(conditions))

    def parse_condition(self) -> tuple[Term, Term]:
        s = self.parse_term()
        self.expect("==")
        return s, self.parse_term()

    def parse_term(self) -> Term:
        name = self.expect("ident")
        if self.tok.kind != "(":
            if name.text in self.variables:
                return Var(name.text)
            return App(name.text)
        if name.text in self.variables:
            self.error(f"variable {name.text} applied to arguments", name)
        self.pos += 1
        args = [self.parse_term()]
        while self.tok.kind == ",":
            self.pos += 1
            args.append(self.parse_term())
        self.expect(")")
        return App(name.text, args)


def parse_ctrs(text: str) -> CTRS:
    return _Parser(text).parse_file()


def parse_term(text: str, variables: Iterable[str] | str = ()) -> Term:
    """Parse a single term; ``variables`` may be a space-separated string."""
    if isinstance(variables, str):
        variables = variables.split()
    p = _Parser(text)
    p.variables = set(variables)
    t = p.parse_term()
    if p.tok.kind != "eof":
        p.error("unexpected trailing input")
    return t


def format_ctrs(R: CTRS) -> str:
    from .terms import variables as vars_of

    names = vars_of(*R.rules)
    lines = ["(CONDITIONTYPE ORIENTED)", f"(VAR {' '.join(names)})", "(RULES"]
    lines += [f"  {rule}" for rule in R.rules]
    lines.append(")")
    return "\n".join(lines) + "\n"
