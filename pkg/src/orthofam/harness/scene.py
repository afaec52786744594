"""Scene description language: tokenizer, recursive-descent parser, checker and printer.

A scene is a sequence of statements separated by newlines or ``;``::

    point A = (0, 0)
    triangle T = A (4, 0) (0, 3)        # juxtaposed items
    triangle T' = pedal(circumcenter(T), T)
    family F = T T'
    query orthology_center T T'

Items are numbers, strings, names, calls ``f(x, ...)``, or parenthesized
tuples.  A call needs its ``(`` directly after the name; ``A (4, 0)`` is two
items.  Arithmetic is allowed inside parentheses and call arguments.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

KINDS = ("point", "line", "triangle", "family", "conic", "scalar")


class SceneError(Exception):
    """Base class of scene errors."""


class SceneSyntaxError(SceneError, SyntaxError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected, self.found = line, col, expected, found
        msg = f"line {line}, column {col}: expected {expected}"
        if found:
            msg += f", found {found}"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class SceneNameError(SceneError, NameError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SceneTypeError(SceneError, TypeError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


# --------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    text: str


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class Tup:
    items: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Num, Str, Name, Call, Tup, BinOp, Neg]


@dataclass(frozen=True)
class Decl:
    kind: str
    name: str
    items: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Query:
    op: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SceneDoc:
    """Ordered statements: object declarations and queries."""

    declarations: tuple

    @property
    def objects(self) -> tuple:
        return tuple(s for s in self.declarations if isinstance(s, Decl))

    @property
    def queries(self) -> tuple:
        return tuple(s for s in self.declarations if isinstance(s, Query))


# --------------------------------------------------------------------------
# tokens


@dataclass(frozen=True)
class Token:
    type: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<number>\d+(?:\.\d+)?|\.\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*'*)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[=(),;+\-*/])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> Iterator[Token]:
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise SceneSyntaxError(line, col, "a token", repr(text[pos]))
        kind = m.lastgroup
        if kind == "newline":
            yield Token("newline", "\n", line, col)
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            yield Token(kind, m.group(), line, col)
        pos = m.end()
    yield Token("eof", "", line, pos - line_start + 1)


def _describe(tok: Token) -> str:
    if tok.type == "eof":
        return "end of input"
    if tok.type == "newline":
        return "end of line"
    return repr(tok.text)


class _Parser:
    def __init__(self, text: str):
        self.toks = list(tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.type == "punct" and self.tok.text == text

    def expect(self, text: str, expected: str | None = None) -> Token:
        if not self.at(text):
            self.fail(expected or repr(text))
        return self.advance()

    def fail(self, expected: str):
        raise SceneSyntaxError(self.tok.line, self.tok.col, expected, _describe(self.tok))

    # statements

    def document(self) -> SceneDoc:
        out = []
        while self.tok.type != "eof":
            if self.tok.type == "newline" or self.at(";"):
                self.advance()
                continue
            out.append(self.statement())
            if not (self.tok.type in ("newline", "eof") or self.at(";")):
                self.fail("end of statement")
        return SceneDoc(tuple(out))

    def statement(self):
        t = self.tok
        if t.type != "name":
            self.fail("a declaration or 'query'")
        if t.text == "query":
            self.advance()
            if self.tok.type != "name":
                self.fail("an operation name")
            op = self.advance().text
            return Query(op, self.items(), t.line)
        if t.text in KINDS:
            self.advance()
            if self.tok.type != "name":
                self.fail("a name")
            name = self.advance().text
            self.expect("=")
            items = self.items()
            if not items:
                self.fail("an expression")
            return Decl(t.text, name, items, t.line)
        self.fail("one of " + ", ".join(KINDS + ("query",)))

    def items(self) -> tuple:
        out = []
        while not (self.tok.type in ("newline", "eof") or self.at(";")):
            out.append(self.item())
        return tuple(out)

    def item(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.item())
        return self.atom()

    # expressions

    def expr(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            left = BinOp(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        t = self.tok
        if t.type == "number":
            self.advance()
            return Num(t.text)
        if t.type == "string":
            self.advance()
            return Str(t.text[1:-1])
        if t.type == "name":
            self.advance()
            nxt = self.tok
            # a call needs the parenthesis glued to the name: ``f(x)`` but ``A (4, 0)``
            if self.at("(") and nxt.line == t.line and nxt.col == t.col + len(t.text):
                self.advance()
                args = []
                if not self.at(")"):
                    args.append(self.expr())
                    while self.at(","):
                        self.advance()
                        args.append(self.expr())
                self.expect(")", "')' or ','")
                return Call(t.text, tuple(args))
            return Name(t.text)
        if self.at("("):
            self.advance()
            first = self.expr()
            if self.at(")"):
                self.advance()
                return first
            items = [first]
            while self.at(","):
                self.advance()
                items.append(self.expr())
            self.expect(")", "')' or ','")
            return Tup(tuple(items))
        self.fail("a number, name, string or '('")


def parse_syntax(text: str) -> SceneDoc:
    """Parse without name or kind checking."""
    return _Parser(text).document()


def parse_scene(text: str, check: bool = True) -> SceneDoc:
    """Parse and statically check a scene."""
    doc = parse_syntax(text)
    if check:
        from .evaluate import check_scene

        check_scene(doc)
    return doc


# --------------------------------------------------------------------------
# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(e: Expr, prec: int = 0) -> str:
    if isinstance(e, Num):
        return e.text
    if isinstance(e, Str):
        return f'"{e.value}"'
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Call):
        return f"{e.func}(" + ", ".join(format_expr(a) for a in e.args) + ")"
    if isinstance(e, Tup):
        return "(" + ", ".join(format_expr(a) for a in e.items) + ")"
    if isinstance(e, Neg):
        return "-" + format_expr(e.operand, 3)
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        s = f"{format_expr(e.left, p)} {e.op} {format_expr(e.right, p + 1)}"
        return f"({s})" if p < prec else s
    raise TypeError(f"not an expression: {e!r}")


def format_item(e: Expr) -> str:
    if isinstance(e, BinOp):
        return f"({format_expr(e)})"
    if isinstance(e, Neg):
        return "-" + format_item(e.operand)
    return format_expr(e)


def format_statement(s) -> str:
    if isinstance(s, Decl):
        return f"{s.kind} {s.name} = " + " ".join(format_item(i) for i in s.items)
    return " ".join(["query", s.op] + [format_item(a) for a in s.args])


def pretty(doc: SceneDoc) -> str:
    return "".join(format_statement(s) + "\n" for s in doc.declarations)
