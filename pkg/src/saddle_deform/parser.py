"""Recursive-descent parser for scalar and one-form expressions.

Grammar::

    expr   := ['-'|'+'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := rational | 'i' | var | '(' expr ')' | 'exp' '(' expr ')'
            | 'd' '(' expr ')' | basis
    basis  := 'd' var          (dx, dy, dz1, du1, ...)
    rational := int ('/' uint)?

Only exact literals are accepted.  Parsing yields a small AST; evaluating it
in a :class:`VarContext` yields a :class:`TruncatedSeries` or a
:class:`OneForm`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormSyntaxError, UnknownVariable
from .exact import I
from .forms import OneForm, ext_d
from .series import TruncatedSeries, VarContext

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Imag:
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: object
    pos: int


FormExpression = object


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] == "int":
            raise FormSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise FormSyntaxError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise FormSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.next()
            node = self.term()
            if tok[1] == "-":
                node = Neg(node, tok[2])
        else:
            node = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.next()
                node = BinOp(tok[1], node, self.term(), tok[2])
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.next()
                node = BinOp("*", node, self.factor(), tok[2])
            else:
                return node

    def factor(self):
        node = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.next()
            e = self.next()
            if e[0] != "int":
                raise FormSyntaxError("exponent must be a non-negative integer", e[2])
            node = Pow(node, int(e[1]), tok[2])
        return node

    def atom(self):
        tok = self.next()
        kind, val, pos = tok
        if kind == "int":
            num = Fraction(int(val))
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "int":
                    raise FormSyntaxError("denominator must be an unsigned integer", den[2])
                if int(den[1]) == 0:
                    raise FormSyntaxError("zero denominator", den[2])
                num = Fraction(int(val), int(den[1]))
            return Num(num, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            nxt = self.peek()
            if val in ("exp", "d") and nxt[0] == "op" and nxt[1] == "(":
                self.next()
                arg = self.expr()
                self.expect(")")
                return Call(val, arg, pos)
            if val == "i":
                return Imag(pos)
            return Name(val, pos)
        if kind == "end":
            raise FormSyntaxError("unexpected end of input", pos)
        raise FormSyntaxError(f"unexpected {val!r}", pos)


def parse_expression(text: str) -> FormExpression:
    """Parse ``text`` into an AST (no context needed)."""
    if re.search(r"\d\.\d|\d[eE][+-]?\d", text):
        m = re.search(r"\d\.\d|\d[eE][+-]?\d", text)
        raise FormSyntaxError("floating-point literals are not allowed", m.start())
    return _Parser(text).parse()


def _is_form(v):
    return isinstance(v, OneForm)


def evaluate(node, ctx: VarContext):
    """Evaluate an AST to a scalar series or a one-form in ``ctx``."""
    if isinstance(node, Num):
        return TruncatedSeries.const(ctx, node.value)
    if isinstance(node, Imag):
        return TruncatedSeries.const(ctx, I)
    if isinstance(node, Name):
        name = node.name
        if name in ctx.names or name == ctx.t:
            return TruncatedSeries.var(ctx, name)
        if name.startswith("d") and name[1:] in ctx.names:
            return OneForm(ctx, {name: 1})
        if name.startswith("d") and name[1:] == ctx.t:
            raise FormSyntaxError("the parameter t has no differential", node.pos)
        raise UnknownVariable(f"unknown variable {name!r} at position {node.pos}")
    if isinstance(node, Neg):
        return -evaluate(node.arg, ctx)
    if isinstance(node, BinOp):
        a = evaluate(node.left, ctx)
        b = evaluate(node.right, ctx)
        if node.op in "+-":
            if _is_form(a) != _is_form(b):
                if _is_form(a) and not b.terms or _is_form(b) and not a.terms:
                    # adding the scalar 0 to a form is harmless
                    a = a if _is_form(a) else OneForm.zero(ctx)
                    b = b if _is_form(b) else OneForm.zero(ctx)
                else:
                    raise FormSyntaxError("cannot add a scalar and a one-form", node.pos)
            return a + b if node.op == "+" else a - b
        if _is_form(a) and _is_form(b):
            raise FormSyntaxError("product of two one-forms is not a one-form", node.pos)
        if _is_form(a):
            return a * b
        if _is_form(b):
            return b * a
        return a * b
    if isinstance(node, Pow):
        base = evaluate(node.base, ctx)
        if _is_form(base):
            raise FormSyntaxError("cannot raise a one-form to a power", node.pos)
        return base ** node.exponent
    if isinstance(node, Call):
        arg = evaluate(node.arg, ctx)
        if _is_form(arg):
            raise FormSyntaxError(f"{node.func}() needs a scalar argument", node.pos)
        return arg.exp() if node.func == "exp" else ext_d(arg)
    raise TypeError(f"unknown node {node!r}")


def parse_scalar(text: str, ctx: VarContext) -> TruncatedSeries:
    v = evaluate(parse_expression(text), ctx)
    if _is_form(v):
        raise FormSyntaxError("expected a scalar expression, got a one-form", 0)
    return v


def parse_form(text: str, ctx: VarContext) -> OneForm:
    v = evaluate(parse_expression(text), ctx)
    if not _is_form(v):
        if not v.terms:
            return OneForm.zero(ctx)
        raise FormSyntaxError("expected a one-form, got a scalar expression", 0)
    return v
