"""Recursive-descent parser for algebra elements and scalar literals.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | NAME | "(" expr ")"

Names are ``x`` and ``y`` (generators), ``zeta`` (the context's root of
unity), ``h`` (the normal element of the quantum Weyl algebra) and any
parameter of the scalar context.  Products keep their written order and are
normalized by the algebra's relation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ore import NcPoly, Presentation, h_element
from .scalars import CycloContext, Scalar, ScalarError

__all__ = ["ParseError", "parse_element", "parse_scalar", "tokenize"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        if m.group(1):
            tokens.append(Token("INT", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(Token("NAME", m.group(2), m.start(2)))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(Token("OP", op, m.start(3)))
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, pres: Presentation, ctx: CycloContext, allow_generators: bool):
        self.text = text
        self.pres = pres
        self.ctx = ctx
        self.allow_generators = allow_generators
        self.tokens = tokenize(text)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.i]
        raise ParseError(msg, tok.pos, self.text)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "OP" and tok.value == op:
            self.i += 1
            return True
        return False

    def parse(self) -> NcPoly:
        if self.peek().kind == "END":
            self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "END":
            self.error(f"unexpected {self.peek().value!r}")
        return value

    def expr(self) -> NcPoly:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> NcPoly:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.peek().kind == "OP" and self.peek().value == "/":
                tok = self.take()
                divisor = self.unary()
                if not divisor.is_scalar():
                    self.error("can only divide by a scalar", tok)
                if divisor.is_zero():
                    self.error("division by zero", tok)
                value = value.scale(divisor.scalar_value().inverse())
            else:
                return value

    def unary(self) -> NcPoly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> NcPoly:
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().value == "^":
            tok = self.take()
            sign = -1 if self.accept("-") else 1
            exp_tok = self.take()
            if exp_tok.kind != "INT":
                self.error("expected an integer exponent", exp_tok)
            k = sign * int(exp_tok.value)
            if k < 0:
                if not base.is_scalar():
                    self.error("negative powers are only allowed for scalars", tok)
                if base.is_zero():
                    self.error("zero to a negative power", tok)
                return NcPoly.const(self.pres, self.ctx, base.scalar_value() ** k)
            return base**k
        return base

    def atom(self) -> NcPoly:
        tok = self.take()
        if tok.kind == "INT":
            return NcPoly.const(self.pres, self.ctx, int(tok.value))
        if tok.kind == "NAME":
            name = tok.value
            if name in ("x", "y"):
                if not self.allow_generators:
                    self.error(f"generator {name!r} not allowed in a scalar", tok)
                return NcPoly.x(self.pres, self.ctx) if name == "x" else NcPoly.y(self.pres, self.ctx)
            if name == "zeta":
                return NcPoly.const(self.pres, self.ctx, self.ctx.zeta())
            if name == "h" and not self.ctx.has_param("h"):
                if not self.allow_generators or self.pres is not Presentation.QUANTUM_WEYL:
                    self.error("'h' is only defined in the quantum Weyl algebra", tok)
                return h_element(self.ctx)
            if self.ctx.has_param(name):
                return NcPoly.const(self.pres, self.ctx, self.ctx.param(name))
            self.error(f"unknown symbol {name!r}", tok)
        if tok.kind == "OP" and tok.value == "(":
            value = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return value
        if tok.kind == "END":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.value!r}", tok)


def parse_element(text: str, pres, ctx: CycloContext | None = None) -> NcPoly:
    """Parse ``text`` into a normal-form element of ``pres``."""
    pres = Presentation.parse(pres)
    ctx = ctx or CycloContext()
    pres.check_context(ctx)
    try:
        return _Parser(text, pres, ctx, True).parse()
    except ScalarError as exc:
        raise ParseError(str(exc), 0, text) from exc


def parse_scalar(text: str, ctx: CycloContext | None = None) -> Scalar:
    ctx = ctx or CycloContext()
    try:
        return _Parser(text, Presentation.FIRST_WEYL, ctx, False).parse().scalar_value()
    except ScalarError as exc:
        raise ParseError(str(exc), 0, text) from exc
