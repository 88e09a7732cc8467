"""Recursive-descent parser for polynomial expressions.

Grammar: integer and rational (a/b) literals, declared variable names,
binary + - *, exponentiation with ^ (integer exponent, binds tightest),
unary minus, parentheses.  Implicit multiplication is not allowed.
Errors carry the character offset at which parsing failed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(
                f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
            )
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num")), m.start("num")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.vars = tuple(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", pos)
        return result

    def expr(self) -> Polynomial:
        left = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                right = self.term()
                left = left + right if val == "+" else left - right
            else:
                return left

    def term(self) -> Polynomial:
        left = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                left = left * self.unary()
            else:
                return left

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "^":
                self.advance()
                kind, e, pos = self.peek()
                if kind != "num":
                    raise ExprSyntaxError("exponent must be a non-negative integer", pos)
                self.advance()
                base = base**e
            else:
                return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.advance()
        if kind == "num":
            nkind, nval, _ = self.peek()
            if nkind == "op" and nval == "/":
                self.advance()
                dkind, denom, dpos = self.peek()
                if dkind != "num":
                    raise ExprSyntaxError("expected integer denominator", dpos)
                if denom == 0:
                    raise ExprSyntaxError("zero denominator", dpos)
                self.advance()
                return Polynomial.constant(self.vars, Fraction(val, denom))
            return Polynomial.constant(self.vars, val)
        if kind == "name":
            if val not in self.vars:
                raise ExprSyntaxError(f"unknown identifier {val!r}", pos)
            return Polynomial.variable(self.vars, val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(
            "expected a number, variable, or parenthesized expression", pos
        )


def parse_expression(text: str, variable_context) -> Polynomial:
    return _Parser(text, tuple(variable_context)).parse()
