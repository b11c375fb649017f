"""Parsing of the text forms for classes, K-classes and expressions.

One small expression grammar serves every text form::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := NUMBER | NAME ['(' expr (',' expr)* ')'] | '(' expr ')'

Evaluation is delegated to a namespace of names and callables, so the same
parser reads ``1/2*h1*h2 + h1`` as a Chow class and ``3*O(1,0) - O`` as a
K-class.  Errors carry the offending token and its character position.
"""
from __future__ import annotations

import re
from fractions import Fraction


class ParseError(ValueError):
    def __init__(self, message, text=None, pos=None, token=None):
        self.text = text
        self.pos = pos
        self.token = token
        where = ""
        if pos is not None:
            where = f" at position {pos}"
            if token is not None:
                where = f" at token {token!r} (position {pos})"
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^(),]))"
)


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos, text[pos])
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if value == "**":
            value = "^"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, names, functions):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.names = names
        self.functions = functions

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2], tok[1] or "<end>")

    def expect(self, value):
        tok = self.peek()
        if tok[1] != value or tok[0] == "end":
            self.fail(f"expected {value!r}")
        return self.advance()

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            tok = self.advance()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not isinstance(rhs, (int, Fraction)):
                    self.fail("division is only defined by rational numbers", tok)
                if rhs == 0:
                    self.fail("division by zero", tok)
                value = value / rhs
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.advance()
            value = self.unary()
            return value if tok[1] == "+" else -value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.advance()
            sign = 1
            if self.peek()[1] == "-":
                self.advance()
                sign = -1
            tok = self.peek()
            if tok[0] != "num":
                self.fail("exponent must be an integer literal")
            self.advance()
            m = sign * int(tok[1])
            if m < 0:
                if isinstance(base, (int, Fraction)) and base != 0:
                    return Fraction(base) ** m
                self.fail("negative powers are only defined for nonzero rationals", tok)
            return base ** m
        return base

    def atom(self):
        tok = self.peek()
        kind, value, _ = tok
        if kind == "num":
            self.advance()
            return Fraction(int(value))
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            self.advance()
            if self.peek()[1] == "(" and self.peek()[0] == "op":
                if value not in self.functions:
                    self.fail("unknown function", tok)
                self.advance()
                args = [] if self.peek()[1] == ")" else [self.expr()]
                while args and self.peek()[1] == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                try:
                    return self.functions[value](*args)
                except ParseError:
                    raise
                except (ValueError, TypeError) as exc:
                    raise ParseError(f"{value}(...): {exc}", self.text, tok[2], value) from exc
            if value not in self.names:
                self.fail("unknown name", tok)
            return self.names[value]
        self.fail("unexpected token")


def evaluate(text, names=None, functions=None):
    """Parse and evaluate ``text`` against a namespace."""
    return _Parser(text, names or {}, functions or {}).parse()


def poly_namespace(caps):
    from .graded import SparsePoly

    return {f"h{i + 1}": SparsePoly.gen(caps, i) for i in range(len(caps))}


def parse_poly(text, caps):
    from .graded import SparsePoly

    value = evaluate(text, poly_namespace(caps))
    if isinstance(value, (int, Fraction)):
        value = SparsePoly.constant(caps, value)
    return value


def parse_int(text, what="integer"):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParseError(f"expected {what}", text, 0, text) from None
