"""Polynomial expressions and variety spec files.

Expression grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := INT | VAR | "(" expr ")"
    VAR    := x0 .. x9, or x, y, z, w as aliases for x0 .. x3

Spec files are line oriented ``key=value`` with ``#`` comments::

    p=3                       # base prime (or a bare ``global`` line)
    ambient=projective        # affine | projective
    dim=2
    poly=y^2*z - x^3 + x*z^2  # repeatable
    builtin=P1                # point, A1, A2, Gm, P1, P2 (instead of ambient/dim/poly)
    times=A1                  # optional: the product with the affine line
"""

import re

from ..poly import IntPoly

ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]\d*)|(.))")


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1) + 1))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2) + 1))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", column=m.start(3) + 1)
            tokens.append(("op", ch, m.start(3) + 1))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, nvars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, col = self.take()
        if kind != "op" or v != value:
            raise ParseError(f"expected {value!r}", column=col)

    def expr(self):
        left = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        left = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            left = left * self.unary()
        return left

    def unary(self):
        kind, v, _ = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            inner = self.unary()
            return -inner if v == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, v, col = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", column=col)
            return base**v
        return base

    def atom(self):
        kind, v, col = self.take()
        if kind == "int":
            return IntPoly.const(self.nvars, v)
        if kind == "var":
            if v in ALIASES:
                idx = ALIASES[v]
            elif v[0] == "x" and v[1:].isdigit() and len(v) == 2:
                idx = int(v[1:])
            else:
                raise ParseError(f"unknown variable {v!r}", column=col)
            if idx >= self.nvars:
                raise ParseError(f"variable {v!r} is outside the {self.nvars} ambient coordinates", column=col)
            return IntPoly.var(self.nvars, idx)
        if kind == "op" and v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of expression", column=col)
        raise ParseError(f"unexpected {v!r}", column=col)


def parse_polynomial(text, nvars):
    """Parse an integer polynomial in ``nvars`` coordinates."""
    p = _Parser(text, nvars)
    result = p.expr()
    kind, v, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {v!r}", column=col)
    return result
