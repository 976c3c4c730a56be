"""Recursive-descent parser for polynomial expressions in ``x`` and ``y``.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*      # '/' only by a constant
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | 'x' | 'y' | '(' expr ')'

NUMBER is an integer or a decimal-free rational written with ``/`` (handled
by the division rule), e.g. ``3/4*x^2``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .exactpoly import BivarPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyXY])|(\*\*|[-+*/^()]))")


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character {text[pos:].strip()[:1]!r} at position {pos}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok.lower())
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise PolyParseError(f"expected {expected or 'a token'}, found {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> BivarPoly:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> BivarPoly:
        acc = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.total_degree > 0:
                    raise PolyParseError("division is only allowed by a constant")
                c = rhs.coeff(0, 0)
                if c == 0:
                    raise PolyParseError("division by zero")
                acc = acc / c
        return acc

    def unary(self) -> BivarPoly:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> BivarPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise PolyParseError(f"exponent must be a non-negative integer, found {tok!r}")
            return base ** int(tok)
        return base

    def atom(self) -> BivarPoly:
        tok = self.take()
        if tok.isdigit():
            return BivarPoly.const(Fraction(int(tok)))
        if tok == "x":
            return BivarPoly.x()
        if tok == "y":
            return BivarPoly.y()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise PolyParseError(f"unexpected token {tok!r}")


def parse_poly(text: str) -> BivarPoly:
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial expression")
    p = _Parser(tokens)
    out = p.expr()
    if p.peek() is not None:
        raise PolyParseError(f"trailing input starting at {p.peek()!r}")
    return out
