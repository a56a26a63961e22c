"""Parser for polynomial expressions in x.

Grammar (no implicit multiplication):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER ("/" NUMBER)? | "x" | "(" expr ")"
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .exactmath import UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("x", None, start))
        else:
            out.append((m.group(3), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok):
        if tok[0] == "end":
            return "end of input"
        if tok[0] == "num":
            return f"number {tok[1]}"
        return repr(tok[0])

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(tok[1], den[1])
            return UniPoly((value,))
        if tok[0] == "x":
            self.take()
            return UniPoly((0, 1))
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {self._describe(tok)}", tok[2])


def parse_poly(text):
    """Parse an expression such as ``"x^4+2*x^2-12"`` into a UniPoly."""
    p = _Parser(text)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    out = p.expr()
    p.take("end")
    return out


def parse_coeffs(text):
    """Degree-descending comma separated coefficients, e.g. ``"1,0,2,0,-12"``."""
    parts = text.split(",")
    coeffs = []
    pos = 0
    for part in parts:
        s = part.strip()
        try:
            coeffs.append(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient {s!r}", pos) from None
        pos += len(part) + 1
    return UniPoly.from_descending(coeffs)


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", 0) from None
