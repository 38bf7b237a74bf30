"""Text syntax for polynomials.

Grammar (whitespace is ignored between tokens)::

    expr   := sign? term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"
    NAME   := [A-Za-z_][A-Za-z0-9_]*

Integer coefficients are reduced mod p when a ring is supplied.
:func:`parse_univariate` evaluates the same grammar, plus ``/`` between
integer factors, to a rational univariate polynomial (used for Hilbert
polynomials).
"""

from __future__ import annotations

import re
from fractions import Fraction

from fsplit.algebra import Polynomial, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}: {text!r}")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent producing an AST of nested tuples."""

    def __init__(self, text: str, allow_division: bool = False):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_division = allow_division

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", self.text, 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return node

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        node = self.term()
        if sign < 0:
            node = ("neg", node)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = ("add", node, rhs if op == "+" else ("neg", rhs))
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            tok = self.take()
            if tok[0] == "/" and not self.allow_division:
                raise ParseError("division is not allowed here", self.text, tok[2])
            rhs = self.factor()
            node = ("mul" if tok[0] == "*" else "div", node, rhs)
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            node = ("pow", node, self.take("int")[1])
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return ("int", tok[1])
        if tok[0] == "name":
            self.take()
            return ("name", tok[1], tok[2])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", self.text, tok[2])


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    tree = _Parser(text).parse()

    def ev(node):
        kind = node[0]
        if kind == "int":
            return ring.constant(node[1])
        if kind == "name":
            if node[1] not in ring.variables:
                raise ParseError(f"unknown variable {node[1]!r}", text, node[2])
            return ring.var(node[1])
        if kind == "neg":
            return -ev(node[1])
        if kind == "add":
            return ev(node[1]) + ev(node[2])
        if kind == "mul":
            return ev(node[1]) * ev(node[2])
        if kind == "pow":
            return ev(node[1]) ** node[2]
        raise AssertionError(kind)

    return ev(tree)


def parse_univariate(text: str, variable: str = "n") -> tuple[Fraction, ...]:
    """Parse a rational polynomial in one variable; returns coefficients, constant first."""
    tree = _Parser(text, allow_division=True).parse()

    def add(a, b):
        m = max(len(a), len(b))
        a = a + [Fraction(0)] * (m - len(a))
        b = b + [Fraction(0)] * (m - len(b))
        return [x + y for x, y in zip(a, b)]

    def mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def ev(node):
        kind = node[0]
        if kind == "int":
            return [Fraction(node[1])]
        if kind == "name":
            if node[1] != variable:
                raise ParseError(f"expected variable {variable!r}", text, node[2])
            return [Fraction(0), Fraction(1)]
        if kind == "neg":
            return [-c for c in ev(node[1])]
        if kind == "add":
            return add(ev(node[1]), ev(node[2]))
        if kind == "mul":
            return mul(ev(node[1]), ev(node[2]))
        if kind == "div":
            den = ev(node[2])
            if len(trim(den)) > 1 or not any(den):
                raise ParseError("can only divide by a nonzero constant", text, 0)
            return [c / den[0] for c in ev(node[1])]
        if kind == "pow":
            out = [Fraction(1)]
            base = ev(node[1])
            for _ in range(node[2]):
                out = mul(out, base)
            return out
        raise AssertionError(kind)

    return tuple(trim(ev(tree)))


def trim(coeffs) -> list:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
