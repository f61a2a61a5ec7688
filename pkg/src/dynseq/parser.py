"""Recursive-descent parser for the arithmetic expression language.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' integer)?
    atom   := integer | symbol | '(' expr ')'

Implicit multiplication is rejected and ``-x^2`` means ``-(x^2)``.  The
parser is generic over the value domain: a ``Builder`` turns integers and
symbols into values which are then combined with Python operators.
"""
import re

from gmpy2 import mpq

from .errors import ParseError
from .fields import QQ
from .poly import PolyRing
from .ratmap import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text=text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("sym", m.group(2), start))
        else:
            op = m.group(3)
            if op == "**":
                raise ParseError("'**' is not part of the grammar, use '^'", start, "'^'", text)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, build_int, build_symbol):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.build_int = build_int
        self.build_symbol = build_symbol

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value, what=None):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == value:
            return self.advance()
        raise ParseError(f"unexpected {self._describe(tok)}", tok[2], what or repr(value), self.text)

    @staticmethod
    def _describe(tok):
        if tok[0] == "end":
            return "end of input"
        return repr(tok[1])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, "an expression", self.text)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {self._describe(tok)}", tok[2], "an operator or end of input", self.text)
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok[1] == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.advance()
                rhs = self.factor()
                if tok[1] == "*":
                    value = value * rhs
                else:
                    if not rhs:
                        raise ParseError("division by zero", tok[2], text=self.text)
                    value = value / rhs
            elif tok[0] in ("int", "sym") or (tok[0] == "op" and tok[1] == "("):
                raise ParseError("implicit multiplication is not allowed", tok[2], "'*'", self.text)
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.advance()
            exp = self.peek()
            if exp[0] != "int":
                raise ParseError(f"unexpected {self._describe(exp)}", exp[2], "a nonnegative integer exponent", self.text)
            self.advance()
            return base ** int(exp[1])
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.advance()
            return self.build_int(int(tok[1]))
        if tok[0] == "sym":
            self.advance()
            value = self.build_symbol(tok[1])
            if value is None:
                raise ParseError(f"unknown symbol {tok[1]!r}", tok[2], "a declared variable", self.text)
            return value
        if tok[0] == "op" and tok[1] == "(":
            self.advance()
            value = self.expr()
            self.expect(")", "')'")
            return value
        raise ParseError(f"unexpected {self._describe(tok)}", tok[2], "a number, symbol or '('", self.text)


def parse_constant(text, field=QQ):
    """Parse a constant over ``field``; its generator name (if any) is a symbol."""
    gen_name = field.generator_name

    def sym(name):
        if gen_name is not None and name == gen_name:
            return field.gen
        return None

    return _Parser(text, lambda n: field(n), sym).parse()


def parse_expression(text, variables, field=QQ, ring=None):
    """Parse ``text`` into a :class:`RatFunc` over ``field[variables]``."""
    if ring is None:
        ring = PolyRing(field, variables)
    field = ring.field
    gen_name = field.generator_name
    gens = {name: RatFunc.from_poly(g) for name, g in zip(ring.variables, ring.gens)}
    if gen_name is not None and gen_name in gens:
        raise ParseError(f"field generator {gen_name!r} clashes with a variable name")

    def sym(name):
        if name in gens:
            return gens[name]
        if gen_name is not None and name == gen_name:
            return RatFunc.from_poly(ring(field.gen))
        return None

    def num(n):
        return RatFunc.from_poly(ring(n))

    return _Parser(text, num, sym).parse()


def parse_polynomial(text, ring):
    f = parse_expression(text, ring.variables, ring=ring)
    if not f.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return f.num


def parse_univariate(text, variable="s"):
    """Dense coefficient list (lowest degree first) of a univariate polynomial over Q."""
    ring = PolyRing(QQ, [variable])
    p = parse_polynomial(text, ring)
    deg = max((m[0] for m in p.terms), default=-1)
    coeffs = [mpq(0)] * (deg + 1)
    for m, c in p.terms.items():
        coeffs[m[0]] = c
    return coeffs
