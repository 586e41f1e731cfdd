"""
Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INTEGER)?
    atom    := INTEGER | IDENT | "(" expr ")"

``^`` binds tightest, then ``*`` and ``/``, then ``+`` and ``-``. Implicit
multiplication is rejected, and ``/`` only divides by nonzero constants.
"""

import re
from dataclasses import dataclass

from sympy.polys.rings import PolyRing

from sallykit.algebra.poly import Polynomial
from sallykit.errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "end"
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    """Split an expression into tokens; columns are 1-based."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ring = ring
        self.gens = {str(symbol): gen for symbol, gen in zip(ring.symbols, ring.gens)}

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Token | None = None) -> ParseError:
        return ParseError(message, column=(token or self.current).column)

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.pos += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.current.kind != "end":
            token = self.current
            if token.kind in ("ident", "int") or token.text == "(":
                raise self.error(
                    f"unexpected {token.text!r}; implicit multiplication is not allowed, write '*'"
                )
            raise self.error(f"unexpected {token.text!r}")
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Polynomial:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.current.kind == "op" and self.current.text == "/":
                slash = self.advance()
                divisor = self.unary()
                if any(divisor.keys() - {self.ring.zero_monom}):
                    raise self.error("division is only allowed by a constant", slash)
                constant = divisor.get(self.ring.zero_monom, self.ring.domain.zero)
                if not constant:
                    raise self.error("division by zero", slash)
                value = value.quo_ground(constant)
            else:
                return value

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            token = self.current
            if token.kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.advance()
            base = base ** int(token.text)
            if self.current.kind == "op" and self.current.text == "^":
                raise self.error("chained exponents need parentheses")
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "int":
            self.advance()
            return self.ring.ground_new(self.ring.domain.convert(int(token.text)))
        if token.kind == "ident":
            self.advance()
            if token.text not in self.gens:
                raise self.error(f"unknown variable {token.text!r}", token)
            return self.gens[token.text]
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return value
        if token.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {token.text!r}")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """
    Parse an expression into a polynomial of ``ring``.

    Raises:
        ParseError: With the 1-based column of the offending token.
    """
    return _Parser(text, ring).parse()
