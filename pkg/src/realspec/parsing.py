"""Parsing of polynomial expressions and ring descriptions.

Grammar for polynomials over the variable x (tightest binding first):

    power:   atom ['^' NAT]          exponent a nonnegative integer literal
    unary:   '-' unary | power
    term:    unary ('*' unary)*
    expr:    term (('+'|'-') term)*
    atom:    NAT ['/' NAT] | 'x' | '(' expr ')'

There is no general division; NAT '/' NAT is an exact rational literal.
Ring descriptions are "Q[x]" or "Q[x]/(<poly>)". Printing (Poly.__str__)
round-trips through parse_poly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .polynomials import Poly
from .rings import Ring

MAX_EXPONENT = 1 << 16


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'x', 'op', 'end'
    text: str
    column: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], col))
            i = j
        elif ch == "x":
            tokens.append(_Token("x", ch, col))
            i += 1
        elif ch in "+-*^()/":
            tokens.append(_Token("op", ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    tokens.append(_Token("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.column)
        return self.advance()

    def parse(self) -> Poly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.column)
        return value

    def expr(self) -> Poly:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> Poly:
        value = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.unary()
            else:
                return value

    def unary(self) -> Poly:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind != "int":
                raise ParseError("expected a nonnegative integer exponent", exp_tok.column)
            self.advance()
            exponent = int(exp_tok.text)
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", exp_tok.column)
            return base**exponent
        return base

    def atom(self) -> Poly:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.advance()
                den_tok = self.peek()
                if den_tok.kind != "int":
                    raise ParseError("expected an integer denominator", den_tok.column)
                self.advance()
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.column)
                return Poly.const(Fraction(num, den))
            return Poly.const(Fraction(num))
        if tok.kind == "x":
            self.advance()
            return Poly.x()
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a number, 'x' or '('", tok.column)


def parse_poly(text: str) -> Poly:
    """Parse an exact polynomial expression in x."""
    return _Parser(text).parse()


def poly_to_str(p: Poly) -> str:
    """Canonical expression string; parse_poly(poly_to_str(p)) == p."""
    return str(p)


def parse_ring(text: str) -> Ring:
    """Parse "Q[x]" or "Q[x]/(<poly>)" into a ring."""
    stripped = text.strip()
    if not stripped.startswith("Q[x]"):
        raise ParseError('ring must start with "Q[x]"', 1)
    rest = stripped[4:].strip()
    if not rest:
        return Ring.rationals()
    if not (rest.startswith("/(") and rest.endswith(")")):
        raise ParseError('quotient ring must look like "Q[x]/(<poly>)"', 5)
    modulus = parse_poly(rest[2:-1])
    if modulus.is_constant():
        raise DomainError("quotient modulus must have degree >= 1")
    if modulus.leading != 1:
        raise DomainError("quotient modulus must be monic")
    return Ring.quotient(modulus)
