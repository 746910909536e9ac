"""Polynomial text parsing and printing.

Grammar: integer literals, declared variable names, + - * ^ with the usual
precedence, parentheses, unary minus.  Juxtaposition is not multiplication
(write 2*m, not 2m) and exponents are nonnegative integer literals.  Errors
carry the 1-based character position of the offending token.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ParseError
from .kernel import MultiPoly

_OPS = set("+-*^()")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    # (kind, text, 1-based position)
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("int", src[i:j], pos))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("name", src[i:j], pos))
            i = j
        elif ch in _OPS:
            tokens.append((ch, ch, pos))
            i += 1
        else:
            raise ParseError(pos, f"unexpected character {ch!r}")
    tokens.append(("end", "", len(src) + 1))
    return tokens


class _Parser:
    def __init__(self, src: str, variables: Sequence[str]):
        self.tokens = _tokenize(src)
        self.pos = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        poly = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], f"unexpected {tok[1]!r}")
        return poly

    def expression(self) -> MultiPoly:
        left = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> MultiPoly:
        left = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            left = left * self.factor()
        return left

    def factor(self) -> MultiPoly:
        tok = self.peek()
        if tok[0] == "-":
            self.advance()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok[0] != "int":
                raise ParseError(
                    exp_tok[2],
                    "exponent must be a nonnegative integer literal",
                )
            self.advance()
            return base ** int(exp_tok[1])
        return base

    def atom(self) -> MultiPoly:
        tok = self.advance()
        kind, text, pos = tok
        if kind == "int":
            return MultiPoly.constant(int(text), self.variables)
        if kind == "name":
            if text not in self.variables:
                raise ParseError(pos, f"unknown variable {text!r}")
            return MultiPoly.variable(text, self.variables)
        if kind == "(":
            inner = self.expression()
            closing = self.peek()
            if closing[0] != ")":
                raise ParseError(closing[2], "expected ')'")
            self.advance()
            return inner
        raise ParseError(pos, f"expected number, variable, or '(', found {text or 'end of input'!r}")


def parse_poly(src: str, variables: Sequence[str]) -> MultiPoly:
    """Parse polynomial text over the given variables."""
    return _Parser(src, variables).parse()


def print_poly(p: MultiPoly) -> str:
    """Canonical text of a polynomial; parse_poly inverts it."""
    return str(p)
