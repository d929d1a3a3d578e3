"""Text grammar for elements of Q(w), shared by the CLI and reports.

    element  := term (('+'|'-') term)*
    term     := rational | rational? '*'? 'w'
    rational := INT ('/' POSINT)?

ASCII, whitespace-insensitive; "w" denotes the primitive cube root of unity.
A leading minus sign is part of the first INT ("-3", "-5/3*w").  Serialization
(str() on the element types) always emits the fully reduced "A/B+C/D*w" shape
with zero parts omitted, which re-parses to an equal value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .eisenstein import EisensteinRational

__all__ = ["ParseError", "parse_element"]


class ParseError(ValueError):
    """Syntax error in an element expression, with a 1-based position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Token(NamedTuple):
    kind: str  # INT | SLASH | STAR | PLUS | MINUS | W | EOF
    text: str
    pos: int  # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], pos))
            i = j
        elif ch == "w":
            tokens.append(_Token("W", ch, pos))
            i += 1
        elif ch == "/":
            tokens.append(_Token("SLASH", ch, pos))
            i += 1
        elif ch == "*":
            tokens.append(_Token("STAR", ch, pos))
            i += 1
        elif ch == "+":
            tokens.append(_Token("PLUS", ch, pos))
            i += 1
        elif ch == "-":
            tokens.append(_Token("MINUS", ch, pos))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(_Token("EOF", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        return tok

    def rational(self) -> Fraction:
        num = int(self.expect("INT", "a number").text)
        if self.peek().kind == "SLASH":
            self.take()
            tok = self.expect("INT", "a denominator")
            den = int(tok.text)
            if den == 0:
                raise ParseError("zero denominator", tok.pos)
            return Fraction(num, den)
        return Fraction(num)

    def term(self, allow_sign: bool) -> tuple[Fraction, bool]:
        """One term; returns (value, is_w_term)."""
        sign = 1
        if allow_sign and self.peek().kind == "MINUS":
            self.take()
            sign = -1
            if self.peek().kind != "INT":
                raise ParseError("expected a number after '-'", self.peek().pos)
        kind = self.peek().kind
        if kind == "INT":
            value = sign * self.rational()
            if self.peek().kind == "STAR":
                self.take()
                self.expect("W", "'w'")
                return value, True
            if self.peek().kind == "W":
                self.take()
                return value, True
            return value, False
        if kind == "STAR":
            self.take()
            self.expect("W", "'w'")
            return Fraction(1), True
        if kind == "W":
            self.take()
            return Fraction(1), True
        raise ParseError("expected a term", self.peek().pos)

    def element(self) -> EisensteinRational:
        x = Fraction(0)
        y = Fraction(0)
        value, is_w = self.term(allow_sign=True)
        if is_w:
            y += value
        else:
            x += value
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.take()
            value, is_w = self.term(allow_sign=False)
            if op.kind == "MINUS":
                value = -value
            if is_w:
                y += value
            else:
                x += value
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return EisensteinRational.from_coords(x, y)


def parse_element(text: str) -> EisensteinRational:
    """Parse an element expression; raises ParseError with a position."""
    return _Parser(text).element()
