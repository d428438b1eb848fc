"""
Textual form of hyperreals.

    hyperreal := operand [ "/" operand ]
    operand   := "(" sum ")" | sum
    sum       := [ "-" ] term { ("+" | "-") term }
    term      := coef [ "*" power ] | power
    power     := SYMBOL [ "^" INT ]
    coef      := INT | "(" INT "/" INT ")"
    SYMBOL    := "e" | "g"

Whitespace is ignored. A denominator extends to the end of the text, so a denominator with more
than one term is always rendered in parentheses.
"""

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from beliefz.exceptions import ConfigError, DomainError
from beliefz.hyperreal.number import Hyperreal
from beliefz.hyperreal.polynomial import EpsPoly

TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<symbol>[eg])|(?P<op>[-+*/^()]))")
SYMBOLS = ("e", "g")

Token = Tuple[str, str]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = TOKEN.match(stripped, position)
        if not match:
            raise ConfigError(detail=f"Unexpected character at {position} in {text!r}.")
        kind = match.lastgroup or "op"
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


class HyperrealParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    def error(self, reason: str) -> ConfigError:
        return ConfigError(detail=f"Invalid hyperreal {self.text!r}: {reason}.")

    def peek(self, offset: int = 0) -> Optional[Token]:
        index = self.position + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def accept(self, value: str) -> bool:
        token = self.peek()
        if token is not None and token[1] == value:
            self.position += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            raise self.error(f"expected {value!r}")

    def integer(self) -> int:
        token = self.peek()
        if token is None or token[0] != "int":
            raise self.error("expected an integer")
        self.position += 1
        return int(token[1])

    def starts_rational(self) -> bool:
        shape = [self.peek(offset) for offset in range(5)]
        return (
            all(token is not None for token in shape)
            and shape[0][1] == "("  # type: ignore[index]
            and shape[1][0] == "int"  # type: ignore[index]
            and shape[2][1] == "/"  # type: ignore[index]
            and shape[3][0] == "int"  # type: ignore[index]
            and shape[4][1] == ")"  # type: ignore[index]
        )

    def parse(self) -> Hyperreal:
        if not self.tokens:
            raise self.error("empty input")
        numerator = self.operand()
        denominator = EpsPoly.constant(1)
        if self.accept("/"):
            denominator = self.operand()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()[1]!r}")  # type: ignore[index]
        if denominator.is_zero:
            raise DomainError(detail=f"Division by zero in {self.text!r}.")
        return Hyperreal(numerator, denominator)

    def operand(self) -> EpsPoly:
        token = self.peek()
        if token is not None and token[1] == "(" and not self.starts_rational():
            self.position += 1
            poly = self.sum()
            self.expect(")")
            return poly
        return self.sum()

    def sum(self) -> EpsPoly:
        terms = [self.term(negative=self.accept("-"))]
        while True:
            if self.accept("+"):
                terms.append(self.term(negative=False))
            elif self.accept("-"):
                terms.append(self.term(negative=True))
            else:
                return EpsPoly(terms)

    def term(self, negative: bool) -> Tuple[int, Fraction]:
        token = self.peek()
        if token is not None and token[0] == "symbol":
            coefficient, exponent = Fraction(1), self.power()
        else:
            coefficient = self.coefficient()
            exponent = self.power() if self.accept("*") else 0
        return exponent, -coefficient if negative else coefficient

    def coefficient(self) -> Fraction:
        if self.accept("("):
            numerator = self.integer()
            self.expect("/")
            denominator = self.integer()
            self.expect(")")
            if denominator == 0:
                raise DomainError(detail=f"Zero denominator in {self.text!r}.")
            return Fraction(numerator, denominator)
        return Fraction(self.integer())

    def power(self) -> int:
        token = self.peek()
        if token is None or token[0] != "symbol":
            raise self.error("expected the infinitesimal symbol")
        self.position += 1
        return self.integer() if self.accept("^") else 1


def parse_hyperreal(text: str) -> Hyperreal:
    return HyperrealParser(text).parse()


def render(value: Hyperreal, symbol: str = "e") -> str:
    """
    Normalized text of a value, e.g. ``(1/4)*e^3 + e^5`` or ``1/(1+e)``.
    """
    if symbol not in SYMBOLS:
        raise ConfigError(detail=f"Unknown symbol {symbol!r}.")
    if value.den.is_one:
        if value.num.is_constant:
            return str(value.num.coefficient(0))
        return value.num.format(symbol)

    numerator = value.num.format(symbol, compact=True)
    denominator = value.den.format(symbol, compact=True)
    if len(value.num.terms) > 1:
        numerator = f"({numerator})"
    if len(value.den.terms) > 1:
        denominator = f"({denominator})"
    return f"{numerator}/{denominator}"
