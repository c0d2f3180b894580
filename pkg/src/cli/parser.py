"""
Polynomial grammar for bihomogeneous input.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [coeff ['*']] factor ('*'? factor)*  |  coeff
    factor := var ['^' integer]
    coeff  := integer | integer '/' integer
    var    := s | t | u | v

Whitespace is insignificant. ``str(BiPoly)`` produces text in this grammar,
so serialized forms parse back to the same polynomial.
"""

import re
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from src.algebra.bipoly import VARIABLES, BiPoly, Monomial, format_monomial, monomial_degree
from src.config.exception import ParseError
from src.config.logger import setup_logger

logger = setup_logger("PolynomialParser", "parser.log")

TOKEN_PATTERN = re.compile(r"(?P<number>\d+)|(?P<var>[stuv])|(?P<op>[-+*/^])")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    return tokens


class PolynomialParser:
    """Recursive descent over the token list of one polynomial."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self._peek()
        return token is not None and token.kind == kind and (text is None or token.text == text)

    def _advance(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of input", position=len(self.text))
        self.index += 1
        return token

    def _expect(self, kind: str, what: str) -> Token:
        token = self._peek()
        if token is None or token.kind != kind:
            position = token.position if token else len(self.text)
            found = repr(token.text) if token else "end of input"
            raise ParseError(f"expected {what}, found {found}", position=position)
        return self._advance()

    def parse(self) -> BiPoly:
        if not self.tokens:
            raise ParseError("empty polynomial", position=0)
        terms = self._expression()
        leftover = self._peek()
        if leftover is not None:
            raise ParseError(f"unexpected {leftover.text!r}", position=leftover.position)
        return _assemble(terms)

    def _expression(self) -> List[Tuple[Monomial, Fraction, int]]:
        terms = []
        sign = 1
        if self._at("op", "+") or self._at("op", "-"):
            sign = -1 if self._advance().text == "-" else 1
        terms.append(self._term(sign))
        while self._at("op", "+") or self._at("op", "-"):
            sign = -1 if self._advance().text == "-" else 1
            terms.append(self._term(sign))
        return terms

    def _term(self, sign: int) -> Tuple[Monomial, Fraction, int]:
        start = self._peek()
        if start is None:
            raise ParseError("expected a term, found end of input", position=len(self.text))
        coefficient = Fraction(sign)
        exponents = [0, 0, 0, 0]
        has_coefficient = False

        if self._at("number"):
            coefficient *= self._coefficient()
            has_coefficient = True
            if self._at("op", "*"):
                self._advance()
                if not self._at("var"):
                    token = self._peek()
                    raise ParseError("expected a variable after '*'", position=token.position if token else len(self.text))

        if not self._at("var"):
            if has_coefficient:
                return (0, 0, 0, 0), coefficient, start.position
            found = repr(start.text)
            raise ParseError(f"expected a term, found {found}", position=start.position)

        while True:
            name, power = self._factor()
            exponents[VARIABLES.index(name)] += power
            if self._at("op", "*"):
                self._advance()
                if not self._at("var"):
                    token = self._peek()
                    raise ParseError("expected a variable after '*'", position=token.position if token else len(self.text))
            elif not self._at("var"):
                break
        return tuple(exponents), coefficient, start.position

    def _coefficient(self) -> Fraction:
        numerator = int(self._advance().text)
        if self._at("op", "/"):
            slash = self._advance()
            denominator = int(self._expect("number", "a denominator").text)
            if denominator == 0:
                raise ParseError("zero denominator", position=slash.position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _factor(self) -> Tuple[str, int]:
        name = self._expect("var", "a variable").text
        if self._at("op", "^"):
            self._advance()
            return name, int(self._expect("number", "an exponent").text)
        return name, 1


def _assemble(terms: List[Tuple[Monomial, Fraction, int]]) -> BiPoly:
    first_mono, _, _ = terms[0]
    bidegree = monomial_degree(first_mono)
    collected: Dict[Monomial, Fraction] = {}
    for mono, c, position in terms:
        if monomial_degree(mono) != bidegree:
            raise ParseError(
                f"not bihomogeneous: {format_monomial(first_mono)} has bidegree {bidegree} "
                f"but {format_monomial(mono)} has bidegree {monomial_degree(mono)}",
                position=position,
            )
        collected[mono] = collected.get(mono, Fraction(0)) + c
    return BiPoly(bidegree, collected)


def parse_poly(text: str) -> BiPoly:
    poly = PolynomialParser(text).parse()
    logger.debug(f"Parsed {text!r} -> {poly}")
    return poly


def parse_generators(texts: Iterable[str]) -> List[BiPoly]:
    return [parse_poly(text) for text in texts]
