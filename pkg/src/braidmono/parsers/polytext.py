"""Parser and formatter for the polynomial text format.

The format is a sum of terms such as ``369/364*y^6 + x*y^5 - 197/91*y^5``.
Whitespace is ignored, ``*`` may be omitted between factors, ``^`` and
``**`` both denote powers, parentheses group subexpressions and ``#``
starts a comment running to the end of the line. Coefficients must be
exact rationals: decimal literals are rejected.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from braidmono.exactpoly import BivariatePoly
from braidmono.exceptions import NonRationalCoefficientError, PolynomialParseError

logger = logging.getLogger(__name__)

Terms = dict[tuple[int, int], Fraction]

_TOKEN_RE = re.compile(
    r"(?P<decimal>\d+\.\d*|\.\d+|\d+[eE][+-]?\d+)"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<pow>\*\*|\^)"
    r"|(?P<op>[-+*/()])"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _strip_comments(text: str) -> str:
    # blank out comments so token positions still index the original text
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise PolynomialParseError(f"unexpected character {text[position]!r}", position)
        kind = match.lastgroup or ""
        if kind == "decimal":
            raise NonRationalCoefficientError(
                f"decimal coefficient {match.group(0)!r} is not an exact rational; "
                "write it as a fraction",
                position,
            )
        tokens.append(_Token(kind, match.group(0), position))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _add(a: Terms, b: Terms, sign: int = 1) -> Terms:
    result = dict(a)
    for key, value in b.items():
        total = result.get(key, Fraction(0)) + sign * value
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return result


def _mul(a: Terms, b: Terms) -> Terms:
    result: Terms = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            total = result.get(key, Fraction(0)) + c1 * c2
            if total:
                result[key] = total
            else:
                result.pop(key)
    return result


class _Parser:
    def __init__(self, text: str, variables: tuple[str, str]) -> None:
        self.tokens = _tokenize(text)
        self.index = 0
        self.variables = variables

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str, text: str | None = None) -> _Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            got = token.text or "end of input"
            raise PolynomialParseError(f"expected {wanted!r}, got {got!r}", token.position)
        return self.advance()

    def parse(self) -> Terms:
        if self.current.kind == "end":
            raise PolynomialParseError("empty polynomial", self.current.position)
        terms = self.expression()
        if self.current.kind != "end":
            raise PolynomialParseError(
                f"unexpected {self.current.text!r}", self.current.position
            )
        return terms

    def expression(self) -> Terms:
        sign = 1
        if self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
        total = _mul({(0, 0): Fraction(sign)}, self.term())
        while self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
            total = _add(total, self.term(), sign)
        return total

    def term(self) -> Terms:
        product = self.power()
        while True:
            token = self.current
            if token.kind == "op" and token.text == "*":
                self.advance()
                product = _mul(product, self.power())
            elif token.kind == "op" and token.text == "/":
                self.advance()
                divisor = self.expect("int")
                if int(divisor.text) == 0:
                    raise PolynomialParseError("division by zero", divisor.position)
                product = {k: v / int(divisor.text) for k, v in product.items()}
            elif token.kind in ("int", "name") or (token.kind == "op" and token.text == "("):
                product = _mul(product, self.power())
            else:
                return product

    def power(self) -> Terms:
        base = self.atom()
        if self.current.kind == "pow":
            self.advance()
            exponent = int(self.expect("int").text)
            result: Terms = {(0, 0): Fraction(1)}
            for _ in range(exponent):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> Terms:
        token = self.current
        if token.kind == "int":
            self.advance()
            value = Fraction(int(token.text))
            return {(0, 0): value} if value else {}
        if token.kind == "name":
            self.advance()
            if token.text == self.variables[0]:
                return {(1, 0): Fraction(1)}
            if token.text == self.variables[1]:
                return {(0, 1): Fraction(1)}
            if token.text in ("I", "i", "sqrt", "pi", "e"):
                raise NonRationalCoefficientError(
                    f"{token.text!r} is not a rational coefficient", token.position
                )
            raise PolynomialParseError(f"unknown variable {token.text!r}", token.position)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expression()
            self.expect("op", ")")
            return inner
        got = token.text or "end of input"
        raise PolynomialParseError(f"unexpected {got!r}", token.position)


class PolynomialParser:
    """Parser for polynomial text and .poly curve files."""

    def __init__(self, variables: tuple[str, str] = ("x", "y")) -> None:
        self.variables = variables

    def parse_text(self, text: str) -> BivariatePoly:
        """Parse polynomial text into an exact bivariate polynomial.

        Args:
            text: Polynomial in the repository text format

        Returns:
            The parsed polynomial

        Raises:
            PolynomialParseError: On a syntax error, with its character position
            NonRationalCoefficientError: On decimal or symbolic coefficients
        """
        terms = _Parser(_strip_comments(text), self.variables).parse()
        poly = BivariatePoly(terms, self.variables)
        logger.debug("Parsed polynomial with %d terms, degree %d", poly.nterms, poly.degree)
        return poly

    def parse_file(self, file_path: Path) -> BivariatePoly:
        """Parse a .poly file.

        Raises:
            FileNotFoundError: If the file doesn't exist
            PolynomialParseError: If the content cannot be parsed
        """
        if not file_path.exists():
            raise FileNotFoundError(f"Curve file not found: {file_path}")
        return self.parse_text(file_path.read_text(encoding="utf-8"))


def parse_curve(text: str) -> BivariatePoly:
    """Parse a curve equation in the variables x and y."""
    return PolynomialParser().parse_text(text)


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: BivariatePoly) -> str:
    """Canonical text of p: terms by decreasing total degree, then decreasing inner degree."""
    if p.is_zero:
        return "0"
    outer, inner = p.variables
    parts: list[str] = []
    ordered = sorted(p.coefficients.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1]))
    for index, ((i, j), c) in enumerate(ordered):
        factors = []
        if i:
            factors.append(outer if i == 1 else f"{outer}^{i}")
        if j:
            factors.append(inner if j == 1 else f"{inner}^{j}")
        magnitude = abs(c)
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude), *factors])
        if index == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)
