"""Parser and renderer for connected-sum expressions.

The grammar, whitespace insensitive::

    expr := term ("#" term)*
    term := "SHS(" int ("," int)* ")"
          | "SSF(" int "," int "," int ";" int "," int "," int ")"
          | "TW(" int ";" int "/" int ")"
          | "(" expr ")"

``#`` is the left-associative connected sum. Parentheses are only needed to
write right-nested sums, which the renderer produces for round trips.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from casson_invariants.exceptions import ExpressionSyntaxError
from casson_invariants.manifolds.specs import (
    ConnectedSum,
    ManifoldExpr,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
)
from casson_invariants.manifolds.validation import validate

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"(?P<int>[+-]?[0-9]+)|(?P<name>[A-Za-z]+)|(?P<punct>[(),;/#])"
    r"|(?P<space>\s+)",
    re.ASCII,
)
FAMILIES = ("SHS", "SSF", "TW")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Splits an expression into tokens, dropping whitespace.

    Args:
        text (str): The expression.

    Raises:
        ExpressionSyntaxError: On a character that starts no token.

    Returns:
        list[Token]: The tokens followed by an ``end`` token.
    """
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(
                f"unexpected character {text[position]!r}", text, position
            )
        kind = match.lastgroup
        assert kind is not None
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """Recursive descent parser over the token list of one expression."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.text, self.current.position)

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def expect(self, punct: str) -> None:
        if self.current.kind != "punct" or self.current.text != punct:
            found = self.current.text or "end of input"
            raise self.error(f"expected {punct!r}, found {found!r}")
        self.advance()

    def integer(self) -> int:
        if self.current.kind != "int":
            found = self.current.text or "end of input"
            raise self.error(f"expected an integer, found {found!r}")
        return int(self.advance().text)

    def integers(self, separator: str, count: int) -> list[int]:
        values = [self.integer()]
        for _ in range(count - 1):
            self.expect(separator)
            values.append(self.integer())
        return values

    def parse(self) -> ManifoldExpr:
        expr = self.expression()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return expr

    def expression(self) -> ManifoldExpr:
        expr = self.term()
        while self.current.kind == "punct" and self.current.text == "#":
            self.advance()
            expr = ConnectedSum(expr, self.term())
        return expr

    def term(self) -> ManifoldExpr:
        token = self.current
        if token.kind == "punct" and token.text == "(":
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        if token.kind != "name":
            found = token.text or "end of input"
            raise self.error(f"expected a manifold, found {found!r}")
        family = token.text.upper()
        if family not in FAMILIES:
            raise self.error(f"unknown manifold family {token.text!r}")
        self.advance()
        self.expect("(")
        leaf: ManifoldExpr
        if family == "SHS":
            values = [self.integer()]
            while self.current.kind == "punct" and self.current.text == ",":
                self.advance()
                values.append(self.integer())
            leaf = SeifertHSSpec(tuple(values))
        elif family == "SSF":
            orders = self.integers(",", 3)
            self.expect(";")
            coefficients = self.integers(",", 3)
            leaf = SmallSeifertSpec(*orders, *coefficients)
        else:
            xi = self.integer()
            self.expect(";")
            p, q = self.integers("/", 2)
            leaf = TwistSurgerySpec.from_slope(xi, p, q)
        self.expect(")")
        return validate(leaf)


def parse_manifold_expr(text: str) -> ManifoldExpr:
    """Parses a connected-sum expression and validates every leaf.

    Args:
        text (str): The expression, e.g. ``"SHS(2,3,5) # SSF(4,6,8;1,1,1)"``.

    Raises:
        ExpressionSyntaxError: If the text does not match the grammar.
        ManifoldValidationError: If a leaf violates its hypotheses.

    Returns:
        ManifoldExpr: The parsed expression tree.
    """
    expr = ExpressionParser(text).parse()
    logger.debug("Parsed %r as %r", text, expr)
    return expr


def render(expr: ManifoldExpr) -> str:
    """Renders an expression in the canonical form accepted by
    ``parse_manifold_expr``.

    Args:
        expr (ManifoldExpr): The expression.

    Returns:
        str: The canonical text.
    """
    if isinstance(expr, ConnectedSum):
        right = render(expr.right)
        if isinstance(expr.right, ConnectedSum):
            right = f"({right})"
        return f"{render(expr.left)} # {right}"
    if isinstance(expr, SeifertHSSpec):
        return "SHS(" + ",".join(map(str, expr.multiplicities)) + ")"
    if isinstance(expr, SmallSeifertSpec):
        orders = ",".join(map(str, expr.orders))
        coefficients = ",".join(map(str, expr.coefficients))
        return f"SSF({orders};{coefficients})"
    if isinstance(expr, TwistSurgerySpec):
        p, q = expr.slope
        return f"TW({expr.xi};{p}/{q})"
    raise TypeError(f"not a manifold expression: {expr!r}")
