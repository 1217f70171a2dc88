"""Text notation for tangle expressions.

Grammar:

    expr     :=  term ('+' term)*
    term     :=  atom ('*v' vertical)*
    atom     :=  '(' inner ')'
    inner    :=  'inf'  |  int  |  int '/' int  |  entry (',' entry)+
    entry    :=  int  |  int '/' int
    vertical :=  '(' int '/' int ')'   with numerator +-1

Examples: ``(11/7) + (3)``, ``(1/2, 2/3, -1)``, ``(1/2, -1/3) *v (-1/2)``.
Non-coprime fraction literals are auto-reduced and reported as warnings.
Printing an AST and reparsing returns an equal AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError, UnsupportedTangleError
from .montesinos import MontesinosExpr, STAR, TangleValue, TrailOp
from .rational import TangleFraction, add_horizontal, fraction, star_vertical

__all__ = [
    "FractionLeaf",
    "MontesinosLeaf",
    "SumNode",
    "StarNode",
    "ParseResult",
    "parse_tangle",
    "render",
    "value_of",
    "parse_value",
]


@dataclass(frozen=True)
class FractionLeaf:
    value: TangleFraction


@dataclass(frozen=True)
class MontesinosLeaf:
    entries: tuple[TangleFraction, ...]


@dataclass(frozen=True)
class StarNode:
    base: "Node"
    n: int


@dataclass(frozen=True)
class SumNode:
    parts: tuple["Node", ...]


Node = Union[FractionLeaf, MontesinosLeaf, StarNode, SumNode]


@dataclass(frozen=True)
class ParseResult:
    ast: Node
    warnings: tuple[str, ...]


_TOKEN = re.compile(r"\s*(\(|\)|,|\+|\*v|inf|-?\d+|/)")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
                break
            self.items.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self) -> str:
        return self.items[self.i][0] if self.i < len(self.items) else ""

    def pos(self) -> int:
        return self.items[self.i][1] if self.i < len(self.items) else len(self.text)

    def take(self, expected: str = "") -> str:
        tok = self.peek()
        if expected and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", self.pos())
        if not tok:
            raise ParseError("unexpected end of input", self.pos())
        self.i += 1
        return tok


def _parse_int(tokens: _Tokens) -> int:
    tok = tokens.peek()
    if not re.fullmatch(r"-?\d+", tok or ""):
        raise ParseError(f"expected an integer, found {tok!r}", tokens.pos())
    tokens.take()
    return int(tok)


def _parse_entry(tokens: _Tokens, warnings: list[str]) -> TangleFraction:
    pos = tokens.pos()
    num = _parse_int(tokens)
    if tokens.peek() == "/":
        tokens.take("/")
        den = _parse_int(tokens)
        if den == 0:
            raise ParseError("denominator 0 is only allowed as (inf)", pos)
        f = fraction(num, den)
        if (abs(f.num), f.den) != (abs(num), abs(den)):
            warnings.append(f"reduced {num}/{den} to {f}")
        return f
    return fraction(num)


def _parse_atom(tokens: _Tokens, warnings: list[str]) -> Node:
    tokens.take("(")
    if tokens.peek() == "inf":
        tokens.take()
        tokens.take(")")
        return FractionLeaf(fraction(1, 0))
    entries = [_parse_entry(tokens, warnings)]
    while tokens.peek() == ",":
        tokens.take(",")
        entries.append(_parse_entry(tokens, warnings))
    tokens.take(")")
    if len(entries) == 1:
        return FractionLeaf(entries[0])
    return MontesinosLeaf(tuple(entries))


def _parse_vertical(tokens: _Tokens) -> int:
    pos = tokens.pos()
    tokens.take("(")
    num = _parse_int(tokens)
    tokens.take("/")
    den = _parse_int(tokens)
    tokens.take(")")
    if abs(num) != 1 or den == 0:
        raise ParseError("vertical star needs a (1/n) tangle", pos)
    return den * num


def _parse_term(tokens: _Tokens, warnings: list[str]) -> Node:
    node = _parse_atom(tokens, warnings)
    while tokens.peek() == "*v":
        tokens.take("*v")
        node = StarNode(node, _parse_vertical(tokens))
    return node


def parse_tangle(text: str) -> ParseResult:
    """Parse tangle notation into an AST.

    Raises:
        ParseError: with the offending position.
    """
    tokens = _Tokens(text)
    warnings: list[str] = []
    parts = [_parse_term(tokens, warnings)]
    while tokens.peek() == "+":
        tokens.take("+")
        parts.append(_parse_term(tokens, warnings))
    if tokens.peek():
        raise ParseError(f"trailing input {tokens.peek()!r}", tokens.pos())
    ast = parts[0] if len(parts) == 1 else SumNode(tuple(parts))
    return ParseResult(ast, tuple(warnings))


def render(node: Node) -> str:
    """Print an AST back to notation text."""
    if isinstance(node, FractionLeaf):
        return node.value.as_text()
    if isinstance(node, MontesinosLeaf):
        return "(" + ", ".join(str(f) for f in node.entries) + ")"
    if isinstance(node, StarNode):
        n = node.n
        vert = f"(1/{n})" if n > 0 else f"(-1/{-n})"
        return f"{render(node.base)} *v {vert}"
    return " + ".join(render(p) for p in node.parts)


def _combine_sum(left: TangleValue, right: TangleValue) -> TangleValue:
    if isinstance(left, TangleFraction) and isinstance(right, TangleFraction):
        if right.is_integral:
            return add_horizontal(left, right.num)
        if left.is_integral:
            return add_horizontal(right, left.num)
        return MontesinosExpr((left, right))
    if isinstance(left, MontesinosExpr) and isinstance(right, TangleFraction):
        if left.trail:
            if right.is_integral:
                return MontesinosExpr(left.summands, left.trail + (TrailOp("plus", right.num),))
            raise UnsupportedTangleError("cannot sum a non-integral tangle onto a starred expression")
        return MontesinosExpr(left.summands + (right,))
    if isinstance(left, TangleFraction) and isinstance(right, MontesinosExpr):
        if right.trail:
            raise UnsupportedTangleError("cannot sum onto a starred expression from the left")
        return MontesinosExpr((left,) + right.summands)
    if not left.trail and not right.trail:
        return MontesinosExpr(left.summands + right.summands)
    raise UnsupportedTangleError("cannot sum two starred expressions")


def value_of(node: Node) -> TangleValue:
    """Evaluate an AST to a rational fraction or a Montesinos expression."""
    if isinstance(node, FractionLeaf):
        return node.value
    if isinstance(node, MontesinosLeaf):
        return MontesinosExpr(node.entries)
    if isinstance(node, StarNode):
        base = value_of(node.base)
        if isinstance(base, TangleFraction):
            return star_vertical(base, node.n)
        return MontesinosExpr(base.summands, base.trail + (TrailOp(STAR, node.n),))
    value = value_of(node.parts[0])
    for part in node.parts[1:]:
        value = _combine_sum(value, value_of(part))
    return value


def parse_value(text: str) -> tuple[TangleValue, tuple[str, ...]]:
    """Parse and evaluate in one step."""
    result = parse_tangle(text)
    return value_of(result.ast), result.warnings
