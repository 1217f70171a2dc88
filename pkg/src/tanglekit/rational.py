"""Exact arithmetic on rational-tangle fractions.

A rational tangle is classified up to isotopy by a single extended rational
number p/q (with 1/0 standing for the infinity tangle).  Twisting the two
east endpoints around each other adds an integer, twisting the two south
endpoints acts on the reciprocal, and mirroring negates.  Everything here is
exact integer arithmetic on reduced pairs; there are no floats anywhere.

Continued fractions use the convention

    [a_1, ..., a_n]  =  a_n + 1/(a_{n-1} + ... + 1/a_1)

so the first entry is the innermost twist region and the last entry is the
final horizontal twist count.  The expansion produced by :func:`cf_expand`
has entries of uniform sign and is the unique such form, which makes the
round trip ``cf_eval(cf_expand(f)) == f`` exact.  The empty vector is
reserved for the infinity tangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Sequence

from .errors import InfinityInputError

__all__ = [
    "TangleFraction",
    "TangleClass",
    "TwistVector",
    "fraction",
    "INFINITY",
    "ZERO",
    "cf_expand",
    "cf_eval",
    "add_horizontal",
    "star_vertical",
    "mirror",
    "classify",
    "is_canonical_twist_vector",
]

TwistVector = tuple  # ordered twist counts, innermost region first


@dataclass(frozen=True)
class TangleFraction:
    """A reduced extended rational p/q with q >= 0; (1, 0) is infinity."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError("denominator must be non-negative in canonical form")
        if self.den == 0 and self.num != 1:
            raise ValueError("infinity is canonically (1, 0)")
        if self.num == 0 and self.den != 1:
            raise ValueError("zero is canonically (0, 1)")
        if gcd(abs(self.num), self.den) > 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def is_vertical(self) -> bool:
        return self.den > 1 and abs(self.num) == 1

    @property
    def is_strictly_rational(self) -> bool:
        return self.den > 1 and abs(self.num) > 1

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        if self.is_integral:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def as_text(self) -> str:
        """Parenthesized notation form, e.g. ``(11/7)`` or ``(inf)``."""
        return f"({self})"


def fraction(num: int, den: int = 1) -> TangleFraction:
    """Build the canonical reduced extended rational num/den.

    Any sign of ``den`` is accepted; 0/0 is rejected.
    """
    if num == 0 and den == 0:
        raise ValueError("0/0 is not an extended rational")
    if den == 0:
        return TangleFraction(1, 0)
    if num == 0:
        return TangleFraction(0, 1)
    if den < 0:
        num, den = -num, -den
    g = gcd(abs(num), den)
    return TangleFraction(num // g, den // g)


INFINITY = fraction(1, 0)
ZERO = fraction(0, 1)


class TangleClass(Enum):
    """The four-way split of rational tangles by fraction shape."""

    INTEGRAL = "integral"
    VERTICAL = "vertical"
    INFINITY = "infinity"
    STRICTLY_RATIONAL = "strictly_rational"


def classify(f: TangleFraction) -> TangleClass:
    """Classify f as integral (n), vertical (1/n) with |n| > 1, infinity or
    strictly rational.  The four classes partition all inputs."""
    if f.den == 0:
        return TangleClass.INFINITY
    if f.den == 1:
        return TangleClass.INTEGRAL
    if abs(f.num) == 1:
        return TangleClass.VERTICAL
    return TangleClass.STRICTLY_RATIONAL


def cf_expand(f: TangleFraction) -> TwistVector:
    """Expand f into its canonical uniform-sign twist vector.

    Raises:
        InfinityInputError: for the infinity tangle, whose presentation is
            the reserved empty vector.
    """
    if f.is_infinity:
        raise InfinityInputError("infinity has the reserved empty expansion ()")
    if f.num == 0:
        return (0,)
    negate = f.num < 0
    p, q = abs(f.num), f.den
    outer_first = []
    while q:
        a, r = divmod(p, q)
        outer_first.append(a)
        p, q = q, r
    vec = tuple(outer_first[::-1])
    if negate:
        vec = tuple(-a for a in vec)
    return vec


def cf_eval(v: Sequence[int] | Iterable[int]) -> TangleFraction:
    """Evaluate a twist vector with extended-rational arithmetic.

    Division by zero follows the tangle rules 1/0 = inf, x + inf = inf and
    1/inf = 0, so every integer vector evaluates; the empty vector is the
    infinity tangle.
    """
    num, den = 1, 0
    for a in v:
        num, den = a * num + den, num
    return fraction(num, den)


def is_canonical_twist_vector(v: Sequence[int]) -> bool:
    """True when all entries are nonzero (except possibly the last) and all
    nonzero entries share one sign."""
    if len(v) == 0:
        return True
    if any(a == 0 for a in v[:-1]) and v != (0,):
        return False
    nonzero = [a for a in v if a != 0]
    if not nonzero:
        return v == (0,)
    return all(a > 0 for a in nonzero) or all(a < 0 for a in nonzero)


def add_horizontal(f: TangleFraction, n: int) -> TangleFraction:
    """Sum with the integral tangle (n): p/q + n = (p + n*q)/q."""
    return fraction(f.num + n * f.den, f.den)


def star_vertical(f: TangleFraction, n: int) -> TangleFraction:
    """Append n vertical half-twists below f: p/q becomes p/(q + n*p).

    The sign convention makes star_vertical(INFINITY, n) the vertical
    tangle (1/n).
    """
    return fraction(f.num, f.den + n * f.num)


def mirror(f: TangleFraction) -> TangleFraction:
    """Mirror image; negates the fraction and fixes infinity."""
    return fraction(-f.num, f.den)
