"""Generalized Montesinos tangle expressions and their 4-plat closures.

A Montesinos expression is an ordered horizontal sum of rational leaves,
optionally wrapped in an alternating chain of outer operations: a vertical
star by (1/m), then a horizontal sum with (m'), and so on.  Two identities
drive everything here:

* an integral summand merges into a rational neighbour,
      (a/b, c/d) + (m) = (a/b, (c + dm)/d);
* under numerator closure a star slides across a sum,
      N((A * (1/n)) + B) = N(A + (B * (1/n))),
  and the outermost star of the whole expression vanishes.

Reduction rewrites any expression, modulo closure, into either a plain
rational tangle, the two-summand normal form (a/b, c/d) * (1/m), or a
certificate that no closure of it can be a 4-plat: three or more
non-integral summands force a closure whose double branch cover has three
exceptional fibers, and an infinity partner forces a connected sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import NormalFormRequiredError, UnsupportedTangleError
from .fourplat import FourPlat, closure_of_sum
from .rational import (
    TangleFraction,
    ZERO,
    add_horizontal,
    cf_eval,
    fraction,
    mirror,
    star_vertical,
)

__all__ = [
    "TrailOp",
    "MontesinosExpr",
    "NotFourPlat",
    "COMPOSITE",
    "THREE_EXCEPTIONAL_FIBERS",
    "TangleValue",
    "absorb_integral",
    "reduce_to_normal_form",
    "closure_with",
    "closure_of_value",
    "mirror_value",
    "presentation_normal_form",
    "value_text",
]

STAR = "star"
PLUS = "plus"


@dataclass(frozen=True)
class TrailOp:
    """One outer operation: a vertical star by (1/n) or a horizontal +(n)."""

    op: str
    n: int

    def __post_init__(self):
        if self.op not in (STAR, PLUS):
            raise ValueError(f"unknown trail operation {self.op!r}")


@dataclass(frozen=True)
class MontesinosExpr:
    """Horizontal sum of rational leaves with an outer operation trail.

    The trail is listed innermost first: the first entry applies directly to
    the sum of the summands.
    """

    summands: tuple[TangleFraction, ...]
    trail: tuple[TrailOp, ...] = ()

    def __post_init__(self):
        if len(self.summands) < 1:
            raise ValueError("at least one summand required")

    @property
    def non_integral_summands(self) -> tuple[TangleFraction, ...]:
        return tuple(f for f in self.summands if not f.is_integral)

    @property
    def is_normal_form(self) -> bool:
        """Two non-integral summands and at most a single outer star."""
        if len(self.summands) != 2:
            return False
        if any(f.is_integral or f.is_infinity for f in self.summands):
            return False
        if len(self.trail) > 1:
            return False
        return all(t.op == STAR for t in self.trail)

    @property
    def star_count(self) -> int:
        """The m of the single trailing star, 0 when absent."""
        return self.trail[0].n if self.trail else 0

    def mirror(self) -> "MontesinosExpr":
        return MontesinosExpr(
            tuple(mirror(f) for f in self.summands),
            tuple(TrailOp(t.op, -t.n) for t in self.trail),
        )

    def __str__(self) -> str:
        body = "(" + ", ".join(str(f) for f in self.summands) + ")"
        for t in self.trail:
            if t.op == STAR:
                body += f" *v (1/{t.n})" if t.n >= 0 else f" *v (-1/{-t.n})"
            else:
                body += f" + ({t.n})"
        return body

    def as_text(self) -> str:
        return str(self)

    def to_json(self) -> dict:
        return {
            "summands": [str(f) for f in self.summands],
            "trail": [{"op": t.op, "n": t.n} for t in self.trail],
        }


TangleValue = Union[TangleFraction, MontesinosExpr]


@dataclass(frozen=True)
class NotFourPlat:
    """Certificate that a closure is not a 4-plat, with the failure mode."""

    reason: str

    def __str__(self) -> str:
        return f"not-a-4-plat ({self.reason})"


COMPOSITE = NotFourPlat("composite")
THREE_EXCEPTIONAL_FIBERS = NotFourPlat("three_exceptional_fibers")


def absorb_integral(m: MontesinosExpr, n: int) -> MontesinosExpr:
    """Merge a horizontal +(n) into the last summand of a trail-free sum."""
    if m.trail:
        raise NormalFormRequiredError("absorb_integral needs an empty trail")
    if len(m.summands) != 2:
        raise NormalFormRequiredError("absorb_integral needs a two-summand form")
    head, last = m.summands
    return MontesinosExpr((head, add_horizontal(last, n)))


def _merge_summands(summands) -> list[TangleFraction]:
    """Fold integral summands into a neighbour; exact tangle identity."""
    merged: list[TangleFraction] = []
    pending = 0
    for f in summands:
        if f.is_integral:
            pending += f.num
        else:
            merged.append(add_horizontal(f, pending) if pending else f)
            pending = 0
    if pending or not merged:
        if merged:
            merged[-1] = add_horizontal(merged[-1], pending)
        else:
            merged.append(fraction(pending))
    return merged


def _normalized_trail(trail) -> list[TrailOp]:
    """Merge consecutive operations of one kind and drop zero twists."""
    out: list[TrailOp] = []
    for t in trail:
        if t.n == 0:
            continue
        if out and out[-1].op == t.op:
            out[-1] = TrailOp(t.op, out[-1].n + t.n)
            if out[-1].n == 0:
                out.pop()
        else:
            out.append(t)
    return out


def reduce_to_normal_form(
    e: MontesinosExpr,
) -> Union[MontesinosExpr, TangleFraction, NotFourPlat]:
    """Rewrite e, preserving its numerator closure, into normal form.

    Returns a plain TangleFraction when the summands merge to one rational
    leaf, the two-summand normal form otherwise, or a NotFourPlat value when
    the reduction certifies that N(e) cannot be a 4-plat.  The certificate
    is a value, not an error.
    """
    summands = _merge_summands(e.summands)
    trail = _normalized_trail(e.trail)

    if len(summands) == 1:
        f = summands[0]
        for t in trail:
            f = star_vertical(f, t.n) if t.op == STAR else add_horizontal(f, t.n)
        return f

    if any(f.is_infinity for f in summands):
        # An infinity leaf caps its neighbour; only the closure-level sum of
        # exactly two leaves is meaningful, after a dying outer star.
        if len(summands) == 2 and (not trail or (len(trail) == 1 and trail[0].op == STAR)):
            return MontesinosExpr(tuple(summands))
        raise UnsupportedTangleError("infinity summand in a non-trivial sum")

    if len(summands) > 2:
        return THREE_EXCEPTIONAL_FIBERS

    # Innermost horizontal twists merge straight into the last summand.
    while trail and trail[0].op == PLUS:
        summands[1] = add_horizontal(summands[1], trail.pop(0).n)

    if not trail:
        return MontesinosExpr(tuple(summands))
    if len(trail) == 1 and trail[0].op == STAR:
        return MontesinosExpr(tuple(summands), (trail[0],))

    # The outermost star dies under numerator closure.
    if trail[-1].op == STAR:
        trail.pop()
    # Remaining alternating chain [*1/m_n, +m_{n-1}, ..., +m_1] folds, under
    # closure, into one rational partner with vector [m_1, ..., m_n, 0].
    folded = cf_eval([t.n for t in reversed(trail)] + [0])
    if folded.is_infinity:
        return COMPOSITE
    if folded.is_integral:
        return MontesinosExpr((summands[0], add_horizontal(summands[1], folded.num)))
    return THREE_EXCEPTIONAL_FIBERS


def closure_with(m: MontesinosExpr, r: TangleFraction) -> Union[FourPlat, NotFourPlat]:
    """Numerator closure of m + r for m in normal form (a/b, c/d) * (1/s).

    The star slides onto r first; an integral partner then merges into the
    last summand and the two-rational closure formula finishes.  An infinity
    partner certifies a connected sum, any other non-integral partner a
    three-fiber closure.
    """
    if not m.is_normal_form:
        raise NormalFormRequiredError(f"{m} is not in two-summand normal form")
    partner = star_vertical(r, m.star_count)
    if partner.is_infinity:
        return COMPOSITE
    if not partner.is_integral:
        return THREE_EXCEPTIONAL_FIBERS
    head, last = m.summands
    return closure_of_sum(head, add_horizontal(last, partner.num))


def closure_of_value(value: TangleValue) -> Union[FourPlat, NotFourPlat]:
    """Numerator closure of a rational or Montesinos value."""
    from .fourplat import numerator_closure

    if isinstance(value, TangleFraction):
        return numerator_closure(value)
    reduced = reduce_to_normal_form(value)
    if isinstance(reduced, NotFourPlat):
        return reduced
    if isinstance(reduced, TangleFraction):
        return numerator_closure(reduced)
    if reduced.is_normal_form:
        return closure_with(reduced, ZERO)
    # Two leaves with an infinity cap close by the two-rational formula.
    return closure_of_sum(*reduced.summands)


def mirror_value(value: TangleValue) -> TangleValue:
    return mirror(value) if isinstance(value, TangleFraction) else value.mirror()


def presentation_normal_form(e: MontesinosExpr) -> MontesinosExpr:
    """Canonical presentation of a two-summand expression modulo twists.

    Sum presentations are free up to three moves that never change any
    closure paired with a compensated partner: the outer star (compensated
    vertically), integral transfer between the summands (a horizontal twist
    in the middle belongs to either), and rotation of the two summands.
    The representative drops the star, shifts the first summand into (0, 1)
    and takes the smaller of the two rotations.
    """
    from fractions import Fraction

    reduced = reduce_to_normal_form(MontesinosExpr(e.summands))
    if not isinstance(reduced, MontesinosExpr) or not reduced.is_normal_form:
        raise NormalFormRequiredError(f"{e} has no two-summand presentation")
    f1, f2 = reduced.summands
    candidates = []
    for a, b in ((f1, f2), (f2, f1)):
        shift = -(a.num // a.den)
        a2, b2 = add_horizontal(a, shift), add_horizontal(b, -shift)
        candidates.append(((Fraction(a2.num, a2.den), Fraction(b2.num, b2.den)), (a2, b2)))
    _, (a2, b2) = min(candidates)
    return MontesinosExpr((a2, b2))


def value_text(value: TangleValue) -> str:
    """Shared notation form for fractions and Montesinos expressions."""
    return value.as_text()
