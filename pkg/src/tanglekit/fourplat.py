"""Canonical two-bridge links and numerator closures of rational sums.

The numerator closure of the rational tangle (p/q) is the two-bridge link
b(p, q), and b(p, q) = b(p', q') exactly when p = p' and q' is congruent to
q or to the inverse of q mod p.  We store the canonical representative with
p >= 0 and, for p >= 2, 0 < q < p chosen as the smaller element of
{q mod p, q^-1 mod p}.  Mirroring maps the class of q to the class of p - q,
so chirality survives canonicalization (the Hopf pair p = 2 is the one
unavoidable collapse, since -1 and 1 agree mod 2).

The closure of a sum of two rational tangles is computed by the Bezout
formula: with c'd - cd' = 1,

    N(a/b + c/d) = N((ad + bc) / (ad' + bc')).

The result does not depend on the Bezout representative, because changing it
shifts the closure denominator by a multiple of the numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import NonCoprimeError
from .rational import TangleFraction, fraction

__all__ = [
    "FourPlat",
    "canonicalize",
    "numerator_closure",
    "closure_of_sum",
    "closure_sum_fraction",
    "fourplat_eq",
    "as_torus_2strand",
    "UNKNOT",
    "UNLINK",
]


@dataclass(frozen=True)
class FourPlat:
    """Canonical two-bridge knot or link b(p, q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("canonical form has p >= 0")
        if self.p == 0 and self.q != 1:
            raise ValueError("the unlink is canonically b(0, 1)")
        if self.p == 1 and self.q != 0:
            raise ValueError("the unknot is canonically b(1, 0)")
        if self.p >= 2 and not (0 < self.q < self.p):
            raise ValueError("canonical form has 0 < q < p")

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def is_unlink(self) -> bool:
        return self.p == 0

    @property
    def components(self) -> int:
        """1 for knots (p odd or the unknot), 2 for links (p even)."""
        return 2 if self.p % 2 == 0 else 1

    def mirror(self) -> "FourPlat":
        return canonicalize(self.p, -self.q) if self.p >= 2 else self

    def __str__(self) -> str:
        return f"b({self.p},{self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "torus": as_torus_2strand(self)}


UNKNOT = FourPlat(1, 0)
UNLINK = FourPlat(0, 1)


def canonicalize(p: int, q: int) -> FourPlat:
    """Canonical b(p, q); negative p mirrors, so b(-p, q) = b(p, -q).

    Raises:
        NonCoprimeError: when gcd(|p|, |q|) > 1 with |p| >= 2, or when
            p = 0 with |q| != 1.
    """
    if p < 0:
        p, q = -p, -q
    if p == 0:
        if abs(q) != 1:
            raise NonCoprimeError(f"b(0, {q}) needs q = +-1")
        return UNLINK
    if p == 1:
        return UNKNOT
    q0 = q % p
    if q0 == 0 or gcd(p, q0) != 1:
        raise NonCoprimeError(f"b({p}, {q}) needs coprime entries")
    q_inv = pow(q0, -1, p)
    return FourPlat(p, min(q0, q_inv))


def numerator_closure(f: TangleFraction) -> FourPlat:
    """Close f with top and bottom arcs: N(p/q) = b(p, q)."""
    return canonicalize(f.num, f.den)


def _bezout_partner(c: int, d: int) -> tuple[int, int]:
    """Return (c', d') with c'd - cd' = 1, via the extended Euclid run."""
    old_r, r = d, c
    old_x, x = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
    # old_x * d + y * c == old_r == +-1 for coprime inputs
    if old_r == 1:
        cp = old_x
    elif old_r == -1:
        cp = -old_x
    else:
        raise NonCoprimeError(f"{c}/{d} is not reduced")
    dp = (cp * d - 1) // c if c else -1
    assert cp * d - c * dp == 1
    return cp, dp


def closure_sum_fraction(
    a: TangleFraction, c: TangleFraction, bezout: Optional[tuple[int, int]] = None
) -> TangleFraction:
    """The rational tangle whose numerator closure equals N(a + c).

    This keeps the raw chirality of the Bezout formula, which the diagram
    oracle needs; :func:`closure_of_sum` canonicalizes it to a FourPlat.
    An explicit ``bezout`` pair (c', d') with c'd - cd' = 1 may be supplied
    to exercise representative independence.
    """
    if bezout is None:
        cp, dp = _bezout_partner(c.num, c.den)
    else:
        cp, dp = bezout
        if cp * c.den - c.num * dp != 1:
            raise ValueError("supplied pair is not a Bezout partner")
    p = a.num * c.den + a.den * c.num
    q = a.num * dp + a.den * cp
    return fraction(p, q) if (p, q) != (0, 0) else fraction(0, 1)


def closure_of_sum(
    a: TangleFraction, c: TangleFraction, bezout: Optional[tuple[int, int]] = None
) -> FourPlat:
    """Numerator closure of the tangle sum of two rational tangles.

    Total on extended rationals: N(f + 0) = N(f), N(inf + (n)) = b(1, 0)
    and N(inf + inf) = b(0, 1) all come out of the same formula.
    """
    if bezout is None:
        cp, dp = _bezout_partner(c.num, c.den)
    else:
        cp, dp = bezout
        if cp * c.den - c.num * dp != 1:
            raise ValueError("supplied pair is not a Bezout partner")
    p = a.num * c.den + a.den * c.num
    q = a.num * dp + a.den * cp
    return canonicalize(p, q)


def fourplat_eq(x: FourPlat, y: FourPlat) -> bool:
    """Equality of canonical forms."""
    return x == y


def as_torus_2strand(x: FourPlat) -> Optional[int]:
    """Signed n when x is the 2-strand torus link/knot b(n, 1) or a mirror.

    Positive n means the right-handed form b(n, 1); negative its mirror
    b(n, n-1).  The unlink returns 0 and the unknot +1.  For the Hopf pair
    (p = 2) the canonical form cannot separate the mirrors and +2 is
    returned.  Everything else returns None.
    """
    if x.is_unlink:
        return 0
    if x.is_unknot:
        return 1
    if x.q == 1:
        return x.p
    if x.q == x.p - 1:
        return -x.p
    return None
