"""Exact link invariants from closed planar diagrams.

The Kauffman bracket is evaluated as the plain 2^n state sum: every crossing
is smoothed both ways, loops are counted, and each state contributes
A^(a-b) * (-A^2 - A^-2)^(loops-1).  With the crossing stored counterclockwise
as (x0, x1, x2, x3) and the overstrand in slots (x0, x2), the A-smoothing
joins (x0, x3) and (x1, x2); the B-smoothing joins (x0, x1) and (x2, x3).
That pairing is pinned by the one-crossing closures: a positive kink must
contribute the factor -A^3.

Jones polynomials come from the writhe-normalized bracket with t = A^-4 and
are stored on the half-integer grid (exponents are twice the t-exponent).
Writhe needs orientations; components are oriented by a deterministic
traversal from their lowest edge id.  For two-component diagrams the
relative orientation is a convention, so equality checks compare the set of
Jones polynomials over all component orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import MAX_CROSSINGS, PlanarDiagram
from .errors import OpenDiagramError, ScaleExceededError

__all__ = [
    "LaurentPoly",
    "kauffman_bracket",
    "writhe",
    "jones",
    "jones_orientation_set",
    "jones_equal",
    "determinant",
]


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coef in items:
            if coef:
                acc[exp] = acc.get(exp, 0) + coef
                if not acc[exp]:
                    del acc[exp]
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "LaurentPoly":
        return cls([(exp, coef)])

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(list(self._terms) + list(other._terms))

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly([(e, c * other) for e, c in self._terms])
        out: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shifted(self, dexp: int) -> "LaurentPoly":
        return LaurentPoly([(e + dexp, c) for e, c in self._terms])

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under inverting the variable."""
        return LaurentPoly([(-e, c) for e, c in self._terms])

    def format(self, var: str = "A", half_grid: bool = False) -> str:
        """Sorted monomial list, lowest exponent first."""
        if not self._terms:
            return "0"
        chunks = []
        for exp, coef in self._terms:
            if half_grid:
                e_str = str(exp // 2) if exp % 2 == 0 else f"{exp}/2"
            else:
                e_str = str(exp)
            if e_str == "0":
                body = str(abs(coef))
            else:
                mag = abs(coef)
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}^{e_str}"
            sign = "-" if coef < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"


_LOOP_VALUE = LaurentPoly([(2, -1), (-2, -1)])  # -A^2 - A^-2


def _edge_partners(d: PlanarDiagram) -> list[int]:
    """Map each crossing slot to the slot sharing its edge."""
    occurrences: dict[int, list[int]] = {}
    for i, c in enumerate(d.crossings):
        for j, e in enumerate(c):
            occurrences.setdefault(e, []).append(4 * i + j)
    partner = [0] * (4 * len(d.crossings))
    for slots in occurrences.values():
        if len(slots) != 2:
            raise OpenDiagramError("diagram has boundary edges")
        partner[slots[0]] = slots[1]
        partner[slots[1]] = slots[0]
    return partner


def _state_histogram(d: PlanarDiagram) -> dict[tuple[int, int], int]:
    """Count smoothing states by (number of B-smoothings, loop count)."""
    n = d.crossing_count
    partner_edge = _edge_partners(d)
    total_slots = 4 * n
    hist: dict[tuple[int, int], int] = {}
    partner_state = [0] * total_slots
    visited = [-1] * total_slots
    base_loops = d.free_loops
    for state in range(1 << n):
        bits = state
        base = 0
        for _ in range(n):
            if bits & 1:  # B: (0,1), (2,3)
                partner_state[base] = base + 1
                partner_state[base + 1] = base
                partner_state[base + 2] = base + 3
                partner_state[base + 3] = base + 2
            else:  # A: (0,3), (1,2)
                partner_state[base] = base + 3
                partner_state[base + 3] = base
                partner_state[base + 1] = base + 2
                partner_state[base + 2] = base + 1
            bits >>= 1
            base += 4
        loops = base_loops
        for start in range(total_slots):
            if visited[start] == state:
                continue
            loops += 1
            s = start
            while visited[s] != state:
                visited[s] = state
                t = partner_state[s]
                visited[t] = state
                s = partner_edge[t]
        key = (state.bit_count(), loops)
        hist[key] = hist.get(key, 0) + 1
    return hist


@lru_cache(maxsize=8192)
def _bracket_cached(crossings, free_loops: int) -> LaurentPoly:
    d = PlanarDiagram(crossings, None, free_loops)
    n = d.crossing_count
    if n == 0:
        out = LaurentPoly([(0, 1)])
        for _ in range(max(free_loops - 1, 0)):
            out = out * _LOOP_VALUE
        return out
    loop_powers = [LaurentPoly([(0, 1)])]
    for _ in range(n + free_loops + 1):
        loop_powers.append(loop_powers[-1] * _LOOP_VALUE)
    total = LaurentPoly()
    for (b_count, loops), count in _state_histogram(d).items():
        term = loop_powers[loops - 1].shifted(n - 2 * b_count) * count
        total = total + term
    return total


def kauffman_bracket(d: PlanarDiagram) -> LaurentPoly:
    """State-sum bracket, normalized so the 0-crossing unknot gives 1.

    Raises:
        OpenDiagramError: for diagrams with boundary endpoints.
        ScaleExceededError: above the crossing budget.
    """
    if not d.is_closed:
        raise OpenDiagramError("bracket needs a closed diagram")
    n = d.crossing_count
    if n > MAX_CROSSINGS:
        raise ScaleExceededError(f"{n} crossings exceed budget {MAX_CROSSINGS}")
    return _bracket_cached(d.crossings, d.free_loops)


@dataclass(frozen=True)
class _OrientationData:
    component_count: int
    crossing_signs: tuple[int, ...]  # under the canonical orientation
    crossing_components: tuple[tuple[int, int], ...]  # (over, under) strands


def _orientation_data(d: PlanarDiagram) -> _OrientationData:
    """Orient every component by deterministic traversal and read off signs.

    Traversal starts at the first unvisited slot in storage order, which is
    the slot of the lowest-first-occurring edge, and marks the slots through
    which the strand leaves its crossing.  The crossing sign is the product
    of the leave/enter parities of its over and under strands.
    """
    if not d.is_closed:
        raise OpenDiagramError("orientation needs a closed diagram")
    n = d.crossing_count
    partner_edge = _edge_partners(d)
    outgoing = [False] * (4 * n)
    comp_of_slot = [-1] * (4 * n)
    comp = 0
    for seed in range(4 * n):
        if comp_of_slot[seed] != -1:
            continue
        s = seed  # leave through s's edge, re-enter, pass through
        while comp_of_slot[s] == -1:
            comp_of_slot[s] = comp
            outgoing[s] = True
            t = partner_edge[s]
            comp_of_slot[t] = comp
            s = (t - t % 4) + (t + 2) % 4
        comp += 1
    signs = []
    pairs = []
    for i in range(n):
        base = 4 * i
        s_over = 1 if outgoing[base] else -1
        s_under = 1 if outgoing[base + 1] else -1
        signs.append(s_over * s_under)
        pairs.append((comp_of_slot[base], comp_of_slot[base + 1]))
    return _OrientationData(comp + d.free_loops, tuple(signs), tuple(pairs))


def writhe(d: PlanarDiagram) -> int:
    """Writhe under the canonical orientation rule."""
    return sum(_orientation_data(d).crossing_signs)


def _jones_from_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    normalized = bracket.shifted(-3 * w) * ((-1) ** (w % 2))
    terms = []
    for exp, coef in normalized.terms:
        if exp % 2:
            raise ValueError("bracket exponents must be even after closure")
        terms.append((-exp // 2, coef))  # t = A^-4 on the doubled grid
    return LaurentPoly(terms)


def jones(d: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in t on the doubled exponent grid.

    Exponent 2k stands for t^k and odd exponents for half-integer powers.
    The value is taken at the canonical orientation; use
    :func:`jones_orientation_set` for orientation-free comparisons of links.
    """
    return _jones_from_bracket(kauffman_bracket(d), writhe(d))


def jones_orientation_set(d: PlanarDiagram) -> frozenset[LaurentPoly]:
    """Jones values over all choices of component orientations.

    The bracket is orientation-free, so only the writhe is recomputed:
    reversing a component flips the sign of every crossing it shares with an
    unreversed one.  Component 0 stays fixed; global reversal is a no-op.
    """
    bracket = kauffman_bracket(d)
    data = _orientation_data(d)
    comps = sorted({c for pair in data.crossing_components for c in pair})
    if len(comps) <= 1:
        return frozenset({_jones_from_bracket(bracket, sum(data.crossing_signs))})
    flippable = comps[1:]
    values = set()
    for mask in range(1 << len(flippable)):
        flipped = {c for i, c in enumerate(flippable) if mask >> i & 1}
        w = 0
        for (c1, c2), s in zip(data.crossing_components, data.crossing_signs):
            if c1 != c2 and (c1 in flipped) != (c2 in flipped):
                w -= s
            else:
                w += s
        values.add(_jones_from_bracket(bracket, w))
    return frozenset(values)


def jones_equal(d1: PlanarDiagram, d2: PlanarDiagram) -> bool:
    """Orientation-robust Jones equality of two closed diagrams."""
    a1, a2 = _orientation_data(d1), _orientation_data(d2)
    if a1.component_count != a2.component_count:
        return False
    return bool(jones_orientation_set(d1) & jones_orientation_set(d2))


def determinant(d: PlanarDiagram) -> int:
    """|Jones at t = -1| as an exact non-negative integer."""
    v = jones(d)
    re = im = 0
    for exp, coef in v.terms:  # t^(exp/2) at t = -1 is i^exp
        k = exp % 4
        if k == 0:
            re += coef
        elif k == 1:
            im += coef
        elif k == 2:
            re -= coef
        else:
            im -= coef
    if re and im:
        raise ValueError("determinant evaluation mixed real and imaginary parts")
    return abs(re) + abs(im)
