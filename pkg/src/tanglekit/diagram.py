"""Planar diagrams for rational and Montesinos tangles and 2-strand braids.

A diagram is a list of crossings plus bookkeeping for boundary endpoints and
crossing-free loops.  Each crossing stores the four incident edge ids in
counterclockwise cyclic order (x0, x1, x2, x3) with the convention that the
strand through slots x0 and x2 passes over the strand through x1 and x3.
Strands continue through a crossing from slot i to slot i + 2.

Twist conventions are calibrated once and for all so the closure of three
positive horizontal twists is the right-handed trefoil b(3, 1): a positive
crossing, in either a horizontal or vertical twist region, is the one whose
overstrand runs from the top-west end to the bottom-east end.

Diagrams built here stay within a hard crossing budget; the state-sum
invariants are exponential in crossing count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import NotATangleError, ScaleExceededError
from .montesinos import MontesinosExpr, STAR, TangleValue
from .rational import TangleFraction, cf_expand

__all__ = [
    "MAX_CROSSINGS",
    "PlanarDiagram",
    "infinity_tangle",
    "zero_tangle",
    "add_horizontal_twists",
    "add_vertical_twists",
    "diagram_from_twists",
    "diagram_from_fraction",
    "montesinos_diagram",
    "diagram_of_value",
    "tangle_sum",
    "numerator_close",
    "torus_2braid",
    "to_pd_text",
    "from_pd_text",
]

MAX_CROSSINGS = 24

_CORNERS = ("nw", "ne", "sw", "se")


@dataclass(frozen=True)
class PlanarDiagram:
    """Immutable crossing list with either 0 or 4 boundary endpoints."""

    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: Optional[dict] = None  # corner name -> edge id
    free_loops: int = 0

    @property
    def is_closed(self) -> bool:
        return self.boundary is None

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def validate(self) -> None:
        """Every edge id must occur exactly twice."""
        seen: dict[int, int] = {}
        for c in self.crossings:
            for e in c:
                seen[e] = seen.get(e, 0) + 1
        if self.boundary is not None:
            if sorted(self.boundary) != sorted(_CORNERS):
                raise NotATangleError("boundary must name nw, ne, sw, se")
            for e in self.boundary.values():
                seen[e] = seen.get(e, 0) + 1
        bad = {e: n for e, n in seen.items() if n != 2}
        if bad:
            raise ValueError(f"edges with occurrence != 2: {bad}")


class _Builder:
    """Mutable scratch diagram; snapshot() freezes it."""

    def __init__(self):
        self.crossings: list[list[int]] = []
        self.boundary: dict[str, int] = {}
        self.free_loops = 0
        self._next_edge = 0

    @classmethod
    def from_diagram(cls, d: PlanarDiagram) -> "_Builder":
        b = cls()
        b.crossings = [list(c) for c in d.crossings]
        b.boundary = dict(d.boundary) if d.boundary is not None else {}
        b.free_loops = d.free_loops
        used = [e for c in b.crossings for e in c] + list(b.boundary.values())
        b._next_edge = max(used) + 1 if used else 0
        return b

    def new_edge(self) -> int:
        self._next_edge += 1
        return self._next_edge - 1

    def relabel(self, old: int, new: int) -> None:
        for c in self.crossings:
            for i, e in enumerate(c):
                if e == old:
                    c[i] = new
        for k, e in self.boundary.items():
            if e == old:
                self.boundary[k] = new

    def add_crossing(self, nw: int, sw: int, se: int, ne: int, positive: bool) -> None:
        if len(self.crossings) >= MAX_CROSSINGS:
            raise ScaleExceededError(f"crossing budget {MAX_CROSSINGS} exceeded")
        # ccw storage with the overstrand in slots (0, 2)
        if positive:
            self.crossings.append([nw, sw, se, ne])
        else:
            self.crossings.append([ne, nw, sw, se])

    def join(self, corner_a: str, corner_b: str) -> None:
        """Connect two boundary corners with an unknotted arc."""
        ea, eb = self.boundary[corner_a], self.boundary[corner_b]
        del self.boundary[corner_a], self.boundary[corner_b]
        if ea == eb:
            self.free_loops += 1  # a pure arc closes into a circle
        else:
            self.relabel(eb, ea)

    def snapshot(self) -> PlanarDiagram:
        d = PlanarDiagram(
            tuple(tuple(c) for c in self.crossings),
            dict(self.boundary) if self.boundary else None,
            self.free_loops,
        )
        d.validate()
        return d


def _zero_builder() -> _Builder:
    b = _Builder()
    top, bot = b.new_edge(), b.new_edge()
    b.boundary = {"nw": top, "ne": top, "sw": bot, "se": bot}
    return b


def _infinity_builder() -> _Builder:
    b = _Builder()
    left, right = b.new_edge(), b.new_edge()
    b.boundary = {"nw": left, "sw": left, "ne": right, "se": right}
    return b


def zero_tangle() -> PlanarDiagram:
    """Two horizontal arcs, NW-NE and SW-SE."""
    return _zero_builder().snapshot()


def infinity_tangle() -> PlanarDiagram:
    """Two vertical arcs, NW-SW and NE-SE."""
    return _infinity_builder().snapshot()


def _twist_east(b: _Builder, n: int) -> None:
    positive = n > 0
    for _ in range(abs(n)):
        top, bot = b.boundary["ne"], b.boundary["se"]
        new_top, new_bot = b.new_edge(), b.new_edge()
        b.add_crossing(nw=top, sw=bot, se=new_bot, ne=new_top, positive=positive)
        b.boundary["ne"], b.boundary["se"] = new_top, new_bot


def _twist_south(b: _Builder, n: int) -> None:
    positive = n > 0
    for _ in range(abs(n)):
        left, right = b.boundary["sw"], b.boundary["se"]
        new_left, new_right = b.new_edge(), b.new_edge()
        b.add_crossing(nw=left, sw=new_left, se=new_right, ne=right, positive=positive)
        b.boundary["sw"], b.boundary["se"] = new_left, new_right


def add_horizontal_twists(d: PlanarDiagram, n: int) -> PlanarDiagram:
    """Append n signed half-twists between the two east endpoints."""
    if d.is_closed:
        raise NotATangleError("cannot twist a closed diagram")
    b = _Builder.from_diagram(d)
    _twist_east(b, n)
    return b.snapshot()


def add_vertical_twists(d: PlanarDiagram, n: int) -> PlanarDiagram:
    """Append n signed half-twists between the two south endpoints."""
    if d.is_closed:
        raise NotATangleError("cannot twist a closed diagram")
    b = _Builder.from_diagram(d)
    _twist_south(b, n)
    return b.snapshot()


def diagram_from_twists(v) -> PlanarDiagram:
    """Build the rational tangle diagram of a twist vector.

    Entry i is a horizontal region when i and the vector length share
    parity, vertical otherwise; the empty vector is the infinity tangle.
    The total twist count is capped at MAX_CROSSINGS.
    """
    v = tuple(v)
    if sum(abs(a) for a in v) > MAX_CROSSINGS:
        raise ScaleExceededError(f"twist total exceeds {MAX_CROSSINGS}")
    n = len(v)
    if n == 0:
        return infinity_tangle()
    first_horizontal = n % 2 == 1
    b = _zero_builder() if first_horizontal else _infinity_builder()
    horizontal = first_horizontal
    for a in v:
        if horizontal:
            _twist_east(b, a)
        else:
            _twist_south(b, a)
        horizontal = not horizontal
    return b.snapshot()


def diagram_from_fraction(f: TangleFraction) -> PlanarDiagram:
    """Canonical twist diagram of a rational tangle."""
    if f.is_infinity:
        return infinity_tangle()
    return diagram_from_twists(cf_expand(f))


def tangle_sum(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    """Glue b to the east of a: a.NE to b.NW and a.SE to b.SW."""
    if a.is_closed or b.is_closed:
        raise NotATangleError("tangle sum needs two 4-endpoint diagrams")
    if a.crossing_count + b.crossing_count > MAX_CROSSINGS:
        raise ScaleExceededError(f"sum exceeds {MAX_CROSSINGS} crossings")
    out = _Builder.from_diagram(a)
    shift = out._next_edge
    for c in b.crossings:
        if len(out.crossings) >= MAX_CROSSINGS:
            raise ScaleExceededError(f"crossing budget {MAX_CROSSINGS} exceeded")
        out.crossings.append([e + shift for e in c])
    out.free_loops += b.free_loops
    right = {k: e + shift for k, e in b.boundary.items()}
    b_ids = [e for c in b.crossings for e in c] + list(b.boundary.values())
    out._next_edge = shift + max(b_ids) + 1
    # Stash the seam ends under scratch names so join() tracks relabels.
    out.boundary["seam_top_a"] = out.boundary.pop("ne")
    out.boundary["seam_bot_a"] = out.boundary.pop("se")
    out.boundary["seam_top_b"] = right["nw"]
    out.boundary["seam_bot_b"] = right["sw"]
    out.boundary["ne"], out.boundary["se"] = right["ne"], right["se"]
    out.join("seam_top_a", "seam_top_b")
    out.join("seam_bot_a", "seam_bot_b")
    return out.snapshot()


def numerator_close(d: PlanarDiagram) -> PlanarDiagram:
    """Add the NW-NE and SW-SE closure arcs."""
    if d.is_closed:
        raise NotATangleError("diagram already closed")
    b = _Builder.from_diagram(d)
    b.join("nw", "ne")
    b.join("sw", "se")
    return b.snapshot()


def montesinos_diagram(m: MontesinosExpr) -> PlanarDiagram:
    """Horizontal concatenation of the summand diagrams plus the trail."""
    parts = [diagram_from_fraction(f) for f in m.summands]
    out = parts[0]
    for part in parts[1:]:
        out = tangle_sum(out, part)
    for t in m.trail:
        if t.op == STAR:
            out = add_vertical_twists(out, t.n)
        else:
            out = add_horizontal_twists(out, t.n)
    return out


def diagram_of_value(value: TangleValue) -> PlanarDiagram:
    if isinstance(value, TangleFraction):
        return diagram_from_fraction(value)
    return montesinos_diagram(value)


def torus_2braid(n: int) -> PlanarDiagram:
    """Closure of the 2-strand braid with n signed crossings.

    Built directly, independent of the tangle constructors, as the
    reference family for torus links T(2, n).
    """
    if abs(n) > MAX_CROSSINGS:
        raise ScaleExceededError(f"|n| exceeds {MAX_CROSSINGS}")
    if n == 0:
        return PlanarDiagram((), None, 2)
    k = abs(n)
    positive = n > 0
    crossings = []
    # edges: top strand t_0..t_k, bottom b_0..b_k, then close t_k to t_0
    # and b_k to b_0 around the braid axis.
    t = lambda i: 2 * (i % k)
    bo = lambda i: 2 * (i % k) + 1
    for i in range(k):
        nw, sw, se, ne = t(i), bo(i), bo(i + 1), t(i + 1)
        if positive:
            crossings.append((nw, sw, se, ne))
        else:
            crossings.append((ne, nw, sw, se))
    d = PlanarDiagram(tuple(crossings), None, 0)
    d.validate()
    return d


def to_pd_text(d: PlanarDiagram) -> str:
    """Plain-text planar code: one X line per crossing.

    The four entries of an X line are edge ids in counterclockwise order;
    the strand through the first and third entries is the overstrand.
    """
    lines = ["pd 1"]
    lines.append(f"L {d.free_loops}")
    if d.boundary is not None:
        bd = d.boundary
        lines.append(f"B {bd['nw']} {bd['ne']} {bd['sw']} {bd['se']}")
    for c in d.crossings:
        lines.append("X " + " ".join(str(e) for e in c))
    return "\n".join(lines) + "\n"


def from_pd_text(text: str) -> PlanarDiagram:
    """Parse the format emitted by :func:`to_pd_text`."""
    crossings = []
    boundary = None
    free_loops = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "pd":
            continue
        if tag == "L":
            free_loops = int(parts[1])
        elif tag == "B":
            nw, ne, sw, se = (int(x) for x in parts[1:5])
            boundary = {"nw": nw, "ne": ne, "sw": sw, "se": se}
        elif tag == "X":
            vals = tuple(int(x) for x in parts[1:5])
            crossings.append(vals)
        else:
            raise ValueError(f"unknown pd line {line!r}")
    if len(crossings) > MAX_CROSSINGS:
        raise ScaleExceededError(f"crossing budget {MAX_CROSSINGS} exceeded")
    d = PlanarDiagram(tuple(crossings), boundary, free_loops)
    d.validate()
    return d
