"""Solution families for the recombination tangle equation systems.

Both systems ask for tangles P, R, O_c and an indexed family O_f^k with

    N(O_f^k + O_c + P) = b(1, 0)                      (substrate, unknot)
    N(O_f^k + O_c + R) = b(2k, 1) or b(2k+1, 1)       (direct / inverted)

for k in {0, 1, 2, 3}, products taken in either handedness.  The solver
emits the complete families: integral chains for P = (inf), the parametric
rational family from the Bezout pair of P, the constraint structure for
integral P, and the single Montesinos family that exists only for the
inverted system.  Bounded brute-force searches act as independent
completeness oracles at desk scale.

Branch naming follows the sign chains of the source tables: the upper
branch pairs P = +(p) with mirror-image (left-handed) torus products and
the lower branch is its mirror with right-handed products.  Solutions are
unique only up to compensating positive and negative twist pairs;
:func:`compensating_normal_form` picks one representative per class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .errors import DomainError, UnsupportedTangleError
from .fourplat import FourPlat, UNKNOT, canonicalize, closure_of_sum
from .montesinos import (
    MontesinosExpr,
    NotFourPlat,
    TangleValue,
    TrailOp,
    STAR,
    closure_with,
    reduce_to_normal_form,
    value_text,
)
from .rational import (
    INFINITY,
    TangleFraction,
    ZERO,
    add_horizontal,
    classify,
    fraction,
    mirror,
    star_vertical,
)

__all__ = [
    "SystemSpec",
    "ConcreteSolution",
    "CheckResult",
    "VerificationReport",
    "ParametricFamily",
    "FourthFamily",
    "RIntegralFamily",
    "parametric_family",
    "r_options_for_integral_P",
    "fourth_solution",
    "chiral_refinement",
    "class2_constraints_check",
    "ConstraintReport",
    "verify_solution",
    "brute_force_rational",
    "brute_force_montesinos",
    "xer_demo",
    "xer_darcy_family",
    "compensating_normal_form",
    "canonical_bezout",
    "product_target",
    "class_descriptors",
]

DIRECT = "direct"
INVERTED = "inverted"
UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class SystemSpec:
    """Which system is being solved, for which product indices and branch."""

    kind: str
    k_range: tuple[int, ...] = (0, 1, 2, 3)
    branch: str = LOWER

    def __post_init__(self):
        if self.kind not in (DIRECT, INVERTED):
            raise DomainError(f"kind must be direct or inverted, not {self.kind!r}")
        if self.branch not in (UPPER, LOWER):
            raise DomainError(f"branch must be upper or lower, not {self.branch!r}")
        if any(k < 0 for k in self.k_range):
            raise DomainError("product indices must be non-negative")

    @property
    def product_sign(self) -> int:
        """+1 for right-handed products (lower branch), -1 for mirrors."""
        return 1 if self.branch == LOWER else -1


def product_target(kind: str, k: int, sign: int) -> FourPlat:
    """Expected product for index k: b(2k, 1) or b(2k+1, 1), signed."""
    m = 2 * k + 1 if kind == INVERTED else 2 * k
    if m == 0:
        return canonicalize(0, 1)
    return canonicalize(sign * m, 1)


def _close_pair(o: TangleValue, partner: TangleFraction) -> Union[FourPlat, NotFourPlat]:
    """Closure of o + partner for rational or Montesinos o."""
    if isinstance(o, TangleFraction):
        return closure_of_sum(o, partner)
    normal = o if o.is_normal_form else reduce_to_normal_form(o)
    if isinstance(normal, NotFourPlat):
        raise UnsupportedTangleError(f"{o} admits no 4-plat closures")
    if isinstance(normal, TangleFraction):
        return closure_of_sum(normal, partner)
    return closure_with(normal, partner)


@dataclass(frozen=True)
class CheckResult:
    k: int
    substrate: Union[FourPlat, NotFourPlat]
    product: Union[FourPlat, NotFourPlat]
    expected_product: FourPlat
    passed: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "substrate": str(self.substrate),
            "product": str(self.product),
            "expected_product": str(self.expected_product),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ConcreteSolution:
    """One fully instantiated candidate solution."""

    system: SystemSpec
    P: TangleFraction
    R: TangleFraction
    O_c: TangleFraction
    O_f: dict
    expected_products: dict = field(default_factory=dict)
    class_tag: Optional[int] = None


@dataclass(frozen=True)
class VerificationReport:
    solution: ConcreteSolution
    checks: tuple[CheckResult, ...]
    passed: bool

    def to_json(self) -> dict:
        sol = self.solution
        return {
            "system": sol.system.kind,
            "branch": sol.system.branch,
            "class": sol.class_tag,
            "P": value_text(sol.P),
            "R": value_text(sol.R),
            "O_c_options": [value_text(sol.O_c)],
            "O_f": {str(k): value_text(v) for k, v in sorted(sol.O_f.items())},
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }


def verify_solution(
    P: TangleFraction,
    R: TangleFraction,
    O_c: TangleFraction,
    O_f: Mapping[int, TangleValue],
    system: SystemSpec,
    expected_products: Optional[Mapping[int, FourPlat]] = None,
) -> VerificationReport:
    """Check every closure of a candidate solution against its targets.

    O_c must be integral; it is folded into the rational side of each sum,
    which leaves Montesinos O_f^k values untouched.  Per-index expected
    products may be overridden; otherwise the branch of ``system`` fixes
    the product handedness.
    """
    if not O_c.is_integral:
        raise UnsupportedTangleError("O_c must be an integral tangle")
    expected_products = dict(expected_products or {})
    checks = []
    for k in sorted(O_f):
        if k not in system.k_range:
            continue
        o = O_f[k]
        sub = _close_pair(o, add_horizontal(P, O_c.num))
        expected = expected_products.get(k, product_target(system.kind, k, system.product_sign))
        prod = _close_pair(o, add_horizontal(R, O_c.num))
        ok = sub == UNKNOT and prod == expected
        checks.append(CheckResult(k, sub, prod, expected, ok))
    solution = ConcreteSolution(system, P, R, O_c, dict(O_f), expected_products)
    return VerificationReport(solution, tuple(checks), all(c.passed for c in checks))


def canonical_bezout(p: int, q: int) -> tuple[int, int]:
    """The (r, s) with r*q + p*s = 1, |s| minimal, ties by minimal |r|."""
    if q == 0:
        if abs(p) != 1:
            raise DomainError("no Bezout pair: p/0 with |p| != 1")
        return (0, p)
    if p == 0:
        if abs(q) != 1:
            raise DomainError("no Bezout pair: 0/q with |q| != 1")
        return (q, 0)
    # base solution by extended Euclid on (q, p)
    old_r, r_ = q, p
    old_x, x = 1, 0
    while r_:
        quot = old_r // r_
        old_r, r_ = r_, old_r - quot * r_
        old_x, x = x, old_x - quot * x
    if old_r == 1:
        r0 = old_x
    elif old_r == -1:
        r0 = -old_x
    else:
        raise DomainError(f"{p}/{q} not reduced")
    s0 = (1 - r0 * q) // p
    candidates = []
    base = s0 % abs(q)
    for s in (base, base - abs(q)):
        r = (1 - p * s) // q
        assert r * q + p * s == 1
        candidates.append((abs(s), abs(r), s, r))
    _, _, s, r = min(candidates)
    return (r, s)


@dataclass(frozen=True)
class ParametricFamily:
    """The one-parameter rational family attached to P and its Bezout pair.

    With rq + ps = 1 and e = +1 on the lower branch (right-handed
    products), e = -1 on the upper branch:

        O^n = (r + e*p*n) / (s - e*q*n),   n = 2k + t (+1 when inverted)
        R(t) = (r + e*p*t) / (-s + e*q*t)

    Different Bezout pairs reparametrize t, so the canonical pair is a
    convention, not a restriction.
    """

    system: SystemSpec
    P: TangleFraction
    r: int
    s: int

    @property
    def class_tag(self) -> int:
        if self.P.is_infinity:
            return 1
        if self.P.is_integral:
            return 2
        return 3

    @property
    def _e(self) -> int:
        return self.system.product_sign

    def n_of(self, t: int, k: int) -> int:
        return 2 * k + t + (1 if self.system.kind == INVERTED else 0)

    def o_of(self, t: int, k: int) -> TangleFraction:
        n = self.n_of(t, k)
        e = self._e
        return fraction(self.r + e * self.P.num * n, self.s - e * self.P.den * n)

    def r_of(self, t: int) -> TangleFraction:
        e = self._e
        return fraction(self.r + e * self.P.num * t, -self.s + e * self.P.den * t)

    def instantiate(self, t: int) -> ConcreteSolution:
        o_f = {k: self.o_of(t, k) for k in self.system.k_range}
        return ConcreteSolution(
            self.system, self.P, self.r_of(t), ZERO, o_f, {}, self.class_tag
        )

    def formula_text(self) -> dict:
        e = self._e
        p, q, r, s = self.P.num, self.P.den, self.r, self.s
        shift = " + 1" if self.system.kind == INVERTED else ""
        n = f"(2*k{shift} + t)"
        plus, minus = ("+", "-") if e > 0 else ("-", "+")
        return {
            "O": f"({r} {plus} {p}*{n}) / ({s} {minus} {q}*{n})",
            "R": f"({r} {plus} {p}*t) / ({-s} {plus} {q}*t)",
        }

    def to_json(self, t_values: Sequence[int] = ()) -> dict:
        out = {
            "system": self.system.kind,
            "branch": self.system.branch,
            "class": self.class_tag,
            "P": value_text(self.P),
            "bezout": {"r": self.r, "s": self.s},
            "formulas": self.formula_text(),
            "O_c_options": [value_text(ZERO)],
        }
        if t_values:
            rows = []
            for t in t_values:
                sol = self.instantiate(t)
                report = verify_solution(sol.P, sol.R, sol.O_c, sol.O_f, self.system)
                rows.append(
                    {
                        "t": t,
                        "R": value_text(sol.R),
                        "O": {str(k): value_text(v) for k, v in sorted(sol.O_f.items())},
                        "pass": report.passed,
                    }
                )
            out["instantiations"] = rows
        return out


def parametric_family(system: SystemSpec, P: TangleFraction) -> ParametricFamily:
    """Family of Class 1, 2 or 3 according to the shape of P."""
    r, s = canonical_bezout(P.num, P.den)
    return ParametricFamily(system, P, r, s)


@dataclass(frozen=True)
class RIntegralFamily:
    """All recombinant tangles compatible with an integral P = (n).

    On the lower branch R(t) = (n) + (1/(t - 1)); the degenerate twist
    counts give back the infinity tangle (t = 1) and plain integral
    tangles (t in {0, 2}), everything else is vertical plus integral.
    """

    n: int

    def vertical_part(self, t: int, branch: str = LOWER) -> int:
        return t - 1 if branch == LOWER else -t - 1

    def r_of(self, t: int, branch: str = LOWER) -> TangleFraction:
        m = self.vertical_part(t, branch)
        return add_horizontal(star_vertical(INFINITY, m), self.n)

    def shape_of(self, t: int, branch: str = LOWER) -> str:
        m = self.vertical_part(t, branch)
        if m == 0:
            return "infinity"
        if abs(m) == 1:
            return "integral"
        return "vertical_plus_integral"

    def decomposition(self, t: int, branch: str = LOWER) -> tuple[int, int]:
        """R as (n) + (1/m)."""
        return (self.n, self.vertical_part(t, branch))


def r_options_for_integral_P(n: int) -> RIntegralFamily:
    return RIntegralFamily(n)


@dataclass(frozen=True)
class FourthFamily:
    """The Montesinos family, inverted system only.

    For p in {0, 1} the lower branch is P = (-p), R = (-(1+p)), O_c
    integral, O_f^2 = (1/2, 2/3, p-1) and for k != 2 the two options
    -(-p + 1/(2k)) and +(p + 1/(2k+2)); the upper branch mirrors all of
    it.  The second option flips the product handedness for k >= 1, which
    is recorded per option.  The k range is pinned to 0..3.
    """

    p: int
    branch: str
    pinned_k1: bool = False  # chirality-refined families fix the k=1 option

    def __post_init__(self):
        if self.p not in (0, 1):
            raise DomainError("fourth family needs p in {0, 1}")
        if self.branch not in (UPPER, LOWER):
            raise DomainError("branch must be upper or lower")

    @property
    def system(self) -> SystemSpec:
        return SystemSpec(INVERTED, (0, 1, 2, 3), self.branch)

    @property
    def sigma(self) -> int:
        return 1 if self.branch == LOWER else -1

    @property
    def P(self) -> TangleFraction:
        return fraction(-self.sigma * self.p)

    @property
    def R(self) -> TangleFraction:
        return fraction(-self.sigma * (1 + self.p))

    @property
    def o2(self) -> MontesinosExpr:
        base = MontesinosExpr(
            (fraction(1, 2), fraction(2, 3), fraction(self.p - 1))
        )
        expr = base if self.sigma > 0 else base.mirror()
        normal = reduce_to_normal_form(expr)
        assert isinstance(normal, MontesinosExpr)
        return normal

    def options(self, k: int) -> tuple[tuple[TangleValue, int], ...]:
        """(tangle, product-sign) choices for index k."""
        if k not in (0, 1, 2, 3):
            raise DomainError("the Montesinos family is pinned to k in 0..3")
        if k == 2:
            return ((self.o2, self.sigma),)
        base1 = add_horizontal(star_vertical(INFINITY, 2 * k), -self.p)
        base2 = add_horizontal(star_vertical(INFINITY, 2 * k + 2), self.p)
        if self.sigma > 0:
            opt1, opt2 = mirror(base1), base2
        else:
            opt1, opt2 = base1, mirror(base2)
        flip = -self.sigma if k >= 1 else self.sigma
        out = ((opt1, self.sigma), (opt2, flip))
        if k == 1 and self.pinned_k1:
            return out[:1]
        return out

    def primary_o_f(self) -> dict:
        return {k: self.options(k)[0][0] for k in (0, 1, 2, 3)}

    def instantiate(self, choices: Optional[Mapping[int, int]] = None) -> ConcreteSolution:
        choices = dict(choices or {})
        o_f = {}
        expected = {}
        for k in (0, 1, 2, 3):
            opts = self.options(k)
            value, sign = opts[min(choices.get(k, 0), len(opts) - 1)]
            o_f[k] = value
            expected[k] = product_target(INVERTED, k, sign)
        return ConcreteSolution(self.system, self.P, self.R, ZERO, o_f, expected, 4)

    def to_json(self) -> dict:
        sol = self.instantiate()
        report = verify_solution(
            sol.P, sol.R, sol.O_c, sol.O_f, self.system, sol.expected_products
        )
        return {
            "system": INVERTED,
            "branch": self.branch,
            "class": 4,
            "p": self.p,
            "P": value_text(self.P),
            "R": value_text(self.R),
            "O_c_options": [value_text(ZERO), "any integral part of O^k"],
            "O_f": {
                str(k): [value_text(v) for v, _ in self.options(k)] for k in (0, 1, 2, 3)
            },
            "checks": [c.to_json() for c in report.checks],
            "pass": report.passed,
        }


def fourth_solution(p: int, branch: str) -> FourthFamily:
    """The inverted-only Montesinos family for p in {0, 1}."""
    return FourthFamily(p, branch)


def chiral_refinement(p: int) -> FourthFamily:
    """Right-handed-product refinement: P = (p) with p in {0, -1}.

    R = (p - 1), O^2 = (1/2, 2/3, -p-1), O^1 pinned to (-p - 1/2), with
    both options kept for k in {0, 3}.
    """
    if p not in (0, -1):
        raise DomainError("chiral refinement needs p in {0, -1}")
    return FourthFamily(-p, LOWER, pinned_k1=True)


@dataclass(frozen=True)
class ConstraintResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ConstraintReport:
    results: tuple[ConstraintResult, ...]
    passed: bool

    def to_json(self) -> dict:
        return {"pass": self.passed, "constraints": [r.to_json() for r in self.results]}


def _is_vertical_plus_integral(f: TangleFraction) -> bool:
    """f = (m) + (1/v) with |v| >= 2, i.e. numerator is +-1 mod denominator."""
    return f.den >= 2 and f.num % f.den in (1, f.den - 1)


def class2_constraints_check(solution: ConcreteSolution) -> ConstraintReport:
    """Validate the structural constraints of an integral-P family.

    Shape requirements: P and O_c integral; each O_f^k one of infinity,
    integral, vertical or vertical plus integral, with at most one infinity
    and at most two integrals; R one of infinity, integral or vertical plus
    integral, and never infinity together with an infinite O_f^k.  On top
    of the shapes, an infinite O_f^i forces R vertical or (+-1); an
    infinite O_f^i alongside an integral O_f^j forces P in {0, +-2}; and
    with P != (0) the infinity can only sit at i = 0 with any integral
    O_f^j at j = 1.
    """
    P, R, o_f = solution.P, solution.R, solution.O_f
    results = []

    def add(name, passed, detail=""):
        results.append(ConstraintResult(name, bool(passed), detail))

    add("P_integral", P.is_integral, f"P = {P}")
    add("O_c_integral", solution.O_c.is_integral, f"O_c = {solution.O_c}")
    shapes_ok = all(
        f.is_infinity or f.is_integral or _is_vertical_plus_integral(f)
        for f in o_f.values()
        if isinstance(f, TangleFraction)
    )
    add("O_f_shapes", shapes_ok, "each O_f^k infinity, integral or vertical+integral")
    inf_ks = sorted(k for k, f in o_f.items() if isinstance(f, TangleFraction) and f.is_infinity)
    int_ks = sorted(k for k, f in o_f.items() if isinstance(f, TangleFraction) and f.is_integral)
    add("infinity_at_most_once", len(inf_ks) <= 1, f"infinite at k = {inf_ks}")
    add("integral_at_most_twice", len(int_ks) <= 2, f"integral at k = {int_ks}")
    r_ok = R.is_infinity or R.is_integral or _is_vertical_plus_integral(R)
    add("R_shape", r_ok, f"R = {R}")
    add(
        "R_and_O_f_not_both_infinity",
        not (R.is_infinity and inf_ks),
        f"R = {R}, infinite O_f at {inf_ks}",
    )
    if inf_ks:
        add(
            "i_infinite_O_f_forces_R_vertical_or_unit",
            R.is_vertical or (R.is_integral and abs(R.num) == 1),
            f"R = {R}",
        )
        if int_ks:
            add(
                "ii_infinity_plus_integral_force_P",
                P.is_integral and P.num in (0, 2, -2),
                f"P = {P}",
            )
        if P != ZERO:
            add("iii_infinity_index_zero", inf_ks == [0], f"infinite at k = {inf_ks}")
            if int_ks:
                add("iii_integral_index_one", int_ks == [1], f"integral at k = {int_ks}")
    return ConstraintReport(tuple(results), all(r.passed for r in results))


def _fraction_sort_key(f: TangleFraction):
    if f.is_infinity:
        return (1, Fraction(0), 0)
    return (0, Fraction(f.num, f.den), f.den)


def _reduced_fractions(bound: int):
    """All reduced extended rationals with |num| <= bound, 0 <= den <= bound."""
    from math import gcd

    out = [INFINITY]
    for den in range(1, bound + 1):
        for num in range(-bound, bound + 1):
            if gcd(abs(num), den) == 1:
                out.append(TangleFraction(num, den))
    out.append(ZERO)
    return out


def brute_force_rational(
    system: SystemSpec,
    P: TangleFraction,
    bound: int,
    k: int,
    r_candidates: Optional[Sequence[TangleFraction]] = None,
) -> list[tuple[TangleFraction, TangleFraction]]:
    """All rational pairs (O, R) within bound solving the index-k equations.

    O and R range over reduced fractions with entries up to ``bound``
    (R restricted to ``r_candidates`` when given).  The substrate closure
    must be the unknot and the product closure must land in the index-k
    torus class of either handedness.  Output is sorted canonically.
    """
    if bound > 200:
        raise DomainError("bound above desk scale (200)")
    targets = {
        product_target(system.kind, k, 1),
        product_target(system.kind, k, -1),
    }
    o_candidates = [
        o for o in _reduced_fractions(bound)
        if abs(o.num * P.den + o.den * P.num) == 1
    ]
    r_list = list(r_candidates) if r_candidates is not None else _reduced_fractions(bound)
    hits = []
    for o in o_candidates:
        for r in r_list:
            if closure_of_sum(o, r) in targets:
                hits.append((o, r))
    hits.sort(key=lambda pair: (_fraction_sort_key(pair[0]), _fraction_sort_key(pair[1])))
    return hits


def brute_force_montesinos(bound: int) -> list[MontesinosExpr]:
    """Two-summand Montesinos candidates whose closures match the k = 2 data.

    Enumerates (u/v, x/y, m0) with denominators (and numerator magnitudes)
    up to ``bound``, plus a compensating outer star in [-2, 2], keeping the
    expressions that close to the unknot with (0) and to a b(5, 1)-class
    4-plat with (1) or (-1).  Results are reduced normal forms, deduplicated
    and sorted by text form.
    """
    from math import gcd

    if bound > 8:
        raise DomainError("bound above desk scale (8)")
    leaves = []
    for den in range(2, bound + 1):
        for num in range(-bound, bound + 1):
            if num != 0 and gcd(abs(num), den) == 1:
                leaves.append(TangleFraction(num, den))
    targets = {canonicalize(5, 1), canonicalize(-5, 1)}
    seen = set()
    hits = []
    for u in leaves:
        for x in leaves:
            for m0 in range(-2, 3):
                for s in range(-2, 3):
                    trail = (TrailOp(STAR, s),) if s else ()
                    expr = MontesinosExpr((u, add_horizontal(x, m0)), trail)
                    normal = reduce_to_normal_form(expr)
                    if not isinstance(normal, MontesinosExpr):
                        continue
                    if closure_with(normal, ZERO) != UNKNOT:
                        continue
                    if not any(
                        closure_with(normal, fraction(r)) in targets for r in (1, -1)
                    ):
                        continue
                    key = (normal.summands, normal.trail)
                    if key not in seen:
                        seen.add(key)
                        hits.append(normal)
    hits.sort(key=str)
    return hits


def compensating_normal_form(
    o: TangleValue, r: TangleFraction
) -> tuple[TangleValue, TangleFraction]:
    """One representative of (O, R) modulo compensating vertical twists.

    Adding n vertical twists to O and -n to R never changes any closure of
    O with R.  A Montesinos O drops its outer star onto R; a rational O
    takes the twist count minimizing its denominator (preferring the
    smaller shift), so verticals normalize to the infinity tangle.
    """
    if isinstance(o, MontesinosExpr):
        s = o.star_count
        base = MontesinosExpr(o.summands)
        return base, star_vertical(r, s)
    if o.num == 0:
        return o, r
    best = min(
        range(-abs(o.den) - 1, abs(o.den) + 2),
        key=lambda n: (abs(o.den + n * o.num), abs(n)),
    )
    return star_vertical(o, best), star_vertical(r, -best)


def xer_demo(bound: int) -> list[tuple[TangleFraction, TangleFraction]]:
    """Vertical-tangle solutions of the deletion system with product b(4, 1).

    Brute-forces O = (1/r) vertical (2 <= |r| <= bound) and rational R with
    entries up to ``bound`` such that N(O + (0)) is the unknot (automatic)
    and N(O + R) = b(4, 1) exactly.
    """
    target = canonicalize(4, 1)
    hits = []
    for r_twists in range(-bound, bound + 1):
        if abs(r_twists) < 2:
            continue
        o = star_vertical(INFINITY, r_twists)
        for r in _reduced_fractions(bound):
            if closure_of_sum(o, r) == target:
                hits.append((o, r))
    hits.sort(key=lambda pair: (_fraction_sort_key(pair[0]), _fraction_sort_key(pair[1])))
    return hits


def xer_darcy_family(R: TangleFraction) -> Optional[dict]:
    """Match R against the four deletion-system recombinant families.

    The families are 1/j, 3/(3+j), 5/(5+j) and (4k-1)/(4+j(4k-1)) over
    integers j (and k >= 1).  Returns the family data or None.
    """

    def solves(m: int) -> Optional[int]:
        # x with fraction(m, x) == R, i.e. m/x = R as extended rationals
        if R.num == 0:
            return None
        if m * R.den % R.num:
            return None
        x = m * R.den // R.num
        return x if fraction(m, x) == R else None

    for family, m, offset in (("1/j", 1, 0), ("3/(3+j)", 3, 3), ("5/(5+j)", 5, 5)):
        x = solves(m)
        if x is not None:
            return {"family": family, "j": x - offset}
    for k in range(1, 4 * max(R.den, abs(R.num), 1) + 2):
        m = 4 * k - 1
        x = solves(m)
        if x is not None and (x - 4) % m == 0:
            return {"family": "(4k-1)/(4+j(4k-1))", "k": k, "j": (x - 4) // m}
    return None


def class_descriptors(kind: str) -> list[dict]:
    """Structured summaries of all solution classes with live samples."""
    system_lower = SystemSpec(kind, (0, 1, 2, 3), LOWER)
    out = []

    fam1 = parametric_family(system_lower, INFINITY)
    sol1 = fam1.instantiate(0)
    rep1 = verify_solution(sol1.P, sol1.R, sol1.O_c, sol1.O_f, system_lower)
    out.append(
        {
            "class": 1,
            "shapes": "P = (inf); O_c, O_f^k and R integral",
            "constraints": ["R = (-e*t) and O^k = (e*n) run over all integers t"],
            "sample": rep1.to_json(),
        }
    )

    fam2 = parametric_family(system_lower, fraction(2))
    t2 = -1  # R = (1) on this branch
    sol2 = fam2.instantiate(t2)
    rep2 = verify_solution(sol2.P, sol2.R, sol2.O_c, sol2.O_f, system_lower)
    out.append(
        {
            "class": 2,
            "shapes": "P, O_c integral; O_f^k infinity (<= once), integral (<= twice), "
            "vertical or vertical+integral; R infinity, integral or vertical+integral",
            "constraints": [
                "R and O_f^k never both infinity",
                "infinite O_f^i forces R vertical or (+-1)",
                "infinite O_f^i with integral O_f^j forces P in {0, +-2}",
                "P != (0) pins the infinity to i = 0 and any integral to j = 1",
            ],
            "sample": rep2.to_json(),
        }
    )

    fam3 = parametric_family(system_lower, fraction(11, 7))
    sol3 = fam3.instantiate(0)
    rep3 = verify_solution(sol3.P, sol3.R, sol3.O_c, sol3.O_f, system_lower)
    out.append(
        {
            "class": 3,
            "shapes": "P, R strictly rational; O_c integral; O_f^k strictly rational "
            "(integral for at most one k)",
            "constraints": ["no integral R once O^k has denominator away from +-1 mod the product order"],
            "sample": rep3.to_json(),
        }
    )

    if kind == INVERTED:
        fam4 = fourth_solution(0, LOWER)
        out.append(
            {
                "class": 4,
                "shapes": "P, R, O_c integral; O_f^2 the minimal prime Montesinos tangle",
                "constraints": [
                    "p in {0, 1}; O_f^2 = (1/2, 2/3, p-1) up to mirror",
                    "O_f^{k != 2} from -(-p + 1/(2k)) or +(p + 1/(2k+2)) up to mirror",
                ],
                "sample": fam4.to_json(),
            }
        )
    return out
