"""Canonical two-bridge forms and closures of rational sums."""

import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tanglekit.errors import NonCoprimeError
from tanglekit.fourplat import (
    FourPlat,
    UNKNOT,
    UNLINK,
    as_torus_2strand,
    canonicalize,
    closure_of_sum,
    closure_sum_fraction,
    fourplat_eq,
    numerator_closure,
)
from tanglekit.rational import (
    INFINITY,
    ZERO,
    fraction,
    mirror,
    star_vertical,
)

small_fractions = st.builds(
    fraction,
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=1, max_value=60),
)


class TestCanonicalize:
    def test_positive_torus(self):
        assert canonicalize(5, 1) == FourPlat(5, 1)

    def test_unit_p_is_unknot(self):
        assert canonicalize(1, 7) == UNKNOT
        assert canonicalize(-1, 3) == UNKNOT
        assert canonicalize(1, 1) == UNKNOT

    def test_negative_p_mirrors(self):
        assert canonicalize(-3, 2) == FourPlat(3, 1)
        assert canonicalize(-3, 2) == canonicalize(3, -2)

    def test_inverse_residues_identified(self):
        assert canonicalize(5, 2) == canonicalize(5, 3)
        assert canonicalize(7, 3) == canonicalize(7, 5)

    def test_mirror_classes_stay_apart(self):
        assert canonicalize(3, 1) != canonicalize(3, 2)
        assert canonicalize(5, 1) != canonicalize(5, 4)

    def test_non_coprime_rejected(self):
        with pytest.raises(NonCoprimeError):
            canonicalize(6, 4)
        with pytest.raises(NonCoprimeError):
            canonicalize(0, 5)

    @given(
        st.integers(min_value=2, max_value=60),
        st.integers(min_value=-200, max_value=200),
    )
    @settings(max_examples=300)
    def test_residue_equivalence(self, p, q):
        if gcd(p, q % p if q % p else p) != 1:
            return
        x = canonicalize(p, q)
        assert canonicalize(p, q + p) == x
        assert canonicalize(p, pow(q % p, -1, p)) == x


class TestNumeratorClosure:
    def test_trefoil(self):
        assert numerator_closure(fraction(3, 1)) == FourPlat(3, 1)

    def test_zero_gives_unlink(self):
        assert numerator_closure(ZERO) == UNLINK

    def test_infinity_gives_unknot(self):
        assert numerator_closure(INFINITY) == UNKNOT

    def test_mirror_fraction(self):
        assert numerator_closure(fraction(-3, 2)) == FourPlat(3, 1)

    @given(small_fractions)
    @settings(max_examples=200)
    def test_mirror_covariance(self, f):
        assert numerator_closure(mirror(f)) == numerator_closure(f).mirror()


class TestClosureOfSum:
    def test_unknot_example(self):
        assert closure_of_sum(fraction(1, 2), fraction(-1, 3)) == UNKNOT
        assert closure_of_sum(fraction(1, 2), fraction(-1, 3), bezout=(0, 1)) == UNKNOT

    def test_pentafoil_example(self):
        assert closure_of_sum(fraction(1, 2), fraction(-4, 3)) == canonicalize(-5, -1)
        assert canonicalize(-5, -1) == FourPlat(5, 1)

    def test_zero_is_identity(self):
        for f in (fraction(7, 3), fraction(-11, 7), INFINITY, ZERO):
            assert closure_of_sum(f, ZERO) == numerator_closure(f)

    def test_infinity_with_integral(self):
        assert closure_of_sum(INFINITY, fraction(9)) == UNKNOT
        assert closure_of_sum(INFINITY, INFINITY) == UNLINK

    def test_infinity_with_vertical_is_denominator_closure(self):
        assert closure_of_sum(fraction(-1, 3), INFINITY) == FourPlat(3, 1)
        assert closure_of_sum(fraction(1, 3), INFINITY) == FourPlat(3, 2)

    def test_rejects_bad_bezout(self):
        with pytest.raises(ValueError):
            closure_of_sum(fraction(1, 2), fraction(2, 3), bezout=(1, 2))

    @given(small_fractions, small_fractions, st.integers(-3, 3))
    @settings(max_examples=300)
    def test_bezout_independence(self, a, c, shift):
        base = closure_sum_fraction(a, c)
        cp, dp = _bezout(c.num, c.den)
        moved = closure_of_sum(a, c, bezout=(cp + shift * c.num, dp + shift * c.den))
        assert moved == canonicalize(base.num, base.den)

    @given(small_fractions, small_fractions)
    @settings(max_examples=300)
    def test_commutative_at_closure(self, a, c):
        assert closure_of_sum(a, c) == closure_of_sum(c, a)

    @given(small_fractions, small_fractions, st.integers(-4, 4))
    @settings(max_examples=300)
    def test_twist_transfer(self, a, b, n):
        assert closure_of_sum(star_vertical(a, n), b) == closure_of_sum(
            a, star_vertical(b, n)
        )

    @given(small_fractions, small_fractions, st.integers(-4, 4))
    @settings(max_examples=300)
    def test_compensating_twists(self, a, b, n):
        assert closure_of_sum(star_vertical(a, n), star_vertical(b, -n)) == closure_of_sum(a, b)


def _bezout(c, d):
    from tanglekit.fourplat import _bezout_partner

    return _bezout_partner(c, d)


class TestTorusRecognition:
    def test_examples(self):
        assert as_torus_2strand(FourPlat(5, 1)) == 5
        assert as_torus_2strand(canonicalize(5, 2)) is None
        assert as_torus_2strand(UNLINK) == 0
        assert as_torus_2strand(UNKNOT) == 1

    def test_mirror_side(self):
        assert as_torus_2strand(canonicalize(-5, 1)) == -5
        assert as_torus_2strand(canonicalize(-7, 1)) == -7

    def test_hopf_collapse(self):
        assert as_torus_2strand(canonicalize(2, 1)) == 2
        assert as_torus_2strand(canonicalize(-2, 1)) == 2


class TestRendering:
    def test_text_and_json(self):
        x = FourPlat(5, 1)
        assert str(x) == "b(5,1)"
        assert x.to_json() == {"p": 5, "q": 1, "torus": 5}
        assert fourplat_eq(x, canonicalize(5, 4).mirror())

    def test_components(self):
        assert UNKNOT.components == 1
        assert UNLINK.components == 2
        assert FourPlat(4, 1).components == 2
        assert FourPlat(5, 2).components == 1


def test_closure_oracle_sample():
    """Spot diagram confirmation of the closure formula on random pairs."""
    from tanglekit.diagram import (
        diagram_from_fraction,
        numerator_close,
        tangle_sum,
    )
    from tanglekit.invariants import determinant, jones_equal
    from tanglekit.rational import cf_expand

    rng = random.Random(7171)
    pool = [
        fraction(p, q)
        for q in range(1, 5)
        for p in range(-5, 6)
        if gcd(abs(p), q) == 1
    ]
    checked = 0
    while checked < 12:
        a, c = rng.choice(pool), rng.choice(pool)
        total = sum(abs(x) for x in cf_expand(a)) + sum(abs(x) for x in cf_expand(c))
        if total > 12:
            continue
        raw = closure_sum_fraction(a, c)
        composed = numerator_close(
            tangle_sum(diagram_from_fraction(a), diagram_from_fraction(c))
        )
        reference = numerator_close(diagram_from_fraction(raw))
        assert jones_equal(composed, reference), (a, c)
        assert determinant(composed) == closure_of_sum(a, c).p
        checked += 1
