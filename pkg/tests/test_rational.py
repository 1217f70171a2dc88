"""Fraction arithmetic, continued fractions and the tangle classification."""

import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tanglekit.errors import InfinityInputError
from tanglekit.rational import (
    INFINITY,
    TangleClass,
    TangleFraction,
    ZERO,
    add_horizontal,
    cf_eval,
    cf_expand,
    classify,
    fraction,
    is_canonical_twist_vector,
    mirror,
    star_vertical,
)


def reference_cf_eval(vector):
    """Independent recursive evaluation with Fraction; None plays infinity."""
    value = None  # innermost seed is the infinity tangle
    for a in vector:
        if value is None:
            value = Fraction(a)
        elif value == 0:
            value = None  # a + 1/0
        else:
            value = a + 1 / value
    return value


def as_fraction(f: TangleFraction):
    return None if f.is_infinity else Fraction(f.num, f.den)


reduced_fractions = st.builds(
    fraction,
    st.integers(min_value=-(10**6), max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
)


class TestContinuedFractions:
    def test_expand_worked_example(self):
        assert cf_expand(fraction(11, 7)) == (3, 1, 1, 1)

    def test_expand_zero(self):
        assert cf_expand(ZERO) == (0,)

    def test_expand_five_halves(self):
        assert cf_expand(fraction(5, 2)) == (2, 2)
        assert reference_cf_eval((2, 2)) == Fraction(5, 2)

    def test_expand_infinity_is_reserved(self):
        with pytest.raises(InfinityInputError):
            cf_expand(INFINITY)
        assert cf_eval(()) == INFINITY

    def test_eval_worked_example(self):
        assert cf_eval((3, 1, 1, 1)) == fraction(11, 7)

    def test_eval_single_entry(self):
        for n in range(-9, 10):
            assert cf_eval((n,)) == fraction(n)

    def test_eval_with_interior_zero(self):
        assert cf_eval((2, 0, 3)) == fraction(5, 1)
        assert reference_cf_eval((2, 0, 3)) == 5

    @given(reduced_fractions)
    @settings(max_examples=300)
    def test_round_trip(self, f):
        assert cf_eval(cf_expand(f)) == f

    @given(reduced_fractions)
    @settings(max_examples=200)
    def test_expansion_is_canonical(self, f):
        assert is_canonical_twist_vector(cf_expand(f))

    @given(st.lists(st.integers(min_value=-9, max_value=9), max_size=8))
    @settings(max_examples=200)
    def test_eval_matches_reference(self, vector):
        got = cf_eval(vector)
        assert as_fraction(got) == reference_cf_eval(tuple(vector))


class TestTwistOperations:
    def test_add_horizontal_absorption(self):
        assert add_horizontal(fraction(2, 3), -1) == fraction(-1, 3)

    def test_add_horizontal_identity(self):
        for f in (fraction(7, 3), INFINITY, ZERO):
            assert add_horizontal(f, 0) == f

    def test_add_horizontal_derived(self):
        assert add_horizontal(fraction(-5, 3), 2) == fraction(1, 3)

    def test_add_horizontal_infinity_fixed(self):
        assert add_horizontal(INFINITY, 11) == INFINITY

    def test_star_vertical_from_infinity(self):
        assert star_vertical(INFINITY, 5) == fraction(1, 5)

    def test_star_vertical_zero_fixed(self):
        assert star_vertical(ZERO, 7) == ZERO

    def test_star_vertical_to_infinity(self):
        assert star_vertical(fraction(1, 2), -2) == INFINITY

    def test_mirror(self):
        assert mirror(fraction(1, 2)) == fraction(-1, 2)
        assert mirror(INFINITY) == INFINITY

    @given(reduced_fractions, st.integers(-50, 50), st.integers(-50, 50))
    @settings(max_examples=200)
    def test_add_horizontal_additive(self, f, a, b):
        assert add_horizontal(add_horizontal(f, a), b) == add_horizontal(f, a + b)

    @given(reduced_fractions, st.integers(-50, 50), st.integers(-50, 50))
    @settings(max_examples=200)
    def test_star_vertical_additive(self, f, a, b):
        assert star_vertical(star_vertical(f, a), b) == star_vertical(f, a + b)

    @given(reduced_fractions, st.integers(-20, 20))
    @settings(max_examples=200)
    def test_mirror_commutes(self, f, n):
        assert mirror(add_horizontal(f, n)) == add_horizontal(mirror(f), -n)
        assert mirror(star_vertical(f, n)) == star_vertical(mirror(f), -n)

    @given(reduced_fractions)
    @settings(max_examples=100)
    def test_mirror_involution(self, f):
        assert mirror(mirror(f)) == f


class TestClassification:
    def test_examples(self):
        assert classify(fraction(7, 1)) == TangleClass.INTEGRAL
        assert classify(fraction(1, 4)) == TangleClass.VERTICAL
        assert classify(fraction(11, 7)) == TangleClass.STRICTLY_RATIONAL
        assert classify(INFINITY) == TangleClass.INFINITY
        assert classify(ZERO) == TangleClass.INTEGRAL

    @given(st.one_of(reduced_fractions, st.just(INFINITY)))
    @settings(max_examples=200)
    def test_partition(self, f):
        tag = classify(f)
        matches = [
            tag == TangleClass.INFINITY and f.is_infinity,
            tag == TangleClass.INTEGRAL and f.is_integral,
            tag == TangleClass.VERTICAL and f.is_vertical,
            tag == TangleClass.STRICTLY_RATIONAL and f.is_strictly_rational,
        ]
        assert sum(matches) == 1


class TestCanonicalForm:
    def test_fraction_reduces(self):
        assert fraction(2, 4) == fraction(1, 2)
        assert fraction(3, -6) == fraction(-1, 2)
        assert fraction(-4, 0) == INFINITY

    def test_invalid_raw_pairs(self):
        with pytest.raises(ValueError):
            TangleFraction(2, 4)
        with pytest.raises(ValueError):
            TangleFraction(1, -2)
        with pytest.raises(ValueError):
            fraction(0, 0)


def test_diagram_consistency_of_star_convention():
    """Appending vertical twists to a diagram matches the fraction action.

    Closing the canonical diagram of star_vertical(f, n) and closing the
    diagram of f with n vertical twists appended must give equal brackets;
    this pins the twist sign convention against the diagram level.
    """
    from tanglekit.diagram import (
        add_vertical_twists,
        diagram_from_fraction,
        numerator_close,
    )
    from tanglekit.invariants import jones_equal

    rng = random.Random(20240)
    pool = [
        fraction(p, q)
        for q in range(1, 6)
        for p in range(-6, 7)
        if gcd(abs(p), q) == 1
    ] + [INFINITY]
    checked = 0
    while checked < 25:
        f = rng.choice(pool)
        n = rng.randint(-4, 4)
        g = star_vertical(f, n)
        if g.is_infinity:
            base_crossings = 0 if f.is_infinity else sum(abs(a) for a in cf_expand(f))
        else:
            base_crossings = sum(abs(a) for a in cf_expand(g))
        if f.is_infinity:
            appended_total = abs(n)
        else:
            appended_total = sum(abs(a) for a in cf_expand(f)) + abs(n)
        if base_crossings > 14 or appended_total > 14:
            continue
        via_fraction = numerator_close(diagram_from_fraction(g))
        via_twists = numerator_close(
            add_vertical_twists(diagram_from_fraction(f), n)
        )
        assert jones_equal(via_fraction, via_twists), (f, n)
        checked += 1
