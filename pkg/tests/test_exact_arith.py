import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kronlab.exact_arith import (NonCoprimeError, angular_norm, bezout_coprime,
                                 decimal_approx, nearest_int,
                                 nearest_int_distance, parse_rational,
                                 rational_from_json, rational_to_csv,
                                 rational_to_json)

fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=997)


def test_nearest_int_distance_examples():
    assert nearest_int_distance(Fraction(3, 10)) == Fraction(3, 10)
    assert nearest_int_distance(Fraction(7, 4)) == Fraction(1, 4)
    assert nearest_int_distance(Fraction(-1, 2)) == Fraction(1, 2)


def test_angular_norm_examples():
    assert angular_norm([Fraction(0)] * 3) == 0
    assert angular_norm([Fraction(3, 10), Fraction(7, 4)]) == Fraction(3, 10)
    assert angular_norm([Fraction(1, 2), Fraction(1, 3)]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        angular_norm([])


@given(fractions_st, st.integers(min_value=-50, max_value=50))
def test_distance_periodic_and_even(u, k):
    assert nearest_int_distance(u + k) == nearest_int_distance(u)
    assert nearest_int_distance(-u) == nearest_int_distance(u)


@given(fractions_st)
def test_distance_range_and_half_boundary(u):
    d = nearest_int_distance(u)
    assert 0 <= d <= Fraction(1, 2)
    # 1/2 attained exactly on half-odd-integers
    assert (d == Fraction(1, 2)) == ((2 * u).denominator == 1 and (2 * u) % 2 != 0)


@given(fractions_st)
def test_nearest_int_is_nearest(u):
    k = nearest_int(u)
    assert abs(u - k) == nearest_int_distance(u)
    # downward tie rule
    if u - math.floor(u) == Fraction(1, 2):
        assert k == math.floor(u)


def test_bezout_examples():
    assert bezout_coprime(1, 2) == (1, 0)
    assert bezout_coprime(2, 3) == (2, 1)
    assert bezout_coprime(3, 5) == (2, 1)
    assert bezout_coprime(5, 1) == (1, 4)  # b = 1 degenerate pair


@given(st.integers(min_value=1, max_value=500), st.integers(min_value=1, max_value=500))
def test_bezout_identity_and_canonical_range(a, b):
    if math.gcd(a, b) != 1:
        with pytest.raises(NonCoprimeError):
            bezout_coprime(a, b)
        return
    g, h = bezout_coprime(a, b)
    assert a * g - b * h == 1
    if b > 1:
        assert 1 <= g <= b
        assert g == pow(a, -1, b)


def test_bezout_rejects_nonpositive():
    with pytest.raises(ValueError):
        bezout_coprime(0, 3)
    with pytest.raises(ValueError):
        bezout_coprime(3, -1)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4),
       st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_fraction_arithmetic_matches_integer_arithmetic(p, q, r, s):
    left = Fraction(p, q) + Fraction(r, s)
    num, den = p * s + r * q, q * s
    shrink = math.gcd(num, den)
    assert (left.numerator, left.denominator) == (num // shrink, den // shrink)


def test_parse_rational_forms():
    assert parse_rational("3/10") == Fraction(3, 10)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("0.25") == Fraction(1, 4)
    assert parse_rational(" 1/2 ") == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_rational("one half")


@given(fractions_st)
def test_serialization_round_trips(q):
    assert rational_from_json(rational_to_json(q)) == q
    assert parse_rational(rational_to_csv(q)) == q


def test_decimal_rendering_half_even_and_precision():
    assert decimal_approx(Fraction(1, 4), 12) == "0.25"
    assert decimal_approx(Fraction(1, 8), 2) == "0.12"   # 0.125 rounds half-even
    assert decimal_approx(Fraction(3, 8), 2) == "0.38"   # 0.375 rounds half-even
    assert decimal_approx(Fraction(1, 3), 5) == "0.33333"
    assert rational_to_json(Fraction(17, 101))["approx"].startswith("0.168316831683"[:12])


def test_csv_form_always_carries_denominator():
    assert rational_to_csv(Fraction(0)) == "0/1"
    assert rational_to_csv(Fraction(-3, 7)) == "-3/7"
