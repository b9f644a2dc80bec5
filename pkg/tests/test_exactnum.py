"""Arithmetic-layer tests: Gaussian rationals and combinatorial counts."""

from fractions import Fraction

import pytest
from gmpy2 import mpq

from polyavg.exactnum import (
    GaussianRational,
    I,
    ONE,
    ParseError,
    binomial,
    format_gaussian,
    format_rational,
    multinomial,
    parse_gaussian,
)


def g(re, im=0):
    return GaussianRational(re, im)


def test_product_of_conjugates():
    assert g(1, 1) * g(1, -1) == g(2)


def test_multiplicative_identity():
    for x in (g(0), g(3, -2), g("1/2", "2/3"), I):
        assert x * ONE == x
        assert ONE * x == x


def test_conjugate_sum_is_real():
    a = GaussianRational(mpq(1, 2), mpq(1, 3))
    assert a + a.conjugate() == g(1)


def test_i_squared():
    assert I ** 2 == g(-1)


def test_zeroth_power_is_one_even_for_zero():
    assert g(0) ** 0 == ONE
    assert g(5, -7) ** 0 == ONE


def test_fourth_power_of_one_plus_i():
    x = g(1, 1)
    by_repeated_product = x * x * x * x
    assert by_repeated_product == g(-4)
    assert x ** 4 == by_repeated_product


def test_division_exact_and_by_zero():
    assert g(2) / g(1, 1) == g(1, -1)
    assert (g(3, 4) / g(3, 4)) == ONE
    with pytest.raises(ZeroDivisionError):
        g(1) / g(0)


def test_subtraction_and_negation():
    assert g(3, 1) - g(1, 1) == g(2)
    assert -g(1, -2) == g(-1, 2)


def test_mixed_operand_types():
    assert g(1, 1) * 2 == g(2, 2)
    assert 2 * g(1, 1) == g(2, 2)
    assert g(1, 1) + mpq(1, 2) == g("3/2", 1)
    assert g(1) + Fraction(1, 3) == g("4/3")


def test_ring_axioms_on_small_grid():
    vals = [g(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)]
    vals += [g("1/2", "-1/3"), g("2/3", "3/2")]
    for x in vals:
        for y in vals:
            assert x + y == y + x
            assert x * y == y * x
            for z in vals[::3]:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_conjugation_is_a_ring_map():
    vals = [g(1, 2), g("-1/2", "1/3"), g(0, -1), g(3)]
    for x in vals:
        assert x.conjugate().conjugate() == x
        sq = x * x.conjugate()
        assert sq.is_real() and sq.re >= 0
        for y in vals:
            assert (x * y).conjugate() == x.conjugate() * y.conjugate()
            assert (x + y).conjugate() == x.conjugate() + y.conjugate()


def test_rendering_rational():
    assert format_rational(mpq(18, 27)) == "2/3"
    assert format_rational(mpq(-4, 2)) == "-2"
    assert format_rational(5) == "5"


@pytest.mark.parametrize(
    "value,text",
    [
        (g(2), "2"),
        (g("-1/2"), "-1/2"),
        (g(0, 1), "i"),
        (g(0, -1), "-i"),
        (g(0, 2), "2i"),
        (g(0, "1/3"), "1/3i"),
        (g(1, 2), "1+2i"),
        (g(1, -1), "1-i"),
        (g("1/2", "-1/3"), "1/2-1/3i"),
        (g(0), "0"),
    ],
)
def test_rendering_and_parsing_round_trip(value, text):
    assert format_gaussian(value) == text
    assert parse_gaussian(text) == value


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse_gaussian("")
    with pytest.raises(ParseError):
        parse_gaussian("1//2")
    with pytest.raises(ParseError):
        parse_gaussian("1/0")
    err = None
    try:
        parse_gaussian("2+3j")
    except ParseError as exc:
        err = exc
    assert err is not None and err.position >= 0


def test_multinomial_examples():
    assert multinomial(2, [1, 1]) == 2
    for alpha in range(6):
        assert multinomial(alpha, [alpha]) == 1
    assert multinomial(4, [2, 2]) == 6


def test_multinomial_rejects_sum_mismatch():
    with pytest.raises(ValueError):
        multinomial(3, [1, 1])
    with pytest.raises(ValueError):
        multinomial(2, [3, -1])


def test_binomial_matches_multinomial_and_pascal():
    for s in range(21):
        for k in range(s + 1):
            assert multinomial(s, [k, s - k]) == binomial(s, k)
            if 0 < k:
                assert binomial(s, k) == binomial(s - 1, k - 1) + binomial(s - 1, k)
