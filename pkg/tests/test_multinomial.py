"""Constrained multinomial-sum tests, including the sign-set specialization."""

import math

import pytest
from gmpy2 import mpq

from polyavg.ensemble import AverageKey, parse_coefficient_set
from polyavg.exactnum import GaussianRational
from polyavg.multinomial import (
    CompositionBudgetError,
    compositions,
    littlewood_e,
    multinomial_e,
    multinomial_e_literal,
    pair_count,
)
from polyavg.recursion import dp_e, get_table
from polyavg.reference import REFERENCE_TABLES


def test_composition_stream_examples():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 4)) == [(0, 0, 0, 0)]
    for alpha in (1, 2, 3):
        for parts in (1, 2, 4):
            n = parts - 1
            count = sum(1 for _ in compositions(alpha, parts))
            assert count == math.comb(n + alpha, alpha)


def test_composition_stream_is_lexicographic():
    seq = list(compositions(3, 3))
    assert seq == sorted(seq)
    assert len(seq) == len(set(seq))


def test_multinomial_e_examples():
    T12 = parse_coefficient_set("{1,2}")
    got = multinomial_e(T12, AverageKey(1, 2, 2, 0))
    # by hand: (2*17 + 4*25 + 2*17) / 4
    assert got == GaussianRational(mpq(2 * 17 + 4 * 25 + 2 * 17, 4)) == GaussianRational(42)
    assert multinomial_e(parse_coefficient_set("{-1,1}"), AverageKey(2, 3, 3, 0)) == GaussianRational(93)
    got = multinomial_e(parse_coefficient_set("{-1,0,1}"), AverageKey(1, 1, 1, 0))
    assert got == GaussianRational(mpq(4, 3))


def test_littlewood_examples():
    assert littlewood_e(AverageKey(1, 2, 2, 0)) == GaussianRational(6)
    assert littlewood_e(AverageKey(4, 1, 1, 0)) == GaussianRational(5)
    assert littlewood_e(AverageKey(3, 4, 4, 0)) == GaussianRational(2812)


def test_littlewood_matches_generic_on_whole_reference_grid():
    T = parse_coefficient_set("{-1,1}")
    ref = REFERENCE_TABLES["{-1,1}"]
    for n in range(ref.n_max + 1):
        for alpha in range(1, ref.alpha_max + 1):
            key = AverageKey(n, alpha, alpha, 0)
            sign_sum = littlewood_e(key)
            generic = multinomial_e(T, key)
            assert sign_sum == generic, (n, alpha)
            assert sign_sum.re == ref.value(n, alpha), (n, alpha)


def test_factorized_equals_literal_equals_recursion_on_tiny_keys():
    for lit in ("{1,2}", "{0,i}", "{1/2,-1/2}"):
        T = parse_coefficient_set(lit)
        for n in (0, 1, 2):
            for s in (0, 1, 2):
                for t in (0, 1, 2):
                    for m in range(-n * s - 1, n * t + 2):
                        key = AverageKey(n, s, t, m)
                        fast = multinomial_e(T, key)
                        assert fast == multinomial_e_literal(T, key), (lit, key)
                        assert fast == dp_e(T, key), (lit, key)


def test_weighted_keys_match_recursion():
    T = parse_coefficient_set("{1/2,-1/2,i}")
    table = get_table(T, 4, 3, 3)
    for n in range(5):
        for alpha in (1, 2, 3):
            for m in range(-alpha * n, alpha * n + 1):
                key = AverageKey(n, alpha, alpha, m)
                assert multinomial_e(T, key) == table.dp_e(key), key


def test_support_bound_short_circuit():
    T = parse_coefficient_set("{1,2}")
    assert multinomial_e(T, AverageKey(3, 2, 2, 7)).is_zero()
    assert multinomial_e(T, AverageKey(3, 2, 2, -7)).is_zero()


def test_budget_guard():
    T = parse_coefficient_set("{-1,1}")
    assert pair_count(40, 5, 5) > 1000
    with pytest.raises(CompositionBudgetError) as info:
        multinomial_e(T, AverageKey(40, 5, 5, 0), budget=1000)
    assert "recursion" in str(info.value)
    with pytest.raises(CompositionBudgetError):
        littlewood_e(AverageKey(40, 5, 5, 0), budget=1000)
