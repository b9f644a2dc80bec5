"""Recursion-table tests: values, sequences, bounds, persistence."""

import pytest
from gmpy2 import mpq

from polyavg.ensemble import AverageKey, averaged_power_poly, parse_coefficient_set
from polyavg.exactnum import GaussianRational
from polyavg.recursion import RecursionTable, TableBoundsError, dp_e, get_table, mu_sequence


def test_dp_examples():
    assert dp_e(parse_coefficient_set("{-1,1}"), AverageKey(1, 1, 1, 0)) == GaussianRational(2)
    got = dp_e(parse_coefficient_set("{-1,0,1}"), AverageKey(2, 2, 2, 0))
    assert got == GaussianRational(mpq(66, 9))
    assert dp_e(parse_coefficient_set("{1,2}"), AverageKey(1, 2, 2, 0)) == GaussianRational(42)


def test_mu_sequence_examples():
    assert [int(v.re) for v in mu_sequence(parse_coefficient_set("{-1,1}"), 2, 4)] == [1, 6, 15, 28, 45]
    got = mu_sequence(parse_coefficient_set("{0,1}"), 2, 3)
    assert [str(v) for v in got] == ["1/2", "2", "5", "19/2"]
    assert mu_sequence(parse_coefficient_set("{0,i}"), 0, 6) == [GaussianRational(1)] * 7


def test_base_layer_is_kronecker_delta_times_power_sum():
    for lit in ("{-1,1}", "{0,i}", "{1/2,-1/2,i}"):
        T = parse_coefficient_set(lit)
        table = RecursionTable(T, 0, 3, 3)
        for s in range(4):
            for t in range(4):
                assert table.e(0, s, t, 0) == T.power_sum(s, t) / T.d
                assert table.e(0, s, t, 2).is_zero()


def test_weighted_examples():
    T12 = parse_coefficient_set("{1,2}")
    table = get_table(T12, 2, 2, 2)
    assert table.weighted_mu(1, 1, 1) == GaussianRational(mpq(9, 4))
    T = parse_coefficient_set("{-1,1}")
    assert get_table(T, 2, 2, 2).weighted_mu(2, 1, 2) == GaussianRational(1)


def test_support_bound_vanishing():
    T = parse_coefficient_set("{1,2}")
    table = get_table(T, 4, 3, 3)
    for n in range(5):
        for alpha in (1, 2, 3):
            assert table.weighted_mu(alpha, n, alpha * n + 1).is_zero()
            assert table.weighted_mu(alpha, n, -alpha * n - 1).is_zero()


def test_oracle_equivalence_small_battery():
    for lit in ("{-1,1}", "{0,1}", "{0,i}", "{1,2}"):
        T = parse_coefficient_set(lit)
        table = get_table(T, 4, 2, 2)
        for n in range(5):
            for s in range(3):
                for t in range(3):
                    averaged = averaged_power_poly(T, n, s, t)
                    for m in range(-n * s, n * t + 1):
                        assert table.e(n, s, t, m) == averaged.constant_term(m), (lit, n, s, t, m)


def test_conjugation_symmetry_on_table():
    T = parse_coefficient_set("{1/2,-1/2,i}")
    table = get_table(T, 4, 2, 2)
    for n in range(5):
        for s in range(3):
            for t in range(3):
                for m in range(-n * s - 1, n * t + 2):
                    assert table.e(n, s, t, m) == table.e(n, t, s, -m).conjugate()


def test_bounds_error_mentions_regrowth():
    table = RecursionTable(parse_coefficient_set("{-1,1}"), 3, 2, 2)
    with pytest.raises(TableBoundsError) as info:
        table.e(4, 1, 1, 0)
    assert "grow" in str(info.value)
    with pytest.raises(TableBoundsError):
        table.e(1, 3, 1, 0)


def test_shared_table_registry_grows():
    T = parse_coefficient_set("{1/2,-1/2}")
    small = get_table(T, 2, 1, 1)
    bigger = get_table(T, 5, 2, 2)
    assert bigger.bounds >= (5, 2, 2)
    assert get_table(T, 3, 1, 1) is bigger


def test_dump_load_round_trip(tmp_path):
    T = parse_coefficient_set("{0,i}")
    table = RecursionTable(T, 5, 2, 2)
    path = tmp_path / "snapshot.json"
    table.dump(path)
    loaded = RecursionTable.load(path)
    assert loaded.set == T
    assert loaded.bounds == table.bounds
    assert loaded.fill_ops == 0
    for n in range(6):
        for s in range(3):
            for t in range(3):
                for m in range(-n * s, n * t + 1):
                    assert loaded.e(n, s, t, m) == table.e(n, s, t, m)
    path2 = tmp_path / "again.json"
    loaded.dump(path2)
    assert path.read_bytes() == path2.read_bytes()


def test_load_rejects_unknown_format(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "other", "version": 9}')
    with pytest.raises(ValueError):
        RecursionTable.load(bad)


def test_fill_ops_counter_positive():
    table = RecursionTable(parse_coefficient_set("{-1,1}"), 10, 2, 2)
    assert table.fill_ops > 0
