"""Fitter tests: exact interpolation, shape search, rendering."""

import pytest
from gmpy2 import mpq

from polyavg.ensemble import parse_coefficient_set
from polyavg.exactnum import GaussianRational
from polyavg.fitter import FitShapeError, QuasiPolynomial, fit, verify_fit
from polyavg.recursion import get_table, mu_sequence


def S(lit):
    return parse_coefficient_set(lit)


def test_fit_sign_set_exponent4():
    qp = fit(mu_sequence(S("{-1,1}"), 2, 12))
    assert [int(c.re) for c in qp.base] == [1, 3, 2]
    assert qp.period2 == () and qp.period4_plus == () and qp.period4_minus == ()


def test_fit_sign_set_exponent8_has_period2_constant():
    qp = fit(mu_sequence(S("{-1,1}"), 4, 16))
    assert [int(c.re) for c in qp.base] == [4, 5, 4, 30, 24]
    assert [int(c.re) for c in qp.period2] == [-3]


def test_fit_constant_sequence():
    qp = fit([GaussianRational(1)] * 9)
    assert qp.period == 1 and list(qp.base) == [GaussianRational(1)]


def test_fit_trims_trailing_zeros():
    qp = fit(mu_sequence(S("{-1,1}"), 4, 20), max_degree=6)
    assert qp.degree() == 4


def test_fit_needs_enough_values():
    with pytest.raises(FitShapeError):
        fit([GaussianRational(1)] * 3, max_degree=5)


def test_fit_shape_insufficient_for_longer_period():
    seq = mu_sequence(S("{1/2,-1/2,i}"), 3, 60)
    with pytest.raises(FitShapeError) as info:
        fit(seq, max_degree=7)
    assert "shape insufficient" in str(info.value)
    qp = fit(seq, periods=(1, 2, 3, 4, 6, 12))
    assert qp.period == 6 and qp.degree() == 5
    assert not qp.has_character_form()
    assert "mod 6" in qp.render()


def test_fit_rejects_unsupported_period():
    with pytest.raises(ValueError):
        fit([GaussianRational(1)] * 12, periods=(5,))


def test_character_form_round_trip():
    qp = QuasiPolynomial.from_characters(
        base=(1, 2), period2=("1/2",), period4_plus=("i",), period4_minus=("-i",)
    )
    assert qp.period == 4
    assert [str(c) for c in qp.base] == ["1", "2"]
    assert [str(c) for c in qp.period2] == ["1/2"]
    assert [str(c) for c in qp.period4_plus] == ["i"]
    assert [str(c) for c in qp.period4_minus] == ["-i"]
    # i^n * i + (-i)^n * (-i) is real for every n
    for n in range(9):
        assert qp.evaluate(n).is_real()


def test_real_sequences_fit_with_zero_period4_parts():
    for lit in ("{0,1}", "{1,2}", "{0,i}"):
        qp = fit(mu_sequence(S(lit), 2, 16))
        assert qp.period4_plus == () and qp.period4_minus == ()


def test_degree_law_on_battery():
    for lit in ("{-1,1}", "{-1,0,1}", "{0,1}", "{0,i}", "{1,2}"):
        T = S(lit)
        for alpha in (1, 2, 3):
            qp = fit(mu_sequence(T, alpha, 40), max_degree=2 * alpha + 1)
            bound = alpha if T.is_zero_sum() else 2 * alpha - 1
            assert qp.degree() <= bound, (lit, alpha, qp.degree())


def test_verify_fit_clean_and_perturbed():
    T = S("{-1,1}")
    table = get_table(T, 40, 3, 3)
    qp = fit(table.mu_sequence(3, 14))
    assert [int(c.re) for c in qp.base] == [1, 4, 9, 6]
    report = verify_fit(qp, table, 3, range(41))
    assert report.ok and len(report.checked) == 41

    T01 = S("{0,1}")
    table01 = get_table(T01, 40, 3, 3)
    qp01 = fit(table01.mu_sequence(3, 40))
    assert verify_fit(qp01, table01, 3, range(41)).ok

    bumped = QuasiPolynomial.from_classes(
        [[c + GaussianRational(1) for c in cl] or [GaussianRational(1)] for cl in qp.classes]
    )
    bad = verify_fit(bumped, table, 3, range(41))
    assert len(bad.mismatches) == 41


def test_render_golden_strings():
    qp10 = fit(mu_sequence(S("{-1,1}"), 5, 33))
    assert qp10.render() == "120n^5+150n^4-350n^3+265n^2+281n-144 + (-1)^n*(-75n+145)"
    qp = fit(mu_sequence(S("{-1,0,1}"), 2, 12))
    assert qp.render() == "(8/9)n^2+(14/9)n+2/3"
    assert fit([GaussianRational(1)] * 8).render() == "1"
    assert fit([GaussianRational(0)] * 8).render() == "0"


def test_quasi_polynomial_equality_across_periods():
    a = QuasiPolynomial.from_characters(base=(1, 2))
    b = QuasiPolynomial.from_classes([(1, 2), (1, 2)])
    assert a == b
    c = QuasiPolynomial.from_characters(base=(1, 2), period2=(1,))
    assert a != c


def test_evaluate_rejects_negative_index():
    qp = QuasiPolynomial.from_characters(base=(1,))
    with pytest.raises(ValueError):
        qp.evaluate(-1)
