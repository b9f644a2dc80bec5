"""Laurent polynomial tests: products, reflection, constant terms, norms."""

import pytest
from gmpy2 import mpq

from polyavg.exactnum import GaussianRational, I
from polyavg.laurent import LaurentPoly, norm_power


def P(coeffs):
    return LaurentPoly(coeffs)


def test_product_difference_of_squares():
    assert P({1: 1, 0: 1}) * P({1: 1, 0: -1}) == P({2: 1, 0: -1})


def test_product_with_zero():
    a = P({3: 2, -1: 1})
    assert a * LaurentPoly.zero() == LaurentPoly.zero()
    assert not (a * LaurentPoly.zero())


def test_hand_convolution_with_negative_exponents():
    left = P({1: 2, 0: 1})
    right = P({-1: 2, 0: 1})
    assert left * right == P({0: 5, 1: 2, -1: 2})


def test_zero_coefficients_are_never_stored():
    p = P({0: 1, 1: 0, 2: 3})
    assert len(p) == 2
    q = p + P({2: -3})
    assert len(q) == 1 and q.coefficient(2).is_zero()


def test_support_bounds_add_under_product():
    a, b = P({-2: 1, 1: 4}), P({-1: 2, 3: 1})
    lo_a, hi_a = a.support()
    lo_b, hi_b = b.support()
    lo, hi = (a * b).support()
    assert (lo, hi) == (lo_a + lo_b, hi_a + hi_b)


def test_conj_reflect_real_coefficients():
    p = P({2: 1, 1: -1, 0: 1})
    assert p.conj_reflect() == P({-2: 1, -1: -1, 0: 1})


def test_conj_reflect_imaginary_coefficient():
    p = P({1: I})
    assert p.conj_reflect() == P({-1: GaussianRational(0, -1)})


def test_conj_reflect_is_an_involution():
    polys = [
        P({0: GaussianRational(1, 2), 3: GaussianRational("-1/2", "1/3"), -2: I}),
        P({5: 1}),
        LaurentPoly.zero(),
    ]
    for p in polys:
        assert p.conj_reflect().conj_reflect() == p


def test_constant_term_examples():
    p = P({0: 5, 1: 2, -1: 2})
    assert p.constant_term(0) == GaussianRational(5)
    assert p.constant_term(1) == GaussianRational(2)
    assert p.constant_term(7).is_zero()
    assert p.constant_term(-7).is_zero()


def test_norm_power_of_sign_polynomial():
    p = P({2: 1, 1: -1, 0: 1})
    assert norm_power(p, 1) == GaussianRational(3)
    # autocorrelation coefficients of p are (1, -2, 3, -2, 1)
    prod = p * p.conj_reflect()
    assert [str(prod.coefficient(k)) for k in range(-2, 3)] == ["1", "-2", "3", "-2", "1"]
    assert norm_power(p, 2) == GaussianRational(19)


def test_norm_power_of_constants():
    c = GaussianRational("1/2", "1/3")
    p = P({0: c})
    mag = c * c.conjugate()
    for alpha in (1, 2, 3):
        assert norm_power(p, alpha) == mag ** alpha


def test_norm_power_rejects_alpha_zero():
    with pytest.raises(ValueError):
        norm_power(P({0: 1}), 0)


def test_parseval_identity():
    p = P({-3: GaussianRational(1, 1), 0: GaussianRational("1/2"), 4: I})
    total = GaussianRational(0)
    for _, c in p.terms():
        total = total + c * c.conjugate()
    assert norm_power(p, 1) == total


def test_norm_power_shift_and_unit_invariance():
    p = P({0: 1, 1: 2, 2: GaussianRational(0, 1)})
    for alpha in (1, 2, 3):
        base = norm_power(p, alpha)
        for r in (-2, 1, 5):
            assert norm_power(p.shift(r), alpha) == base
        for unit in (GaussianRational(-1), I, GaussianRational(0, -1)):
            assert norm_power(p.scale(unit), alpha) == base


def test_autocorrelation_hermitian_symmetry():
    p = P({0: GaussianRational(1, 1), 1: GaussianRational(2, -1), 3: I})
    prod = p * p.conj_reflect()
    for m in range(-4, 5):
        assert prod.constant_term(m) == prod.constant_term(-m).conjugate()


def test_power_by_repeated_squaring():
    p = P({0: 1, 1: 1})
    assert p ** 0 == LaurentPoly.one()
    expected = LaurentPoly.one()
    for _ in range(5):
        expected = expected * p
    assert p ** 5 == expected
    assert [int(c.re) for _, c in (p ** 5).terms()] == [1, 5, 10, 10, 5, 1]


def test_debug_rendering_increasing_exponents():
    p = P({1: 2, -1: 2, 0: 5})
    assert str(p) == "(2)*z^-1 + (5)*z^0 + (2)*z^1"


def test_scale_by_rational():
    p = P({0: 1, 2: 3})
    assert p.scale(mpq(1, 3)) == P({0: mpq(1, 3), 2: 1})
