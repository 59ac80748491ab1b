from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hydrokinetic.errors import DivergentIntegralError, UnsupportedIntegrandError
from hydrokinetic.exact import (
    ExpPoly,
    TrigPoly,
    differentiate_polar,
    differentiate_radial,
    integrate_polar,
    integrate_radial,
    to_rational,
)
from hydrokinetic.quadrature import quad_polar, quad_radial

SIN = TrigPoly([(1, 1, 0)])
COS = TrigPoly([(1, 0, 1)])


# -- radial ------------------------------------------------------------------


def test_radial_examples():
    assert integrate_radial(ExpPoly({4: 1}, F(2, 3))) == F(729, 4)
    assert integrate_radial(ExpPoly({0: 1}, 1)) == 1
    # (8/(5 3^9)) r^5 e^{-2r/3}, times -e^2 = -2 -> -2/9
    assert -2 * integrate_radial(ExpPoly({5: F(8, 5 * 3**9)}, F(2, 3))) == F(-2, 9)


def test_radial_divergent():
    with pytest.raises(DivergentIntegralError):
        ExpPoly({1: 1}, 0).integrate()
    with pytest.raises(DivergentIntegralError):
        ExpPoly({0: 1}, -1).integrate()
    assert ExpPoly({}, 0).integrate() == 0


def test_radial_derivative_examples():
    assert differentiate_radial(ExpPoly({0: 1}, 1)) == ExpPoly({0: -1}, 1)
    assert differentiate_radial(ExpPoly({1: 1}, F(1, 2))) == ExpPoly({0: 1, 1: F(-1, 2)}, F(1, 2))


def test_radial_derivative_finite_difference():
    f = ExpPoly({0: 2, 1: -1}, F(1, 2))
    df = f.derivative()
    h = 1e-5
    for r in (0.5, 1.0, 2.0):
        fd = (f(r + h) - f(r - h)) / (2 * h)
        assert abs(df(r) - fd) < 1e-8


def test_canonical_form_and_algebra():
    a = ExpPoly([(1, 2), (F(1, 2), 2), (0, 5)], 1)
    assert a.terms == ((F(3, 2), 2),)
    assert (a - a).is_zero()
    b = ExpPoly({0: 1, 1: 1}, F(1, 3))
    assert (b * b).beta == F(2, 3)
    assert (b * b).as_dict() == {0: 1, 1: 2, 2: 1}
    assert (3 * b).coeff(1) == 3
    assert b.shift(2).lowest_power == 2
    with pytest.raises(ValueError):
        b.shift(-1)
    with pytest.raises(ValueError):
        ExpPoly({0: 1}, 1) + ExpPoly({0: 1}, 2)


def test_floats_refused():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        ExpPoly({0: 0.5})
    assert to_rational("3/4") == F(3, 4)


def test_radial_linearity():
    f = ExpPoly({0: 1, 3: F(-2, 7)}, F(2, 5))
    g = ExpPoly({1: 5, 2: F(1, 3)}, F(2, 5))
    assert (f + 3 * g).integrate() == f.integrate() + 3 * g.integrate()


_betas = st.integers(1, 14).map(lambda k: F(k, 7))
_coeffs = st.lists(st.fractions(min_value=F(1, 100), max_value=10, max_denominator=100), min_size=1, max_size=15)


@settings(max_examples=200, deadline=None)
@given(coeffs=_coeffs, beta=_betas)
def test_radial_matches_gauss_laguerre(coeffs, beta):
    f = ExpPoly.from_coeffs(coeffs, beta)
    exact = float(f.integrate())
    assert abs(quad_radial(f) - exact) <= 1e-10 * abs(exact)


# -- polar -------------------------------------------------------------------


def test_polar_examples():
    assert integrate_polar(TrigPoly([(1, 3, 0)])) == F(4, 3)
    assert integrate_polar(TrigPoly([(1, 3, 2)])) == F(4, 15)
    assert integrate_polar(SIN) == 2
    assert integrate_polar(COS, with_sin_measure=True) == 0
    # azimuthal term of (3,2,2): n2 (4/3) (-m^2) with n2 = 15/16
    assert F(15, 16) * integrate_polar(TrigPoly([(1, 3, 0)])) * -4 == -5


def test_polar_even_sin_refused():
    with pytest.raises(UnsupportedIntegrandError):
        integrate_polar(TrigPoly([(1, 0, 2)]))
    with pytest.raises(UnsupportedIntegrandError):
        integrate_polar(TrigPoly([(1, 2, 0)]))


def test_polar_derivative_examples():
    assert differentiate_polar(COS) == -SIN
    assert differentiate_polar(TrigPoly([(1, 2, 0)])) == TrigPoly([(2, 1, 1)])


def test_polar_term_for_sin_squared():
    # Theta = sin^2, n2 = 15/16: n2 int Theta (sin Theta')' d theta = -1
    theta = TrigPoly([(1, 2, 0)])
    inner = (SIN * theta.derivative()).derivative()
    assert F(15, 16) * (theta * inner).integrate() == -1


def test_canonical_sin_squared():
    assert TrigPoly([(1, 2, 0)]) == TrigPoly([(1, 0, 0), (-1, 0, 2)])
    assert (SIN * SIN + COS * COS) == TrigPoly([(1, 0, 0)])


def test_polar_derivative_finite_difference():
    f = TrigPoly([(3, 1, 2), (-1, 0, 3), (F(1, 2), 1, 0)])
    df = f.derivative()
    h = 1e-6
    for th in np.linspace(0.1, 3.0, 7):
        assert abs(df(th) - (f(th + h) - f(th - h)) / (2 * h)) < 1e-8


@settings(max_examples=200, deadline=None)
@given(coeffs=st.lists(st.fractions(min_value=F(1, 100), max_value=10, max_denominator=100), min_size=1, max_size=15))
def test_polar_matches_gauss_legendre(coeffs):
    # positive coefficients on sin * cos^(2k) keep the integral away from zero
    f = TrigPoly([(c, 1, 2 * k) for k, c in enumerate(coeffs)])
    exact = float(f.integrate())
    assert abs(quad_polar(f) - exact) <= 1e-10 * abs(exact)


def test_polar_with_odd_cos_terms_matches_quadrature():
    f = TrigPoly([(F(3, 2), 1, 1), (2, 1, 4), (F(-1, 3), 1, 7)])
    assert math.isclose(quad_polar(f), float(f.integrate()), rel_tol=1e-12)
