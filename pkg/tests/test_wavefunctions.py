from __future__ import annotations

from dataclasses import replace
from fractions import Fraction as F

import numpy as np
import pytest

from hydrokinetic.errors import ConsistencyError, DomainError
from hydrokinetic.verification import iter_states
from hydrokinetic.wavefunctions import (
    build_polar,
    build_radial,
    build_state,
    expectation_r_power,
    laguerre_coeffs,
    legendre_coeffs,
    verify_eigenvalue,
)


def test_radial_examples():
    r10 = build_radial(1, 0)
    assert r10.poly == (1,) and r10.beta == 1 and r10.c2 == 4
    r21 = build_radial(2, 1)
    assert r21.poly == (0, 1) and r21.beta == F(1, 2) and r21.c2 == F(1, 24)
    assert build_radial(3, 2).c2 == F(8, 5 * 3**9)
    assert build_radial(3, 1).c2 == F(32, 3**7)
    assert build_radial(2, 0).poly == (1, F(-1, 2))


def test_n7_l3_laguerre_pattern():
    # L_3^(7)(rho) proportional to -rho^3 + 30 rho^2 - 270 rho + 720
    lag = laguerre_coeffs(3, 7)
    ratio = lag[0] / 720
    assert [c / ratio for c in lag] == [720, -270, 30, -1]
    r73 = build_radial(7, 3)
    rho = F(2, 7)
    assert list(r73.poly[3:]) == [1, F(-270, 720) * rho, F(30, 720) * rho**2, F(-1, 720) * rho**3]
    assert r73.beta == F(1, 7)


def test_polar_examples():
    p00 = build_polar(0, 0)
    assert p00.cos_poly == (1,) and p00.n2 == F(1, 2)
    p10 = build_polar(1, 0)
    assert p10.cos_poly == (0, 1) and p10.n2 == F(3, 2)
    p33 = build_polar(3, 3)
    assert p33.m_abs == 3 and p33.cos_poly == (1,) and p33.n2 == F(70, 64)
    p20 = build_polar(2, 0)
    assert p20.cos_poly == (-1, 0, 3) and p20.n2 == F(5, 8)


def test_legendre_low_orders():
    assert legendre_coeffs(2) == (F(-1, 2), 0, F(3, 2))
    assert legendre_coeffs(3) == (0, F(-3, 2), 0, F(5, 2))


@pytest.mark.parametrize("args", [(2, 2, 0), (0, 0, 0), (3, 1, 2), (2, -1, 0)])
def test_invalid_quantum_numbers(args):
    with pytest.raises(DomainError) as exc:
        build_state(*args)
    assert "must" in str(exc.value)


def test_invalid_polar():
    with pytest.raises(DomainError):
        build_polar(1, 2)


@pytest.mark.parametrize("nlm,energy", [((1, 0, 0), F(-1)), ((3, 2, 2), F(-1, 9)), ((7, 3, 0), F(-1, 49))])
def test_eigenvalue_examples(nlm, energy):
    assert verify_eigenvalue(build_state(*nlm)) == energy


def test_normalization_and_eigenvalue_n_le_12():
    count = 0
    for st in iter_states(12):
        assert st.norm_integral() == 1
        assert (st.polar.trigpoly() * st.polar.trigpoly()).integrate(with_sin_measure=True) == 1 / st.polar.n2
        assert verify_eigenvalue(st) == F(-1, st.n**2)
        count += 1
    assert count == 650


def test_wrong_exponent_is_rejected():
    # e^{-2r/7} instead of e^{-r/7} for (7,3)
    st = build_state(7, 3, 3)
    bad = replace(st, radial=replace(st.radial, beta=F(2, 7)))
    with pytest.raises(ConsistencyError):
        verify_eigenvalue(bad)


def _sign_changes(values) -> int:
    s = np.sign(values[values != 0])
    return int(np.count_nonzero(s[1:] != s[:-1]))


@pytest.mark.parametrize("n", range(1, 13))
def test_radial_node_count(n):
    for l in range(n):
        rad = build_radial(n, l)
        # sign changes of the Laguerre factor only (r^l and the exponential are positive)
        core = rad.poly[l:]
        # Sturm-free check: exact evaluation on a fine grid spanning all roots
        r = np.linspace(1e-3, 4.0 * n * n, 20000)
        vals = np.polyval([float(c) for c in reversed(core)], r)
        assert _sign_changes(vals) == n - l - 1, (n, l)


def test_expectation_examples():
    assert expectation_r_power(build_state(2, 1, 0), 3) == 210
    assert expectation_r_power(build_state(1, 0, 0), 1) == F(3, 2)
    for nlm in [(1, 0, 0), (3, 2, 1), (7, 3, 3)]:
        assert expectation_r_power(build_state(*nlm), 0) == 1
    # <1/r> = 1/n^2 (virial in a = 1 units)
    assert expectation_r_power(build_state(5, 2, 1), -1) == F(1, 25)
    with pytest.raises(DomainError):
        expectation_r_power(build_state(1, 0, 0), -3)


def test_serialization_shape():
    d = build_state(3, 2, -2).to_dict()
    assert set(d) == {"n", "l", "m", "c2", "poly", "beta", "polar"}
    assert d["c2"] == "8/98415" and d["beta"] == "1/3"
    assert all("/" in c for c in d["poly"])
