import math

import pytest

import sixmoment as sm


def test_factorize_roundtrip():
    assert sm.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert sm.tau_k(12, 3) == 18


def test_zeta_and_stieltjes():
    assert abs(sm.riemann_zeta(2) - math.pi**2 / 6) < 1e-12
    assert abs(sm.stieltjes_gamma(0, 1.0) - 0.5772156649015329) < 1e-12


def test_kloosterman_weil():
    s = sm.kloosterman(1, 1, 7)
    assert abs(s.imag) < 1e-12
    assert abs(s) <= 2 * math.sqrt(7) + 1e-12


def test_d_coeffs_spot():
    d3, d2, d1 = sm.d_coeffs(4)
    assert abs(d3 - 0.5) < 1e-12
    c3, c2, c1 = sm.d_coeffs_cauchy(1, 4)
    assert max(abs(d3 - c3), abs(d2 - c2), abs(d1 - c1)) < 1e-6


def test_u_weight_limit():
    assert abs(sm.u_weight(1e-8, 3) - 1.0) < 1e-3


def test_y_exponent():
    assert sm.y_exponent(0, 0, 0, 1) == pytest.approx(-1.75)


def test_h_factor_linear_coefficient():
    assert sm.h_factor_check(3, 6)[1] == 0


def test_suite_pass():
    (rep,) = sm.run_suite("y-exponent")
    assert rep["status"] == "PASS"


def test_errors_translate():
    with pytest.raises(sm.Error) as info:
        sm.mod_inverse(2, 4)
    assert info.value.kind == "NotInvertible"
    with pytest.raises(sm.Error):
        sm.run_suite("nosuch")
