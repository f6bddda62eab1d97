"""Exact Fourier coefficients, truncated series, and the grid norm engine."""

import math
from fractions import Fraction

import numpy as np
import pytest

from sumfree.exactnum import ExactScalar, PF_ONE, PF_PI_INV
from sumfree.fourier import (
    EndpointError,
    ResolutionError,
    TrigPoly,
    eval_exact,
    fhat,
    fhat_t,
    grid_norms,
    sample_grid,
    series_truncated,
)


def test_fhat_values():
    assert fhat(0).is_zero()
    assert fhat(3).is_zero()
    # fhat(1) = -sqrt3/2 in 1/pi units, i.e. -sqrt3/(2 pi)
    assert fhat(1).to_complex() == pytest.approx(-math.sqrt(3) / 2)
    assert fhat(-1).to_complex() == pytest.approx(-math.sqrt(3) / 2)


def test_fhat_conjugate_symmetry():
    for n in range(1, 50):
        assert fhat(-n).to_complex() == pytest.approx(
            fhat(n).to_complex().conjugate()
        )
        assert fhat_t(-n, 1).to_complex() == pytest.approx(
            fhat_t(n, 1).to_complex().conjugate()
        )


def test_fhat_t_values():
    # e(-(2t-1) n/4) sin(n pi/6)/n in 1/pi units
    assert fhat_t(1, 1).to_complex() == pytest.approx(-0.5j)
    assert fhat_t(6, 2).is_zero()
    assert fhat_t(2, 2).to_complex() == pytest.approx(-math.sqrt(3) / 4)


def test_fhat_matches_quadrature():
    # independent numeric oracle: integrate f(x) e(-nx) over [0,1)
    M = 1 << 14
    xs = (np.arange(M) + 0.5) / M
    f = ((xs > 1 / 3) & (xs < 2 / 3)).astype(float) - 1 / 3
    for n in (1, 2, 4, 5, 7):
        num = np.mean(f * np.exp(-2j * np.pi * n * xs))
        assert abs(num - fhat(n).to_complex() / math.pi) < 1e-3


def test_fhat_t_matches_quadrature():
    M = 1 << 14
    xs = (np.arange(M) + 0.5) / M
    f1 = ((xs > 1 / 6) & (xs < 1 / 3)).astype(float) - 1 / 6
    f2 = ((xs > 2 / 3) & (xs < 5 / 6)).astype(float) - 1 / 6
    for n in (1, 2, 3, 5):
        for t, f in ((1, f1), (2, f2)):
            num = np.mean(f * np.exp(-2j * np.pi * n * xs))
            assert abs(num - fhat_t(n, t).to_complex() / math.pi) < 1e-3


def test_series_coefficients():
    f = series_truncated("f", 10)
    assert f.coeff(3).is_zero()
    assert f.coeff(1).to_complex() == pytest.approx(-math.sqrt(3) / 2)
    gamma = series_truncated("Gamma", 10)
    # Gamma(x) = f(2x): frequency 2n carries fhat(n)
    assert gamma.coeff(2).to_complex() == pytest.approx(fhat(1).to_complex())
    assert gamma.coeff(1).is_zero()


def test_gamma_is_f_of_2x():
    f = series_truncated("f", 50)
    gamma = series_truncated("Gamma", 100)
    dilated = TrigPoly.of({2 * n: c for n, c in f.coeffs.items()}, f.prefactor)
    assert gamma.equals(dilated)


def test_gamma_lambda_from_f1_f2():
    X = 60
    f1 = series_truncated("f1", X)
    f2 = series_truncated("f2", X)
    assert (f1 + f2).equals(series_truncated("Gamma", X))
    assert (f1 - f2).equals(series_truncated("Lambda", X))


def test_lambda_sin_coefficient():
    lam = series_truncated("Lambda", 1)
    c1 = lam.coeff(1).to_complex() * lam.prefactor.to_float()
    cm1 = lam.coeff(-1).to_complex() * lam.prefactor.to_float()
    # sin(2 pi x) coefficient = i(c_1 - c_{-1}); quadrature oracle gives 2/pi
    M = 1 << 14
    xs = (np.arange(M) + 0.5) / M
    f1 = ((xs > 1 / 6) & (xs < 1 / 3)).astype(float) - 1 / 6
    f2 = ((xs > 2 / 3) & (xs < 5 / 6)).astype(float) - 1 / 6
    target = 2 * np.mean((f1 - f2) * np.sin(2 * np.pi * xs))
    value = 1j * (c1 - cm1)
    assert value.imag == pytest.approx(0.0, abs=1e-12)
    assert value.real == pytest.approx(target, abs=1e-3)
    assert value.real == pytest.approx(2 / math.pi)


def test_eval_exact():
    assert eval_exact("f", Fraction(1, 2)) == Fraction(2, 3)
    assert eval_exact("f", Fraction(1, 10)) == Fraction(-1, 3)
    # 1/4 lies inside Omega_1 = (1/6, 1/3)
    assert eval_exact("Gamma", Fraction(1, 4)) == Fraction(2, 3)
    assert eval_exact("Lambda", Fraction(1, 4)) == Fraction(1)
    assert eval_exact("Lambda", Fraction(1, 2)) == Fraction(0)
    with pytest.raises(EndpointError):
        eval_exact("f", Fraction(1, 3))


def test_series_converges_to_eval():
    # partial sums approach the exact step values away from the jumps
    p = series_truncated("f", 3000)
    for x in (Fraction(1, 2), Fraction(1, 10), Fraction(3, 7)):
        assert abs(p.eval_float(float(x)) - eval_exact("f", x)) < 0.02


def test_grid_norm_constant():
    one = TrigPoly.of({0: ExactScalar.of(1)}, PF_ONE)
    value, bar = grid_norms(one, "L1")
    assert value == pytest.approx(1.0)
    assert bar == pytest.approx(0.0, abs=1e-12)


def test_grid_norm_cosine():
    cos2 = TrigPoly.of({1: ExactScalar.of(1), -1: ExactScalar.of(1)}, PF_ONE)
    value, bar = grid_norms(cos2, "L1")
    assert abs(value - 4 / math.pi) <= bar + 1e-9
    l2, zero = grid_norms(cos2, "L2")
    assert l2 == pytest.approx(math.sqrt(2))
    assert zero == 0.0


def test_linf_bound_is_upper():
    p = series_truncated("f", 40)
    value, bar = grid_norms(p, "Linf")
    xs = np.linspace(0, 1, 100001)
    brute = max(abs(p.eval_float(x)) for x in xs[::100])
    assert value + bar >= brute - 1e-9


def test_resolution_error():
    p = series_truncated("f", 100)
    with pytest.raises(ResolutionError):
        grid_norms(p, "Linf", M=64)


def test_grid_round_trip():
    p = series_truncated("Lambda", 30)
    g = sample_grid(p, 512)
    back = g.coefficients()  # indexed by n mod M
    want = p.to_complex_coeffs()
    for n, c in want.items():
        assert abs(back[n % 512] - c) < 1e-10
