"""Fejer kernels, Hilbert transform, and the Phi test-function build."""

import math

import numpy as np
import pytest

from sumfree.exactnum import ExactScalar, PF_ONE
from sumfree.fourier import TrigPoly, sample_grid
from sumfree.mps import (
    build_phi,
    build_pk,
    build_qk,
    epsilon_of_base,
    fejer,
    hilbert,
    pairing,
    pairing_constant,
    partition_blocks,
)
from sumfree.sets import IntegerSet


def test_fejer_coefficients():
    p = fejer(4)
    for m in range(-3, 4):
        c = p.coeff(m).to_complex()
        assert c == pytest.approx((4 - abs(m)) / 4)
    assert p.coeff(4).is_zero()


def test_fejer_nonnegative_unit_mean():
    p = fejer(6)
    assert p.coeff(0).to_complex() == pytest.approx(1.0)  # unit mean
    g = sample_grid(p, 256)
    assert min(s.real for s in g.samples) > -1e-12


def test_hilbert_multiplier():
    cos2 = TrigPoly.of({1: ExactScalar.of(1), -1: ExactScalar.of(1)}, PF_ONE)
    h = hilbert(cos2)
    # H(2cos) = 2sin: coefficients -i at n=1, +i at n=-1
    assert h.coeff(1).to_complex() == pytest.approx(-1j)
    assert h.coeff(-1).to_complex() == pytest.approx(1j)
    assert hilbert(TrigPoly.of({0: ExactScalar.of(5)}, PF_ONE)).coeff(0).is_zero()


def test_hilbert_grid_matches_poly():
    p = TrigPoly.of(
        {n: ExactScalar.of(1) for n in (-3, -1, 2, 5)}, PF_ONE
    )
    M = 128
    grid_h = hilbert(sample_grid(p, M))
    poly_h = sample_grid(hilbert(p), M)
    assert np.allclose(grid_h.samples, poly_h.samples, atol=1e-10)


def test_constants():
    eps = epsilon_of_base(100)
    assert eps == pytest.approx(0.4489, abs=5e-4)
    assert pairing_constant(100) == pytest.approx((1 - eps) / 200)


def test_partition_blocks():
    B = IntegerSet.of(range(1, 51))
    part = partition_blocks(B, 4)
    sizes = [len(blk) for blk in part.blocks]
    # |B_0| = 1, |B_1| = 4, remainder goes to the last block
    assert sizes == [1, 4, 45]
    assert part.k0 == 2


def test_pk_support_and_mass():
    B = IntegerSet.of(range(1, 51))
    part = partition_blocks(B, 4)
    pk = build_pk(part, 2, lambda m: 1.0)
    lo, hi = part.interval(2)
    assert all(lo <= m <= hi for m in pk)
    # center weight is 1/|B_k| by construction
    assert abs(pk[part.center(2)]) == pytest.approx(1 / len(part.blocks[2]))


def test_qk_support():
    B = IntegerSet.of(range(1, 51))
    part = partition_blocks(B, 4)
    qk = build_qk(part, 1, lambda m: 1.0, M=2048)
    width = part.width(1)
    assert all(-width <= n <= 0 for n in qk)


def test_build_phi_small():
    B = IntegerSet.of(range(1, 51))
    w = {m: 1.0 for m in B.elements}
    coeffs, cert = build_phi(B, w, b=4, M=4096)
    assert cert.sup_bound < 10
    assert cert.explicit_agreement < 1e-8
    # at base 4 the pairing constant is negative, so the bound is weak but
    # must still hold with the recorded constant
    assert cert.pairing_value.real >= cert.pairing_constant * cert.pairing_target
    for row in cert.per_block:
        assert row["support_ok"]
        assert row["l2_one_minus_q"] <= row["l2_bound"] + 1e-6
    # pairing against the weighted exponential sum reproduces the recorded value
    f = {m: w[m] for m in B.elements}
    assert pairing(f, coeffs) == pytest.approx(cert.pairing_value, rel=1e-9)


def test_build_phi_random_weights():
    B = IntegerSet.of(range(1, 51))
    rng = np.random.default_rng(9)
    w = {m: complex(np.exp(2j * math.pi * rng.random())) for m in B.elements}
    _, cert = build_phi(B, w, b=4, M=4096)
    assert cert.sup_bound < 10
    assert cert.pairing_value.real >= cert.pairing_constant * cert.pairing_target
