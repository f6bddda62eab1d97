"""Exhaustive maximum sum-free subset oracle."""

import random

import pytest

from sumfree.dilation import extract_certified
from sumfree.oracle import OracleResourceError, compare, max_sumfree_exact
from sumfree.sets import IntegerSet, is_kl_sumfree


def test_oracle_small():
    r = max_sumfree_exact(IntegerSet.of([1, 2, 3]), 2, 1)
    assert r.best_size == 2
    assert r.witness.elements == (2, 3)


def test_oracle_interval():
    r = max_sumfree_exact(IntegerSet.of(range(1, 6)), 2, 1)
    assert r.best_size == 3
    assert r.witness.elements == (3, 4, 5)


def test_oracle_rejects_equal_kl():
    with pytest.raises(ValueError):
        max_sumfree_exact(IntegerSet.of([1, 2]), 2, 2)


def test_oracle_cap():
    with pytest.raises(OracleResourceError):
        max_sumfree_exact(IntegerSet.of(range(1, 30)), 2, 1, cap=22)


def test_witness_verifies():
    rng = random.Random(31)
    for _ in range(20):
        A = IntegerSet.of(sorted(rng.sample(range(1, 80), rng.randint(3, 12))))
        r = max_sumfree_exact(A, 2, 1)
        assert is_kl_sumfree(r.witness, 2, 1)
        assert r.witness.N == r.best_size


def test_extractor_never_beats_oracle():
    rng = random.Random(37)
    for _ in range(20):
        A = IntegerSet.of(sorted(rng.sample(range(1, 100), rng.randint(3, 12))))
        report = compare(A, 2, 1)
        assert report["gap"] >= 0
        assert report["extractor"]["count"] <= report["oracle"]["best_size"]


def test_extractor_never_beats_oracle_24():
    rng = random.Random(41)
    for _ in range(10):
        A = IntegerSet.of(sorted(rng.sample(range(1, 100), rng.randint(4, 12))))
        oracle = max_sumfree_exact(A, 2, 4)
        cert = extract_certified(A, 2, 4)
        assert cert.count <= oracle.best_size
