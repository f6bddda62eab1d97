"""Set ingestion, structure reports, and sum-freeness checks."""

import itertools
import random

import pytest

from sumfree.sets import (
    IntegerSet,
    ParseError,
    generate,
    is_kl_sumfree,
    load_set,
    structure,
    triadic_index,
)


def test_load_lines():
    assert load_set("3\n1\n3\n").elements == (1, 3)


def test_load_json():
    assert load_set("[9,1,3]", format="json").elements == (1, 3, 9)


def test_load_rejects_nonpositive():
    with pytest.raises(ParseError):
        load_set("0\n")
    with pytest.raises(ParseError):
        load_set("2\nx\n")


def test_structure_geometric():
    r = structure(IntegerSet.of([1, 3, 9]))
    assert r.symdiff == (1, 27)
    assert r.epsilon == {1: 1, 27: -1}
    assert r.cover_indices == (0, 1, 2)
    assert r.geometric


def test_structure_not_geometric():
    r = structure(IntegerSet.of([1, 2]))
    assert r.symdiff == (1, 2, 3, 6)
    assert not r.geometric


def test_structure_singleton():
    r = structure(IntegerSet.of([5]))
    assert r.symdiff == (5, 15)
    assert r.cover_indices == (1,)
    assert r.lacunary_exponent == 0


def test_symdiff_cardinality():
    rng = random.Random(7)
    for _ in range(100):
        A = sorted(rng.sample(range(1, 400), rng.randint(1, 25)))
        r = structure(IntegerSet.of(A))
        inter = len(set(A) & {3 * a for a in A})
        assert len(r.symdiff) == 2 * len(A) - 2 * inter


def test_triadic_cover_partition():
    rng = random.Random(3)
    for _ in range(50):
        A = sorted(rng.sample(range(1, 10**4), 20))
        r = structure(IntegerSet.of(A))
        ks = set(r.cover_indices)
        for a in A:
            assert triadic_index(a) in ks
        for k in ks:
            assert any(3**k <= a < 3 ** (k + 1) for a in A)


def test_is_kl_sumfree_examples():
    assert not is_kl_sumfree(IntegerSet.of([1, 2, 3]), 2, 1)
    assert is_kl_sumfree(IntegerSet.of([2, 3]), 2, 1)
    assert not is_kl_sumfree(IntegerSet.of([1, 2]), 2, 4)


def _naive_sumfree(X, k, l):
    ks = {sum(t) for t in itertools.product(X, repeat=k)}
    ls = {sum(t) for t in itertools.product(X, repeat=l)}
    return not (ks & ls)


def test_is_kl_sumfree_matches_naive():
    rng = random.Random(11)
    for _ in range(40):
        X = sorted(rng.sample(range(1, 50), rng.randint(1, 6)))
        for k, l in ((2, 1), (2, 4), (3, 1)):
            assert is_kl_sumfree(IntegerSet.of(X), k, l) == _naive_sumfree(X, k, l)


def test_sumfree_hereditary():
    X = [5, 6, 7, 8, 9]
    assert is_kl_sumfree(IntegerSet.of(X), 2, 1)
    for r in range(1, len(X)):
        for sub in itertools.combinations(X, r):
            assert is_kl_sumfree(IntegerSet.of(sub), 2, 1)


def test_generate_kinds():
    assert generate("interval", n=4).elements == (1, 2, 3, 4)
    assert generate("triadic_chains", starts=[1], length=3).elements == (1, 3, 9)
    assert generate("folner_like", primes=[2, 3], exponent_box=2).elements == (
        1, 2, 3, 4, 6, 9, 12, 18, 36,
    )


def test_generate_random_deterministic():
    a = generate("random", n=12, limit=500, seed=42)
    b = generate("random", n=12, limit=500, seed=42)
    assert a.elements == b.elements
    assert len(a.elements) == 12
