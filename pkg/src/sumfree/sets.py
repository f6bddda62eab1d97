"""Integer-set ingestion, structure analysis, and test-family generation."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

SUM_MAGNITUDE_CAP = 2**63 - 1


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerSet:
    """Sorted distinct positive integers."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elems = self.elements
        if any(not isinstance(e, int) or e < 1 for e in elems):
            raise ValueError("elements must be positive integers")
        if any(elems[i] >= elems[i + 1] for i in range(len(elems) - 1)):
            raise ValueError("elements must be strictly increasing")

    @staticmethod
    def of(values) -> "IntegerSet":
        return IntegerSet(tuple(sorted(set(values))))

    @property
    def N(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)


@dataclass(frozen=True)
class StructureReport:
    symdiff: tuple[int, ...]
    epsilon: dict[int, int] = field(hash=False)
    cover_indices: tuple[int, ...]
    lacunary_exponent: float
    geometric: bool
    threshold_exponent: Fraction


def load_set(raw: bytes | str, format: str = "lines") -> IntegerSet:
    """Parse a set from newline-separated decimals or a JSON array."""
    text = raw.decode() if isinstance(raw, bytes) else raw
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON input: {exc}") from exc
        if not isinstance(data, list):
            raise ParseError("JSON input must be an array of integers")
        values = []
        for item in data:
            if isinstance(item, bool) or not isinstance(item, int) or item < 1:
                raise ParseError(f"non-positive or non-integer entry: {item!r}")
            values.append(item)
        if not values:
            raise ParseError("empty input set")
        return IntegerSet.of(values)
    if format == "lines":
        values = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            tok = line.strip()
            if not tok:
                continue
            try:
                v = int(tok)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: not an integer: {tok!r}") from exc
            if v < 1:
                raise ParseError(f"line {lineno}: not a positive integer: {v}")
            values.append(v)
        if not values:
            raise ParseError("empty input set")
        return IntegerSet.of(values)
    raise ParseError(f"unknown format {format!r}")


def triadic_index(a: int) -> int:
    """The unique k with 3**k <= a < 3**(k+1)."""
    k = 0
    t = 3
    while t <= a:
        t *= 3
        k += 1
    return k


def structure(A: IntegerSet, threshold_exponent: Fraction = Fraction(1, 2)) -> StructureReport:
    """Symmetric difference with 3*A, epsilon labels, triadic cover, and the
    geometric classification |A sym 3*A| <= ceil(N**threshold_exponent)."""
    aset = set(A.elements)
    tripled = {3 * a for a in A.elements}
    sym = sorted(aset.symmetric_difference(tripled))
    epsilon = {m: (1 if m in aset else -1) for m in sym}
    cover = tuple(sorted({triadic_index(a) for a in A.elements}))
    n = A.N
    exponent = math.log(len(cover)) / math.log(n) if n >= 2 else 0.0
    bound = math.ceil(n ** float(threshold_exponent))
    return StructureReport(
        symdiff=tuple(sym),
        epsilon=epsilon,
        cover_indices=cover,
        lacunary_exponent=exponent,
        geometric=len(sym) <= bound,
        threshold_exponent=Fraction(threshold_exponent),
    )


def fold_sums(values, fold: int) -> int:
    """Bitset (as int) of all sums of exactly `fold` elements, repetition allowed."""
    reach = 0
    for v in values:
        reach |= 1 << v
    cur = reach
    for _ in range(fold - 1):
        nxt = 0
        for v in values:
            nxt |= cur << v
        cur = nxt
    return cur


def is_kl_sumfree(X: IntegerSet, k: int, l: int) -> bool:
    """No k-fold sum of X (repetition allowed) equals an l-fold sum."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    if k == l:
        raise ValueError("k = l is never sum-free for nonempty X")
    if len(X) == 0:
        return True
    if max(k, l) * max(X.elements) > SUM_MAGNITUDE_CAP:
        raise OverflowError(
            f"sum magnitude {max(k, l) * max(X.elements)} exceeds cap {SUM_MAGNITUDE_CAP}"
        )
    return fold_sums(X.elements, k) & fold_sums(X.elements, l) == 0


def generate(kind: str, **params) -> IntegerSet:
    """Deterministic test families: interval, random, triadic_chains, folner_like."""
    if kind == "interval":
        n = params["n"]
        if n < 1:
            raise ValueError("interval size must be >= 1")
        return IntegerSet.of(range(1, n + 1))
    if kind == "random":
        n = params["n"]
        max_value = params.get("max_value", 10**4)
        if n < 1 or max_value < n:
            raise ValueError(f"cannot draw {n} distinct values from [1, {max_value}]")
        rng = random.Random(params.get("seed", 0))
        return IntegerSet.of(rng.sample(range(1, max_value + 1), n))
    if kind == "triadic_chains":
        starts = params["starts"]
        length = params["length"]
        if not starts or length < 1:
            raise ValueError("need nonempty starts and length >= 1")
        return IntegerSet.of(s * 3**j for s in starts for j in range(length))
    if kind == "folner_like":
        primes = sorted(params["primes"])
        box = params["exponent_box"]
        if not primes or box < 0:
            raise ValueError("need nonempty primes and exponent_box >= 0")
        values = [1]
        for p in primes:
            values = [v * p**e for v in values for e in range(box + 1)]
        return IntegerSet.of(values)
    raise ValueError(f"unknown generator kind {kind!r}")
