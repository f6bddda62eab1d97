"""Multiplicative characters, the Mobius function, and smooth/rough classes.

The sieving machinery works with two complementary families parametrised by a
prime threshold Q:

* the smooth side N2 = squarefree integers all of whose prime factors are
  <= Q (this includes Q itself), and
* the rough side N1 = integers all of whose prime factors are > Q.

With Q prime these intersect exactly in {1}, and the Mobius sum
sum_{t in N2, t | n} mu(t) is the indicator of n in N1, which is what makes
the coefficientwise sieve identities exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class SieveContext:
    """Thresholds for the sieving pipeline.

    Q is the smooth/rough cut; P is the (independent) threshold used by the
    balanced-function sieve with index set of squarefree integers generated
    by primes strictly below P.  The two are deliberately not reconciled.
    """

    Q: int = 5
    P: int = 101
    N1_limit: int = 10**6
    N2_limit: int = 10**6

    def __post_init__(self):
        if self.Q < 3 or not is_prime(self.Q):
            raise ValueError(f"Q must be a prime >= 3, got {self.Q}")
        if not is_prime(self.P):
            raise ValueError(f"P must be prime, got {self.P}")


def chi3(n: int) -> int:
    """Multiplicative character mod 3: 1, -1, 0 for n = 1, 2, 0 (mod 3)."""
    r = n % 3
    return 0 if r == 0 else (1 if r == 1 else -1)


def gamma4(n: int) -> int:
    """Multiplicative character mod 4: 1, -1, 0 for n = 1, 3, even (mod 4)."""
    r = n % 4
    return 1 if r == 1 else (-1 if r == 3 else 0)


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, (prime, exponent) pairs in order."""
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    if n == 1:
        return 1
    m = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        m = -m
    return m


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def squarefree_smooth(primes: list[int], limit: int) -> list[int]:
    """Sorted squarefree products of the given primes, capped at `limit`."""
    out = [1]
    for p in primes:
        out.extend([v * p for v in out if v * p <= limit])
    return sorted(v for v in out if v <= limit)


def smooth_squarefree(ctx: SieveContext, limit: int) -> list[int]:
    """N2 intersected with [1, limit]: squarefree with all prime factors <= Q."""
    return squarefree_smooth(primes_upto(ctx.Q), limit)


def odd_smooth_squarefree(ctx: SieveContext, limit: int) -> list[int]:
    """Odd members of N2 up to `limit` (the index set of the Lambda sieve)."""
    return squarefree_smooth([p for p in primes_upto(ctx.Q) if p > 2], limit)


def sec2_sieve_set(ctx: SieveContext, limit: int) -> list[int]:
    """Squarefree integers generated by primes strictly below P, up to limit."""
    return squarefree_smooth([p for p in primes_upto(ctx.P) if p < ctx.P], limit)


def is_rough(n: int, ctx: SieveContext) -> bool:
    """True iff every prime factor of n is >= Q; vacuously true for n = 1."""
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    return all(p >= ctx.Q for p, _ in factorize(n))


def is_strictly_rough(n: int, ctx: SieveContext) -> bool:
    """True iff every prime factor of n is > Q (the sieve-complement set N1)."""
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    return all(p > ctx.Q for p, _ in factorize(n))


def rough_integers(ctx: SieveContext, limit: int) -> list[int]:
    """N1 intersected with [1, limit]: all prime factors > Q.

    This is exactly the set of frequencies surviving the Mobius sieve over
    N2, so 1 is a member and N1 meets the Q-smooth numbers only in {1}.
    """
    limit = min(limit, ctx.N1_limit)
    if limit < 1:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = 0
    for p in primes_upto(ctx.Q):
        sieve[p::p] = bytearray(len(sieve[p::p]))
    sieve[1] = 1
    return [i for i in range(1, limit + 1) if sieve[i]]


def eta(n: int, ctx: SieveContext) -> Fraction:
    """The sieved-series weight: 1/2 on N1, -3/2 on 3*N1."""
    if n >= 1 and is_strictly_rough(n, ctx):
        return Fraction(1, 2)
    if n % 3 == 0 and is_strictly_rough(n // 3, ctx):
        return Fraction(-3, 2)
    raise ValueError(f"{n} is in neither N1 nor 3*N1 for Q={ctx.Q}")


@lru_cache(maxsize=None)
def next_prime_at_least(n: int) -> int:
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return p
