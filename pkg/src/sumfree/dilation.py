"""The dilation machine: exact counting step functions, L1 norms, and
certified sum-free subset extraction.

For a set A and an arc system O, x -> |{n in A : n*x mod 1 in O}| is a step
function whose breakpoints are the points (e + j)/n for endpoints e of O.
Everything here is exact rational arithmetic; maximization happens at piece
midpoints, where the function is constant, so the results are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arcs import ArcSet, canonical_omega, pullback, is_arc_kl_sumfree, OMEGA_21
from .sets import IntegerSet, is_kl_sumfree

BREAKPOINT_CAP = 50_000_000


class BreakpointCapError(RuntimeError):
    pass


class CertificationError(RuntimeError):
    """An extracted subset failed its sum-freeness re-verification."""


@dataclass(frozen=True)
class PiecewiseConstantFn:
    """Step function on [0,1): values[i] on (breakpoints[i], breakpoints[i+1])
    cyclically (the last piece wraps around to breakpoints[0])."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values):
            raise ValueError("need one value per breakpoint")
        if len(self.breakpoints) == 0:
            raise ValueError("need at least one piece")

    def piece_lengths(self) -> list[Fraction]:
        bp = self.breakpoints
        n = len(bp)
        return [
            (bp[(i + 1) % n] - bp[i]) % 1 if n > 1 else Fraction(1)
            for i in range(n)
        ]

    def integral(self) -> Fraction:
        return sum(
            (v * L for v, L in zip(self.values, self.piece_lengths())), Fraction(0)
        )

    def eval(self, x) -> Fraction:
        """Value at x mod 1; x must not be a breakpoint."""
        x = Fraction(x) % 1
        bp = self.breakpoints
        if x in bp:
            raise ValueError(f"{x} is a breakpoint")
        import bisect

        i = bisect.bisect_left(bp, x) - 1
        return self.values[i % len(bp)]

    def __add__(self, other: "PiecewiseConstantFn") -> "PiecewiseConstantFn":
        return _merge(self, other, lambda a, b: a + b)

    def __sub__(self, other: "PiecewiseConstantFn") -> "PiecewiseConstantFn":
        return _merge(self, other, lambda a, b: a - b)

    def shift_const(self, c: Fraction) -> "PiecewiseConstantFn":
        return PiecewiseConstantFn(
            self.breakpoints, tuple(v + c for v in self.values)
        )

    def max_with_witness(self) -> tuple[Fraction, Fraction]:
        """(max value, lowest midpoint of a maximizing piece)."""
        best = max(self.values)
        bp = self.breakpoints
        n = len(bp)
        witnesses = []
        for i, v in enumerate(self.values):
            if v != best:
                continue
            lo = bp[i]
            hi = bp[(i + 1) % n]
            if n == 1:
                mid = (lo + Fraction(1, 2)) % 1
            elif i == n - 1:
                mid = ((lo + hi + 1) / 2) % 1
            else:
                mid = (lo + hi) / 2
            witnesses.append(mid)
        return best, min(witnesses)


def _merge(f: PiecewiseConstantFn, g: PiecewiseConstantFn, op) -> PiecewiseConstantFn:
    bp = sorted(set(f.breakpoints) | set(g.breakpoints))
    import bisect

    vals = []
    for i, x in enumerate(bp):
        # value on the piece starting at x: sample just after x
        fi = bisect.bisect_right(f.breakpoints, x) - 1
        gi = bisect.bisect_right(g.breakpoints, x) - 1
        vals.append(op(f.values[fi % len(f.values)], g.values[gi % len(g.values)]))
    return PiecewiseConstantFn(tuple(bp), tuple(vals))


def exact_l1(g: PiecewiseConstantFn) -> Fraction:
    return sum(
        (abs(v) * L for v, L in zip(g.values, g.piece_lengths())), Fraction(0)
    )


def orbit_subset(A: IntegerSet, O: ArcSet, x) -> IntegerSet:
    """{n in A : n*x mod 1 in O}, exact."""
    x = Fraction(x)
    members = [n for n in A if O.contains(n * x)]
    return IntegerSet(tuple(members))


def _reduced_fraction(num: int, den: int) -> Fraction:
    # num/den already in lowest terms with den > 0; skip the gcd in
    # Fraction.__new__, which dominates the sweep otherwise
    f = Fraction.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


def _sweep_events(A: IntegerSet, weighted_arcs) -> dict:
    """Exact level deltas keyed by reduced (num, den) breakpoint position."""
    deltas: dict = {}
    total = 0
    for lo, hi, weight in weighted_arcs:
        lo, hi = Fraction(lo), Fraction(hi)
        for n in A:
            total += 2 * n
            if total > BREAKPOINT_CAP:
                raise BreakpointCapError(
                    f"breakpoint count exceeds cap {BREAKPOINT_CAP}"
                )
            for sign, e in ((weight, lo), (-weight, hi)):
                en, ed = e.numerator, e.denominator
                den = n * ed
                for j in range(n):
                    num = en + j * ed
                    g = gcd(num, den)
                    key = (num // g, den // g)
                    deltas[key] = deltas.get(key, 0) + sign
    return deltas


def weighted_count_function(A: IntegerSet, weighted_arcs) -> PiecewiseConstantFn:
    """Exact step function sum_{n in A} sum_{arcs} weight * 1_arc(n*x)."""
    deltas = _sweep_events(A, weighted_arcs)
    if not deltas:
        return PiecewiseConstantFn((Fraction(0),), (Fraction(0),))
    # distinct reduced positions here are separated by at least 1/(d1*d2),
    # far above float error at these denominators, so the float sort is
    # exact; the integer pair breaks any residual tie deterministically
    order = sorted(deltas, key=lambda nd: (nd[0] / nd[1], nd))
    breakpoints = []
    values = []
    level = 0
    for key in order:
        delta = deltas[key]
        level = level + delta
        if delta == 0 and breakpoints:
            continue  # opening and closing edges cancelled exactly
        breakpoints.append(_reduced_fraction(*key))
        values.append(level)
    if breakpoints[0] != 0:
        # value on the wrap-around piece (after the last breakpoint) is 0,
        # matching the level before the first event.
        breakpoints.insert(0, Fraction(0))
        values.insert(0, Fraction(0))
    return PiecewiseConstantFn(tuple(breakpoints), tuple(values))


def count_function(A: IntegerSet, O: ArcSet) -> PiecewiseConstantFn:
    """x -> |A_x| as an exact step function."""
    return weighted_count_function(
        A, [(lo, hi, 1) for lo, hi in O.arcs]
    )


def maximize_count(A: IntegerSet, O: ArcSet) -> tuple[Fraction, int]:
    """Global maximum of |A_x| over x, with the lowest maximizing midpoint."""
    f = count_function(A, O)
    best, x_star = f.max_with_witness()
    return x_star, int(best)


def balanced_function(A: IntegerSet, O: ArcSet) -> PiecewiseConstantFn:
    """count_function minus its mean N*measure(O); integrates to zero."""
    return count_function(A, O).shift_const(-A.N * O.measure)


@dataclass(frozen=True)
class ExtractionCertificate:
    x_star: Fraction
    subset: IntegerSet
    count: int
    arc_used: ArcSet
    k: int
    l: int
    sumfree_checked: bool
    surplus: Fraction

    def to_json(self) -> dict:
        return {
            "x_star": [self.x_star.numerator, self.x_star.denominator],
            "subset": list(self.subset.elements),
            "count": self.count,
            "arc_used": self.arc_used.to_json(),
            "k": self.k,
            "l": self.l,
            "sumfree_checked": self.sumfree_checked,
            "surplus": [self.surplus.numerator, self.surplus.denominator],
        }

    @staticmethod
    def from_json(data) -> "ExtractionCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return ExtractionCertificate(
            x_star=Fraction(*data["x_star"]),
            subset=IntegerSet.of(data["subset"]),
            count=data["count"],
            arc_used=ArcSet.from_json(data["arc_used"]),
            k=data["k"],
            l=data["l"],
            sumfree_checked=data["sumfree_checked"],
            surplus=Fraction(*data["surplus"]),
        )

    def reverify(self, A: IntegerSet) -> bool:
        """Recompute the orbit subset and re-run the sum-freeness check."""
        sub = orbit_subset(A, self.arc_used, self.x_star)
        return (
            sub.elements == self.subset.elements
            and len(sub) == self.count
            and is_kl_sumfree(sub, self.k, self.l)
        )


def candidate_arcs(A_geometric: bool, k: int, l: int) -> list[ArcSet]:
    """Single-interval candidates for extraction.

    For (2,1) this is the arc (1/3, 2/3).  For (2m,4m) the candidates are the
    individual intervals of the two canonical pullback systems; each interval
    is (2m,4m)-sum-free on its own (the union of a system generally is not).
    For geometric host sets the intervals of the (1/3,2/3)-arc pullback under
    x -> 2m*x join the pool, realizing the rescaling route.
    """
    if (k, l) == (2, 1):
        return [OMEGA_21]
    candidates = []
    for variant in (1, 2):
        candidates.extend(canonical_omega(k, l, variant).singletons())
    if A_geometric and k % 2 == 0 and l == 2 * k:
        candidates.extend(pullback(OMEGA_21, k).singletons())
    return candidates


def extract_certified(
    A: IntegerSet,
    k: int,
    l: int,
    arcs: list[ArcSet] | None = None,
    include_lacunary_route: bool = False,
) -> ExtractionCertificate:
    """Best certified (k,l)-sum-free subset over the candidate arc systems."""
    if arcs is None:
        arcs = candidate_arcs(include_lacunary_route, k, l)
    if not arcs:
        raise ValueError("no candidate arc systems")
    best = None
    for O in arcs:
        x_star, count = maximize_count(A, O)
        if best is None or count > best[1]:
            best = (x_star, count, O)
    x_star, count, O = best
    subset = orbit_subset(A, O, x_star)
    if len(subset) != count:
        raise CertificationError("orbit subset does not match the maximized count")
    if len(subset) > 0 and not is_kl_sumfree(subset, k, l):
        raise CertificationError(
            f"extracted subset {subset.elements} is not ({k},{l})-sum-free"
        )
    return ExtractionCertificate(
        x_star=x_star,
        subset=subset,
        count=count,
        arc_used=O,
        k=k,
        l=l,
        sumfree_checked=True,
        surplus=count - Fraction(A.N, k + l),
    )
