"""Ramifier predicates, witnesses, the character, and per-modulus searches.

An integer n >= 2 ramifies in modulus m >= 2 when, writing a1 = n mod m,
some inner modulus r with 2 <= r < m satisfies n mod r = m - a1: the two
canonical residues then split m additively.  Equivalently, with
a2 = m - a1, the witnesses are exactly the divisors of n - a2 lying in
the open window (a2, m), where a difference of zero is divisible by
every candidate.  Residues are least non-negative representatives
throughout, and r = 1 is excluded (n mod 1 = 0 would force a1 = m).

A witness is strong when both residues are prime; searching for a strong
witness of some n is then the same problem as splitting m into a prime
pair, which is where the even-modulus sweeps in the claims module get
their interest.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .arith import PrimeTable, crt_solve, divisors_in_range


@dataclass(frozen=True)
class Witness:
    """Certificate that n ramifies in modulus m via inner modulus r."""

    m: int
    n: int
    a1: int
    r: int
    a2: int

    def validate(self) -> None:
        """Assert every structural invariant of a witness."""
        assert self.n >= 2 and self.m >= 2, "domain requires n >= 2, m >= 2"
        assert self.a1 == self.n % self.m, "a1 must be the canonical residue mod m"
        assert self.a2 == self.n % self.r, "a2 must be the canonical residue mod r"
        assert self.a1 + self.a2 == self.m, "residues must split the modulus"
        assert self.a2 < self.r < self.m, "inner modulus must lie in (a2, m)"
        assert self.r >= 2


@dataclass(frozen=True)
class StrongWitness:
    """Witness whose two residues are both prime."""

    m: int
    n: int
    p1: int
    r: int
    p2: int

    def as_witness(self) -> Witness:
        return Witness(m=self.m, n=self.n, a1=self.p1, r=self.r, a2=self.p2)

    def validate(self, primes: PrimeTable | None = None) -> None:
        self.as_witness().validate()
        for p in (self.p1, self.p2):
            if primes is not None and p <= primes.limit:
                ok = primes.is_prime(p)
            else:
                ok = p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))
            assert ok, f"residue {p} is not prime"


@dataclass(frozen=True)
class IndexRecord:
    """The least witnessing inner modulus for (n, m), plus the full list."""

    m: int
    n: int
    index: int
    all_indices: tuple[int, ...]


def _check_domain(n: int, m: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2")
    if m < 2:
        raise ValueError("m must be >= 2")


def ramifier_witnesses(n: int, m: int) -> list[Witness]:
    """All witnesses that n ramifies in modulus m, ascending by inner modulus."""
    _check_domain(n, m)
    a1 = n % m
    if a1 <= 1:
        # a1 = 0 would need a2 = m >= r, and a1 = 1 leaves the empty window
        # (m - 1, m); neither admits an inner modulus.
        return []
    a2 = m - a1
    return [
        Witness(m=m, n=n, a1=a1, r=r, a2=a2)
        for r in divisors_in_range(abs(n - a2), a2 + 1, m - 1)
    ]


def character(n: int, m: int) -> int:
    """Indicator (0 or 1) of whether n ramifies in modulus m."""
    _check_domain(n, m)
    a1 = n % m
    if a1 <= 1:
        return 0
    a2 = m - a1
    k = abs(n - a2)
    if k == 0:
        return 1
    lo, hi = a2 + 1, m - 1
    root = math.isqrt(k)
    if hi - lo <= 2 * root:
        return 1 if any(k % r == 0 for r in range(lo, hi + 1)) else 0
    for d in range(1, root + 1):
        if k % d == 0 and (lo <= d <= hi or lo <= k // d <= hi):
            return 1
    return 0


def index_of(n: int, m: int) -> IndexRecord | None:
    """Least witnessing inner modulus of (n, m), or None for a non-ramifier.

    Several inner moduli can witness the same pair, so the full ascending
    list rides along with the minimum.
    """
    ws = ramifier_witnesses(n, m)
    if not ws:
        return None
    rs = tuple(w.r for w in ws)
    return IndexRecord(m=m, n=n, index=rs[0], all_indices=rs)


def strong_witnesses(n: int, m: int, primes: PrimeTable) -> list[StrongWitness]:
    """The witnesses of (n, m) whose residues are both prime."""
    if primes.limit < m:
        raise ValueError(f"prime table reaches {primes.limit}, need >= {m}")
    ws = ramifier_witnesses(n, m)
    if not ws or not (primes.is_prime(ws[0].a1) and primes.is_prime(ws[0].a2)):
        return []
    return [StrongWitness(m=m, n=n, p1=w.a1, r=w.r, p2=w.a2) for w in ws]


def admits_ramifier(m: int) -> Witness | None:
    """Witness with the least ramifying n for modulus m (ties: least r).

    Enumerates residue splits a1 + a2 = m and inner moduli r in (a2, m),
    keeping the least solution >= 2 of each solvable congruence pair.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    best: tuple[int, int, int, int] | None = None
    for a1 in range(1, m):
        a2 = m - a1
        for r in range(a2 + 1, m):
            sol = crt_solve(a1, m, a2, r)
            if sol is None:
                continue
            n0 = sol.least
            if n0 < 2:
                n0 += sol.period
            if best is None or (n0, r) < best[:2]:
                best = (n0, r, a1, a2)
    if best is None:
        return None
    n0, r, a1, a2 = best
    return Witness(m=m, n=n0, a1=a1, r=r, a2=a2)


def _min_strong_n(m: int, primes: PrimeTable) -> int | None:
    # Ascending-n candidate scan.  For n < m the ramifiers are exactly
    # n = m/2 (difference n - a2 = 0) and n with 2m/3 < n < m (witness
    # 2n - m); for m < n < 2m they are n = m + a1 with m/3 < a1 < m and
    # a1 != m/2 (witness 2*a1, or a1 itself once a1 > m/2).  A prime
    # residue split exists for some n iff it exists in one of these two
    # bands, so nothing beyond 2m needs to be examined.
    if m % 2 == 0:
        half = m // 2
        if half >= 2 and primes.is_prime(half):
            return half
    plist = primes.primes
    i = bisect_right(plist, (2 * m) // 3)
    while i < len(plist) and plist[i] < m:
        if primes.is_prime(m - plist[i]):
            return plist[i]
        i += 1
    i = bisect_right(plist, m // 3)
    while i < len(plist) and plist[i] < m:
        p = plist[i]
        if 2 * p != m and primes.is_prime(m - p):
            return m + p
        i += 1
    return None


def admits_strong_ramifier(m: int, primes: PrimeTable) -> StrongWitness | None:
    """Strong witness with the least ramifying n for modulus m, if any."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if primes.limit < m:
        raise ValueError(f"prime table reaches {primes.limit}, need >= {m}")
    n = _min_strong_n(m, primes)
    if n is None:
        return None
    a1 = n % m
    a2 = m - a1
    r = divisors_in_range(abs(n - a2), a2 + 1, m - 1)[0]
    return StrongWitness(m=m, n=n, p1=a1, r=r, p2=a2)


def goldbach_partitions(m: int, primes: PrimeTable) -> list[tuple[int, int]]:
    """All unordered prime pairs (p1, p2), p1 <= p2, with p1 + p2 = m even."""
    if m % 2 or m < 4:
        raise ValueError("m must be even and >= 4")
    if primes.limit < m:
        raise ValueError(f"prime table reaches {primes.limit}, need >= {m}")
    plist = primes.primes
    return [
        (p, m - p)
        for p in plist[: bisect_right(plist, m // 2)]
        if primes.is_prime(m - p)
    ]
