"""Bulk ramifier enumeration: progression sieves, exact counts and radii,
the modulus-summed double count, and multi-modulus scans.

Two independent routes compute the same sets.  The sieve marks, for every
residue split a1 + a2 = m and inner modulus r, the arithmetic progression
of solutions of the congruence pair; the fast counters instead classify
each n by its quotient against m and fall back to a divisor-window test
only where no closed form exists.  The test suite holds the two routes
bit-for-bit against each other.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .arith import _BIT, DEFAULT_BUDGET_BITS, ResourceBudgetError, crt_solve


@dataclass(frozen=True)
class RamifierSieve:
    """Immutable bitmap over n in [2, x] marking the ramifiers of one modulus."""

    m: int
    x: int
    bits: bytes

    def bit(self, n: int) -> bool:
        if not 2 <= n <= self.x:
            raise ValueError(f"n={n} outside sieve range 2..{self.x}")
        return bool(self.bits[n >> 3] & _BIT[n & 7])

    def ramifiers(self) -> list[int]:
        bits = self.bits
        return [n for n in range(2, self.x + 1) if bits[n >> 3] & _BIT[n & 7]]

    def count(self) -> int:
        return int.from_bytes(self.bits, "little").bit_count()


@dataclass(frozen=True)
class CountSummary:
    """Exact count of ramifiers n <= x for one modulus, with the two
    claimed main terms evaluated alongside and the circle radius."""

    m: int
    x: int
    count: int
    upper_main: float
    lower_main: float
    radius: int
    has_ramifiers: bool


def _check_budget(x: int, budget_bits: int) -> None:
    if x + 1 > budget_bits:
        raise ResourceBudgetError(f"range to {x} exceeds budget of {budget_bits} bits")


def build_sieve(m: int, x: int, *, budget_bits: int = DEFAULT_BUDGET_BITS) -> RamifierSieve:
    """Mark every ramifier n in [2, x] for modulus m by progression marking.

    For each residue split a1 + a2 = m and each inner modulus r in
    (a2, m), the solvable congruence pairs contribute the progression
    least + k*lcm(m, r); their union over all pairs is the ramifier set.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if x < 2:
        raise ValueError("x must be >= 2")
    _check_budget(x, budget_bits)
    bits = bytearray((x >> 3) + 1)
    for a1 in range(1, m):
        a2 = m - a1
        for r in range(a2 + 1, m):
            sol = crt_solve(a1, m, a2, r)
            if sol is None:
                continue
            n = sol.least
            if n < 2:
                n += sol.period
            while n <= x:
                bits[n >> 3] |= _BIT[n & 7]
                n += sol.period
    return RamifierSieve(m=m, x=x, bits=bytes(bits))


def upper_main_term(m: int, x: int) -> float:
    """(1 - 1/m) * x - log x / log m, the claimed ceiling with O(1) dropped."""
    return (1 - 1 / m) * x - math.log(x) / math.log(m)


def lower_main_term(m: int, x: int) -> float:
    """(x^2 - x*m) / m^2, the claimed floor with its O(1) dropped."""
    return (x * x - x * m) / (m * m)


def summarize_sieve(sieve: RamifierSieve) -> CountSummary:
    """Count, circle radius, and main-term evaluations for a built sieve."""
    ns = sieve.ramifiers()
    m, x = sieve.m, sieve.x
    radius = max(abs(ns[0] - m), abs(ns[-1] - m)) if ns else 0
    return CountSummary(
        m=m,
        x=x,
        count=len(ns),
        upper_main=upper_main_term(m, x),
        lower_main=lower_main_term(m, x),
        radius=radius,
        has_ramifiers=bool(ns),
    )


def count_ramifiers(m: int, x: int, *, budget_bits: int = DEFAULT_BUDGET_BITS) -> CountSummary:
    """Exact ramifier count for modulus m over [2, x], via the sieve."""
    return summarize_sieve(build_sieve(m, x, budget_bits=budget_bits))


# --- closed-form counting -------------------------------------------------
#
# For a1 = n mod m >= 2 and a2 = m - a1, n ramifies iff n - a2 has a
# divisor in the open window (a2, m), a zero difference counting for every
# candidate.  Splitting on the quotient q = n // m:
#
#   q = 0 (n < m):      ramifier iff m < 3n/2 (witness 2n - m) or m = 2n
#                       (zero difference).
#   q = 1 (m < n < 2m): ramifier iff a1 > m/3 and a1 != m/2 (witness 2*a1
#                       while a1 < m/2, a1 itself beyond).
#   q >= 2 (n >= 2m):   no closed form; divisor-window test on n - a2.
#
# The q <= 1 bands make per-modulus counting O(1) outside the q >= 2 loop,
# which is what keeps the full double sum exact at desk scale.


def _divisor_lists(limit: int) -> list[list[int]]:
    """divs[k] = ascending divisors d of k with 2 <= d <= limit, for k <= limit."""
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(2, limit + 1):
        for k in range(d, limit + 1, d):
            divs[k].append(d)
    return divs


def _count_below_m(m: int, x: int) -> int:
    hi = min(m - 1, x)
    lo = max(2, (2 * m) // 3 + 1)
    count = max(0, hi - lo + 1)
    if m % 2 == 0 and m >= 4 and m // 2 <= x:
        count += 1
    return count


def _count_between_m_2m(m: int, x: int) -> int:
    hi = min(m - 1, x - m)
    lo = m // 3 + 1
    count = max(0, hi - lo + 1)
    if m % 2 == 0 and lo <= m // 2 <= hi:
        count -= 1
    return count


def _count_from_2m(m: int, x: int, divs: list[list[int]]) -> int:
    count = 0
    for a1 in range(2, m):
        a2 = m - a1
        k = m + 2 * a1  # n - a2 at n = 2m + a1, stepping by m afterwards
        k_max = x - a2
        while k <= k_max:
            dl = divs[k]
            i = bisect_right(dl, a2)
            if i < len(dl) and dl[i] < m:
                count += 1
            k += m
    return count


def _fast_count(m: int, x: int, divs: list[list[int]]) -> int:
    return _count_below_m(m, x) + _count_between_m_2m(m, x) + _count_from_2m(m, x, divs)


def ramifier_counts(
    x: int, m_lo: int, m_hi: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> list[int]:
    """Exact per-modulus ramifier counts over [2, x] for m in [m_lo, m_hi]."""
    if not 2 <= m_lo <= m_hi <= x:
        raise ValueError("need 2 <= m_lo <= m_hi <= x")
    _check_budget(x, budget_bits)
    divs = _divisor_lists(x)
    return [_fast_count(m, x, divs) for m in range(m_lo, m_hi + 1)]


def double_sum(
    x: int, m_lo: int, m_hi: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> int:
    """Sum of the per-modulus ramifier counts over m in [m_lo, m_hi], exact."""
    return sum(ramifier_counts(x, m_lo, m_hi, budget_bits=budget_bits))


def multi_modulus_ramifiers(
    x: int, *, budget_bits: int = DEFAULT_BUDGET_BITS
) -> list[tuple[int, list[int]]]:
    """Every n <= x ramifying in at least two moduli m <= x, ascending in n,
    each paired with its full ascending modulus list."""
    if x < 2:
        raise ValueError("x must be >= 2")
    _check_budget(x, budget_bits)
    divs = _divisor_lists(x)
    out: list[tuple[int, list[int]]] = []
    for n in range(2, x + 1):
        ms: list[int] = []
        for m in range(2, n // 2 + 1):  # q >= 2 band
            a1 = n % m
            if a1 < 2:
                continue
            dl = divs[n - (m - a1)]
            i = bisect_right(dl, m - a1)
            if i < len(dl) and dl[i] < m:
                ms.append(m)
        lo = n // 2 + 1  # q = 1 band: n/2 < m < 3n/4, m != 2n/3
        hi = min((3 * n - 1) // 4, x)
        ex = (2 * n) // 3 if n % 3 == 0 else 0
        ms.extend(m for m in range(lo, hi + 1) if m != ex)
        ms.extend(range(n + 1, min((3 * n - 1) // 2, x) + 1))  # q = 0 band
        if 2 * n <= x:
            ms.append(2 * n)
        if len(ms) >= 2:
            out.append((n, ms))
    return out


def threshold(x: int) -> int:
    """floor(x / sqrt(x - ln x)) + 1, the crossover modulus scale below which
    the claimed lower bound would overtake the claimed ceiling."""
    if x < 2:
        raise ValueError("x must be >= 2")
    return int(x / math.sqrt(x - math.log(x))) + 1
