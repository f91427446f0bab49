import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramify.arith import (
    CrtSolution,
    ResourceBudgetError,
    crt_solve,
    divisors_in_range,
    ext_gcd,
    gcd,
    prime_table,
)


def trial_is_prime(v):
    return v >= 2 and all(v % d for d in range(2, math.isqrt(v) + 1))


class TestGcd:
    def test_schoolbook(self):
        assert gcd(8, 6) == 2

    def test_zero_identity(self):
        assert gcd(0, 7) == 7

    def test_coprime(self):
        assert gcd(3, 4) == 1

    def test_zero_zero_convention(self):
        assert gcd(0, 0) == 0

    @given(st.integers(0, 10**9), st.integers(0, 10**9))
    def test_ext_gcd_bezout(self, a, b):
        g, s, t = ext_gcd(a, b)
        assert g == math.gcd(a, b)
        assert a * s + b * t == g


class TestCrtSolve:
    def test_example(self):
        assert crt_solve(3, 8, 5, 7) == CrtSolution(least=19, period=56)

    def test_unsolvable_parity(self):
        assert crt_solve(2, 4, 1, 2) is None

    def test_zero_residues(self):
        assert crt_solve(0, 5, 0, 3) == CrtSolution(least=0, period=15)

    def test_residue_out_of_range(self):
        with pytest.raises(ValueError):
            crt_solve(8, 8, 0, 3)

    def test_period_overflow(self):
        with pytest.raises(OverflowError):
            crt_solve(1, 2**63, 0, 2**63 - 1)

    @given(st.integers(1, 60), st.integers(1, 60), st.data())
    @settings(max_examples=200)
    def test_least_solution_matches_scan(self, m, r, data):
        a1 = data.draw(st.integers(0, m - 1))
        a2 = data.draw(st.integers(0, r - 1))
        sol = crt_solve(a1, m, a2, r)
        period = m * r // math.gcd(m, r)
        scan = [n for n in range(period) if n % m == a1 and n % r == a2]
        if sol is None:
            assert scan == []
        else:
            assert sol.period == period
            assert scan and scan[0] == sol.least


class TestPrimeTable:
    def test_small_primes(self):
        assert prime_table(10).primes == (2, 3, 5, 7)

    def test_degenerate_limit(self):
        assert prime_table(1).primes == ()

    def test_count_to_100(self):
        assert len(prime_table(100).primes) == 25

    def test_boundary_bits(self):
        pt = prime_table(97)
        assert not pt.is_prime(0) and not pt.is_prime(1)
        assert pt.is_prime(2) and pt.is_prime(97)

    def test_agrees_with_trial_division(self):
        pt = prime_table(10_000)
        for p in range(10_001):
            assert pt.is_prime(p) == trial_is_prime(p), p

    def test_budget(self):
        with pytest.raises(ResourceBudgetError):
            prime_table(10_000, budget_bits=100)

    def test_out_of_range_query(self):
        with pytest.raises(ValueError):
            prime_table(10).is_prime(11)


class TestDivisorsInRange:
    def test_simple(self):
        assert divisors_in_range(8, 3, 5) == [4]

    def test_zero_divisible_by_all(self):
        assert divisors_in_range(0, 3, 5) == [3, 4, 5]

    def test_single_hit(self):
        assert divisors_in_range(14, 5, 13) == [7]

    def test_bad_window(self):
        with pytest.raises(ValueError):
            divisors_in_range(8, 6, 5)
        with pytest.raises(ValueError):
            divisors_in_range(8, 1, 5)

    def test_wide_window_uses_divisor_enumeration(self):
        # window far wider than 2*sqrt(k)
        assert divisors_in_range(36, 2, 10_000) == [2, 3, 4, 6, 9, 12, 18, 36]

    @given(st.integers(0, 10_000), st.integers(2, 200), st.integers(2, 200))
    @settings(max_examples=300)
    def test_matches_filter(self, k, bound1, bound2):
        lo, hi = min(bound1, bound2), max(bound1, bound2)
        expected = [r for r in range(lo, hi + 1) if k == 0 or k % r == 0]
        assert divisors_in_range(k, lo, hi) == expected
