import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramify.arith import ResourceBudgetError
from ramify.counting import (
    build_sieve,
    count_ramifiers,
    double_sum,
    multi_modulus_ramifiers,
    ramifier_counts,
    threshold,
)


def naive_is_ramifier(n, m):
    return any(n % r == m - n % m for r in range(2, m))


def naive_set(m, x):
    return [n for n in range(2, x + 1) if naive_is_ramifier(n, m)]


class TestBuildSieve:
    def test_m5_x20(self):
        assert build_sieve(5, 20).ramifiers() == [4, 7, 8, 9, 18, 19]

    def test_m2_all_clear(self):
        s = build_sieve(2, 100)
        assert s.ramifiers() == [] and s.count() == 0

    def test_m3_x10(self):
        assert build_sieve(3, 10).ramifiers() == [5]

    def test_matches_naive_grid(self):
        for m in range(2, 41):
            for x in (2, 23, 137):
                assert build_sieve(m, x).ramifiers() == naive_set(m, x), (m, x)

    @given(st.integers(2, 60), st.integers(2, 600))
    @settings(max_examples=150)
    def test_matches_naive_random(self, m, x):
        sieve = build_sieve(m, x)
        for n in range(2, x + 1):
            assert sieve.bit(n) == naive_is_ramifier(n, m)

    def test_budget(self):
        with pytest.raises(ResourceBudgetError):
            build_sieve(5, 10_000, budget_bits=100)

    def test_bit_range_guard(self):
        with pytest.raises(ValueError):
            build_sieve(5, 20).bit(21)


class TestCountSummary:
    def test_m5_x20(self):
        s = count_ramifiers(5, 20)
        assert s.count == 6
        assert s.radius == 14
        assert s.has_ramifiers
        assert s.upper_main == pytest.approx(14.1386, abs=1e-3)
        assert s.lower_main == pytest.approx(12.0)

    def test_empty_set(self):
        s = count_ramifiers(2, 100)
        assert s.count == 0 and s.radius == 0 and not s.has_ramifiers

    def test_monotone_in_x(self):
        for m in (3, 5, 12):
            counts = [count_ramifiers(m, x).count for x in range(2, 200, 7)]
            assert counts == sorted(counts)

    @given(st.integers(2, 50), st.integers(2, 400))
    @settings(max_examples=150)
    def test_invariants(self, m, x):
        s = count_ramifiers(m, x)
        assert 0 <= s.count <= x - 1
        # multiples of m and the class n = 1 (mod m) are never marked
        assert s.count <= x - 1 - max(0, x // m - 1)
        assert s.radius <= max(x - m, m - 2)
        if s.has_ramifiers:
            ns = naive_set(m, x)
            assert s.radius == max(abs(n - m) for n in ns)


class TestFastCounts:
    def test_counts_match_sieves(self):
        for x in (2, 3, 17, 60, 250):
            counts = ramifier_counts(x, 2, x)
            for m in range(2, x + 1):
                assert counts[m - 2] == build_sieve(m, x).count(), (m, x)

    @given(st.integers(2, 200), st.data())
    @settings(max_examples=80)
    def test_double_sum_matches_oracle(self, x, data):
        m_lo = data.draw(st.integers(2, x))
        m_hi = data.draw(st.integers(m_lo, x))
        expected = sum(len(naive_set(m, x)) for m in range(m_lo, m_hi + 1))
        assert double_sum(x, m_lo, m_hi) == expected

    def test_example_sum(self):
        assert double_sum(20, 2, 5) == 16

    def test_golden_value_x100(self):
        # frozen after oracle summation over m in [2, 100]
        assert double_sum(100, 2, 100) == 3694

    def test_m2_alone(self):
        assert double_sum(2, 2, 2) == 0

    def test_bad_range(self):
        with pytest.raises(ValueError):
            double_sum(10, 5, 11)


class TestMultiModulus:
    def test_x7(self):
        assert multi_modulus_ramifiers(7) == [
            (3, [4, 6]),
            (5, [3, 6, 7]),
            (7, [4, 5]),
        ]

    def test_x2_empty(self):
        assert multi_modulus_ramifiers(2) == []

    def test_x20_nonempty(self):
        assert multi_modulus_ramifiers(20)

    @given(st.integers(2, 70))
    @settings(max_examples=40)
    def test_matches_naive(self, x):
        expected = []
        for n in range(2, x + 1):
            ms = [m for m in range(2, x + 1) if naive_is_ramifier(n, m)]
            if len(ms) >= 2:
                expected.append((n, ms))
        assert multi_modulus_ramifiers(x) == expected


class TestThreshold:
    @pytest.mark.parametrize("x, expected", [(4, 3), (20, 5), (100, 11), (1000, 32), (10_000, 101)])
    def test_values(self, x, expected):
        assert threshold(x) == expected

    def test_domain(self):
        with pytest.raises(ValueError):
            threshold(1)
