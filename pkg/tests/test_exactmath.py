from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whitlab.exactmath import (
    UniPolyQ,
    bernoulli,
    binom,
    deflate_roots,
    expand_linear_factors,
    lagrange_interpolate,
    power_sum,
    qbinom,
)


class TestBinom:
    def test_vanishing_convention(self):
        assert binom(5, -1) == 0
        assert binom(3, 5) == 0
        assert binom(-2, 0) == 0
        assert binom(5, 2) == 10


class TestQbinom:
    def test_empty_product(self):
        assert qbinom(7, 0, 3) == 1

    def test_known_value(self):
        assert qbinom(4, 2, 2) == 35

    def test_symmetry(self):
        assert qbinom(5, 2, 3) == qbinom(5, 3, 3)

    def test_out_of_range(self):
        assert qbinom(3, 5, 2) == 0
        assert qbinom(-1, 0, 2) == 0
        assert qbinom(3, -1, 2) == 0

    def test_rejects_small_q(self):
        with pytest.raises(ValueError):
            qbinom(3, 1, 1)

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_product_identity(self, q):
        # [r s][s t] = [r t][r-t r-s] for 0 <= t <= s <= r <= 8
        for r in range(9):
            for s in range(r + 1):
                for t in range(s + 1):
                    lhs = qbinom(r, s, q) * qbinom(s, t, q)
                    rhs = qbinom(r, t, q) * qbinom(r - t, r - s, q)
                    assert lhs == rhs

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_alternating_sum_vanishes(self, q):
        # sum_k [i k] (-1)^(i-k) q^C(i-k,2) = 0 for i >= 1
        for i in range(1, 9):
            total = sum(
                qbinom(i, k, q) * (-1) ** (i - k) * q ** binom(i - k, 2)
                for k in range(i + 1)
            )
            assert total == 0

    def test_counts_subspaces(self):
        # matches a directly computed subspace count at tiny size
        from whitlab.gfq import field_new
        from whitlab.subspaces import enumerate_subspaces

        assert qbinom(3, 1, 2) == len(list(enumerate_subspaces(field_new(2), 3, 1)))


class TestBernoulli:
    def test_first_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(4) == Fraction(-1, 30)

    def test_odd_vanish(self):
        assert all(bernoulli(i) == 0 for i in range(3, 20, 2))


class TestPowerSum:
    def test_examples(self):
        assert power_sum(1, 4) == 10
        assert power_sum(2, 3) == 14
        assert power_sum(3, 5) == 225

    def test_against_direct_summation(self):
        for j in range(9):
            for a in range(51):
                assert power_sum(j, a) == sum(i**j for i in range(1, a + 1))


class TestUniPolyQ:
    def test_zero_degree_sentinel(self):
        assert UniPolyQ().degree == -1
        assert UniPolyQ([0, 0]).degree == -1

    def test_trailing_zeros_trimmed(self):
        assert UniPolyQ([1, 2, 0]).coeffs == (Fraction(1), Fraction(2))

    def test_expand_linear_factors(self):
        assert expand_linear_factors([1, 2]) == UniPolyQ([2, -3, 1])
        p = expand_linear_factors([1, 2, 4, 8, 10])
        assert p.int_coeffs() == (-640, 1264, -820, 220, -25, 1)

    def test_deflate_roots(self):
        p = expand_linear_factors([1, 2, 4, 8, 10])
        q = deflate_roots(p, [2, 8])
        assert q == expand_linear_factors([1, 4, 10])

    def test_deflate_rejects_non_root(self):
        p = expand_linear_factors([1, 2])
        with pytest.raises(ValueError, match="not a root"):
            deflate_roots(p, [3])

    def test_shift(self):
        p = UniPolyQ([0, 0, 1])  # x^2
        assert p.shift(1) == UniPolyQ([1, 2, 1])  # (x+1)^2

    def test_format(self):
        assert UniPolyQ([2, -3, 1]).format() == "x^2 - 3*x + 2"
        assert UniPolyQ([]).format() == "0"
        assert UniPolyQ([Fraction(1, 2)]).format() == "1/2"

    @given(
        st.lists(st.integers(-9, 9), max_size=5),
        st.lists(st.integers(-9, 9), max_size=5),
        st.integers(-5, 5),
    )
    def test_ring_laws_at_points(self, a, b, x):
        p, q = UniPolyQ(a), UniPolyQ(b)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


class TestLagrange:
    def test_square(self):
        pts = [(x, x * x) for x in (0, 1, 2)]
        assert lagrange_interpolate(pts) == UniPolyQ([0, 0, 1])

    def test_constant(self):
        assert lagrange_interpolate([(0, 7), (1, 7)]) == UniPolyQ([7])

    def test_round_trip_with_expand(self):
        p = expand_linear_factors([1, 2])
        pts = [(x, p.evaluate(x)) for x in (0, 1, 2)]
        assert lagrange_interpolate(pts) == p

    def test_duplicate_abscissas_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            lagrange_interpolate([(1, 1), (1, 2)])

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True))
    @settings(max_examples=50)
    def test_reproduces_ordinates(self, xs):
        import random

        rnd = random.Random(1234)
        pts = [(x, rnd.randint(-100, 100)) for x in xs]
        p = lagrange_interpolate(pts)
        assert all(p.evaluate(x) == y for x, y in pts)
        assert p.degree < len(pts)
