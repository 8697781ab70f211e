import pytest

from whitlab.gfq import factor_prime_power, field_new


class TestConstruction:
    def test_prime_field(self):
        f = field_new(5)
        assert (f.p, f.e, f.q) == (5, 1, 5)

    def test_gf4_modulus(self):
        f = field_new(4)
        assert (f.p, f.e) == (2, 2)
        assert f.modulus == (1, 1, 1)  # x^2 + x + 1

    def test_not_prime_power(self):
        for q in (1, 6, 10, 12, 100):
            with pytest.raises(ValueError):
                field_new(q)

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            field_new(2**21)

    def test_deterministic(self):
        a = field_new(9)
        b = field_new(9)
        assert a.modulus == b.modulus
        assert [a.mul(x, y) for x in range(9) for y in range(9)] == [
            b.mul(x, y) for x in range(9) for y in range(9)
        ]

    def test_factor_prime_power(self):
        assert factor_prime_power(8) == (2, 3)
        assert factor_prime_power(49) == (7, 2)
        assert factor_prime_power(36) is None


class TestArithmetic:
    def test_f5_add(self):
        assert field_new(5).add(3, 4) == 2

    def test_f4_generator_square(self):
        # with modulus x^2+x+1, x * x = x + 1 (indices 2 * 2 = 3)
        assert field_new(4).mul(2, 2) == 3

    def test_f7_inverse(self):
        assert field_new(7).inv(3) == 5

    def test_zero_inversion_rejected(self):
        with pytest.raises(ZeroDivisionError):
            field_new(7).inv(0)
        with pytest.raises(ZeroDivisionError):
            field_new(8).inv(0)

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_field_axioms_exhaustive(self, q):
        f = field_new(q)
        els = list(f.elements())
        assert els == list(range(q))
        for a in els:
            assert f.add(a, 0) == a
            assert f.mul(a, 1) == a
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
            for b in els:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
        for a in els:
            for b in els:
                for c in els:
                    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_midsize_log_tables(self):
        # beyond the full-table threshold: log/antilog path
        f = field_new(1021)
        assert f.mul(512, 2) == 3
        assert f.mul(f.inv(77), 77) == 1
