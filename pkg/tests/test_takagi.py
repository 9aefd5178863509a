import pytest
from hypothesis import given, strategies as st

from bezier_ifs.exactnum import Dyadic
from bezier_ifs.takagi import sigma, tak1_increment, takagi

unit_dyadics = st.integers(0, 10).flatmap(
    lambda e: st.builds(lambda n: Dyadic(n, e), st.integers(0, 1 << e)))


class TestSigma:
    def test_below_midpoint(self):
        assert sigma(0.25) == 0.25

    def test_exact_midpoint_far_out(self):
        assert sigma(17.5) == 0.5

    def test_symmetry(self):
        assert sigma(-0.75) == 0.25

    def test_dyadic_exact(self):
        assert sigma(Dyadic(3, 2)) == Dyadic(1, 2)
        assert sigma(Dyadic(35, 1)) == Dyadic(1, 1)

    @given(unit_dyadics)
    def test_periodicity(self, x):
        assert sigma(x + 3) == sigma(x)

    @given(unit_dyadics)
    def test_dyadic_matches_float(self, x):
        assert float(sigma(x)) == sigma(float(x))


class TestTakagi:
    def test_endpoints(self):
        assert takagi(Dyadic(0)) == Dyadic(0)
        assert takagi(Dyadic(1)) == Dyadic(0)

    def test_half(self):
        assert takagi(Dyadic(1, 1)) == Dyadic(1, 1)

    def test_quarters(self):
        assert takagi(Dyadic(1, 2)) == Dyadic(1, 1)
        assert takagi(Dyadic(3, 2)) == Dyadic(1, 1)

    def test_known_maximum_point(self):
        # T(1/3) = 2/3 is the max; at dyadic x values stay below it.
        assert takagi(1 / 3) == pytest.approx(2 / 3, abs=1e-12)

    def test_float_matches_exact_on_dyadics(self):
        for k in range(0, 65):
            x = Dyadic(k, 6)
            assert float(takagi(x)) == pytest.approx(takagi(float(x)), abs=1e-12)

    def test_domain_checked(self):
        with pytest.raises(ValueError):
            takagi(1.5)
        with pytest.raises(ValueError):
            takagi(Dyadic(-1, 2))

    @given(unit_dyadics)
    def test_symmetry_about_half(self, x):
        assert takagi(x) == takagi(1 - x)

    @given(unit_dyadics)
    def test_functional_equation_left_half(self, x):
        # T(x/2) = x/2 + T(x)/2 on [0,1]
        half_x = x.scale2(-1)
        assert takagi(half_x) == half_x + takagi(x).scale2(-1)


class TestIncrement:
    def test_trivial_base(self):
        assert tak1_increment((), 0, 1) == Dyadic(1, 1)

    def test_one_digit(self):
        # T(1/2 + 1/4) - T(1/2) = (2 - 2)/4 = 0
        assert tak1_increment((1,), 1, 2) == Dyadic(0)

    def test_two_ones(self):
        assert tak1_increment((1, 1), 2, 4) == Dyadic(0)

    def test_exhaustive_small(self):
        for n in range(0, 7):
            for bits in range(1 << n):
                d = tuple((bits >> (n - 1 - i)) & 1 for i in range(n))
                for m in range(n, 8):
                    u = sum(d)
                    assert tak1_increment(d, n, m) == Dyadic(m - 2 * u, m)

    def test_mismatch_raises(self):
        with pytest.raises(ValueError):
            tak1_increment((1, 0), 2, 1)  # m < n invalid
