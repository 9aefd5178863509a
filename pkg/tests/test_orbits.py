import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bezier_ifs.exactnum import Dyadic, IBetaPoly
from bezier_ifs.orbits import (ALL_ONES, a_coeff, a_coeff_tail_bound,
                               a_k_samples, initial_state, orbit_state, pi,
                               pi_inverse, reverse_prefix, scalar_ifs_polys,
                               vector_field_v, vector_field_vm, w_poly,
                               z_poly, z_poly_via_matrices, z_step)
from bezier_ifs.takagi import takagi

words = st.lists(st.integers(0, 1), min_size=0, max_size=16).map(tuple)


class TestPi:
    def test_single_digit(self):
        assert pi((1,)) == Dyadic(1, 1)

    def test_three_digits(self):
        assert pi((0, 1, 1)) == Dyadic(3, 3)

    def test_all_ones_sentinel(self):
        assert pi(ALL_ONES) == Dyadic(1)

    @given(words)
    def test_pi_inverse_roundtrip(self, d):
        n = len(d)
        assert pi_inverse(pi(d), n) == d

    def test_bad_digit_rejected(self):
        with pytest.raises(ValueError):
            pi((0, 2))


class TestPiInverse:
    def test_dyadic_convention(self):
        assert pi_inverse(Dyadic(1, 1), 4) == (1, 0, 0, 0)

    def test_third(self):
        assert pi_inverse(Fraction(1, 3), 6) == (0, 1, 0, 1, 0, 1)

    def test_one_truncates_all_ones(self):
        assert pi_inverse(1, 3) == (1, 1, 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            pi_inverse(1.5, 3)

    def test_prefix_approximation(self):
        x = Fraction(5, 7)
        for n in range(1, 12):
            r = pi(pi_inverse(x, n))
            assert abs(x - Fraction(r.num, 1 << r.exp)) < Fraction(1, 1 << n)


class TestReversePrefix:
    def test_basic(self):
        assert reverse_prefix((1, 0, 0), 3) == (0, 0, 1)

    def test_four(self):
        assert reverse_prefix((1, 1, 0, 1), 4) == (1, 0, 1, 1)

    @given(words.filter(lambda d: len(d) >= 1))
    def test_involution(self, d):
        n = len(d)
        assert reverse_prefix(reverse_prefix(d, n), n) == d


class TestZStep:
    def test_digit_one_from_origin(self):
        s1 = z_step(initial_state(), 1)
        assert s1.Z == IBetaPoly([Dyadic(1, 1), 1])  # 1/2 + i*beta

    def test_digit_zero_from_origin(self):
        s1 = z_step(initial_state(), 0)
        assert s1.Z == IBetaPoly()

    def test_w00_and_w10(self):
        w = w_poly(0, 0)
        assert w.coeff(0) == Dyadic(1, 1)  # w_{0,0} = 1/2
        assert w.coeff(1) == Dyadic(1)     # w_{1,0} = i, folded into (i*beta)

    def test_bad_digit(self):
        with pytest.raises(ValueError):
            z_step(initial_state(), 2)

    @given(words, st.integers(0, 1))
    def test_state_bookkeeping(self, d, b):
        s = orbit_state(d, len(d))
        s2 = z_step(s, b)
        assert s2.n == s.n + 1 and s2.u == s.u + b
        assert s2.r == s.r + (Dyadic(b, s.n + 1))


class TestWPoly:
    @given(st.integers(0, 10), st.integers(0, 10))
    def test_product_oracle(self, n, u):
        # W_n = (1-t)^u * t^(n-u+1) expanded in the polynomial ring
        if u > n:
            u = n
        t, omt = scalar_ifs_polys()
        assert w_poly(n, u) == omt ** u * t ** (n - u + 1)


class TestZPoly:
    def test_all_zeros(self):
        assert z_poly((0, 0, 0, 0), 4) == IBetaPoly()

    def test_leading_one_constant_coeff(self):
        # a_{0,n} = r_n = sum d_k / 2^k in the given digit order
        assert z_poly((1, 0, 0), 3).coeff(0) == Dyadic(1, 1)

    def test_constant_equals_r(self):
        rng = random.Random(6)
        for _ in range(100):
            n = rng.randint(1, 16)
            d = tuple(rng.randint(0, 1) for _ in range(n))
            assert z_poly(d, n).coeff(0) == pi(d)

    @given(words)
    @settings(max_examples=60)
    def test_matrix_oracle(self, d):
        n = len(d)
        assert z_poly(d, n) == z_poly_via_matrices(d, n)

    def test_all_ones_sentinel_accepted(self):
        assert z_poly(ALL_ONES, 3).coeff(0) == Dyadic(7, 3)


class TestACoeff:
    def test_k0_is_r(self):
        d = (1, 1, 0, 1)
        assert a_coeff(d, 0, 4) == pi(d)

    def test_k1_is_takagi_slope(self):
        rng = random.Random(8)
        for _ in range(50):
            n = rng.randint(1, 14)
            d = tuple(rng.randint(0, 1) for _ in range(n))
            assert a_coeff(d, 1, n) == 2 * takagi(pi(d))

    def test_bound(self):
        rng = random.Random(10)
        for _ in range(50):
            d = tuple(rng.randint(0, 1) for _ in range(20))
            for k in range(7):
                assert abs(a_coeff(d, k, 20)) < Dyadic(1, -(k + 1))

    def test_tail_bound_decreases(self):
        assert a_coeff_tail_bound(1, 30) < a_coeff_tail_bound(1, 10)

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            a_coeff((1,), -1, 1)


class TestVectorField:
    def test_zero(self):
        assert vector_field_v(0.0, 8) == 0

    def test_half(self):
        assert vector_field_v(0.5, 4) == 1j

    def test_quarter(self):
        assert vector_field_v(Dyadic(1, 2), 8) == 1j

    def test_domain(self):
        with pytest.raises(ValueError):
            vector_field_v(1.5, 4)

    def test_k0_samples_identity(self):
        # alpha = 1 is the all-ones address, where the order-n sample is the
        # truncation r_n = 1 - 2^-n rather than 1.
        samples = a_k_samples(0, 4, 8)
        for alpha, c in samples[:-1]:
            assert float(c) == alpha
        assert samples[-1][1] == Dyadic((1 << 8) - 1, 8)

    def test_k1_samples_takagi(self):
        for alpha, c in a_k_samples(1, 8, 10)[:-1]:
            assert c == 2 * takagi(Dyadic(round(alpha * 256), 8))

    def test_k2_at_zero(self):
        assert a_k_samples(2, 3, 6)[0][1] == Dyadic(0)


class TestVectorFieldVm:
    def test_m1_reduces(self):
        for x in (0.0, 0.25, 0.5, 0.75):
            assert vector_field_vm(x, 1, 8) == vector_field_v(x, 8)

    def test_m3_half(self):
        assert vector_field_vm(Fraction(3, 2), 3, 8) == 3j

    def test_m2_origin(self):
        assert vector_field_vm(0, 2, 6) == 0

    def test_closed_form_on_grid(self):
        m = 2
        for j in range(0, 2 * 16):  # endpoint x/m = 1 is the all-ones address
            x = Fraction(j, 16)  # x/m = j/32 is dyadic, so order 8 is exact
            got = vector_field_vm(x, m, 8)
            assert got == 2 * m * 1j * float(takagi(Dyadic(j, 5)))

    def test_domain(self):
        with pytest.raises(ValueError):
            vector_field_vm(2.5, 2, 4)
