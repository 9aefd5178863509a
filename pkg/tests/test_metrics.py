import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bezier_ifs.metrics import DistanceReport, dist_asym, hausdorff

finite = st.floats(-100, 100)
clouds = st.lists(st.builds(complex, finite, finite), min_size=1, max_size=40).map(
    lambda xs: np.array(xs))


class TestDistAsym:
    def test_singleton_to_pair(self):
        assert dist_asym(np.array([0.0 + 0j]), np.array([3.0 + 0j, 4.0])) == 3.0

    def test_asymmetry(self):
        assert dist_asym(np.array([3.0 + 0j, 4.0]), np.array([0.0 + 0j])) == 4.0

    def test_self_distance(self):
        a = np.array([1j, 2 + 1j, 3.5])
        assert dist_asym(a, a) == 0.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            dist_asym(np.array([]), np.array([1j]))


class TestHausdorff:
    def test_two_singletons(self):
        assert hausdorff(np.array([0j]), np.array([1 + 0j])).d_h == 1.0

    def test_max_of_asymmetric(self):
        rep = hausdorff(np.array([0j]), np.array([3 + 0j, 4]))
        assert (rep.d_ab, rep.d_ba, rep.d_h) == (3.0, 4.0, 4.0)

    def test_subset_gives_one_sided(self):
        a = np.array([0j, 1.0])
        b = np.array([0j, 0.5, 1.0, 2.0])
        rep = hausdorff(a, b)
        assert rep.d_ab == 0.0 and rep.d_h == rep.d_ba == 1.0

    def test_witness_attains(self):
        rng = np.random.default_rng(0)
        a = rng.normal(size=50) + 1j * rng.normal(size=50)
        b = rng.normal(size=60) + 1j * rng.normal(size=60)
        rep = hausdorff(a, b)
        wa, wb = rep.witness
        assert abs(wa - wb) == rep.d_h

    @given(clouds, clouds)
    @settings(max_examples=50)
    def test_metric_axioms(self, a, b):
        rep = hausdorff(a, b)
        assert rep.d_h >= 0
        assert rep.d_h == hausdorff(b, a).d_h
        assert rep.d_h == max(rep.d_ab, rep.d_ba)

    @given(clouds, clouds, st.builds(complex, finite, finite))
    @settings(max_examples=50)
    def test_translation_invariance(self, a, b, shift):
        base = hausdorff(a, b).d_h
        moved = hausdorff(a + shift, b + shift).d_h
        assert moved == pytest.approx(base, rel=1e-9, abs=1e-9)

    @given(clouds, clouds, clouds)
    @settings(max_examples=30)
    def test_triangle_inequality(self, a, b, c):
        dab = hausdorff(a, b).d_h
        dbc = hausdorff(b, c).d_h
        dac = hausdorff(a, c).d_h
        assert dac <= dab + dbc + 1e-9


class TestAcceleratedPath:
    def test_tree_equals_brute_random(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            na, nb = rng.integers(1, 800, size=2)
            a = rng.normal(size=na) + 1j * rng.normal(size=na)
            b = rng.normal(size=nb) + 1j * rng.normal(size=nb)
            rb = hausdorff(a, b, method="brute")
            rt = hausdorff(a, b, method="tree")
            assert rb.d_h == rt.d_h  # bit-identical by shared scoring
            assert rb.d_ab == rt.d_ab and rb.d_ba == rt.d_ba

    def test_auto_dispatch_consistent(self):
        rng = np.random.default_rng(7)
        a = rng.normal(size=400) + 1j * rng.normal(size=400)
        b = rng.normal(size=400) + 1j * rng.normal(size=400)
        assert hausdorff(a, b, method="auto").d_h == hausdorff(a, b, method="brute").d_h

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            dist_asym(np.array([0j]), np.array([1j]), method="quantum")
