"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest -v tests/test_acceptance.py` (add -s to see the lines on
passing runs).  Criteria with runtime budgets assert them.
"""

import random
import time

import numpy as np
import pytest

from bezier_ifs import verify
from bezier_ifs.decasteljau import build_ifs_from_controls
from bezier_ifs.exactnum import Dyadic
from bezier_ifs.ifs import IfsPair, iterate_attractor
from bezier_ifs.metrics import hausdorff
from bezier_ifs.orbits import vector_field_vm, z_poly
from bezier_ifs.scaling import (convergence_sweep, degree_m_first_component,
                                scaled_attractor, takagi_graph)
from bezier_ifs.takagi import takagi


def report(num, name, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_lemma2_exactness():
    t0 = time.time()
    results = verify.lemma2_suite(n_max=8, num_t=50)
    elapsed = time.time() - t0
    ok = all(r.ok for r in results) and elapsed < 5.0
    report(1, "triangularization exact for n<=8, 50 dyadic t", ok,
           f"{elapsed:.2f}s < 5s")


def test_criterion_02_corollary_identities():
    results = verify.corollary_suite(n_max=6, num_float_t=20)
    report(2, "corollary recurrences exact n<=6 and 1e-11 for 20 complex t",
           all(r.ok for r in results))


def test_criterion_03_theorem3_witnesses():
    results = verify.theorem3_suite(n_max=8)
    report(3, "fixed points and overlap identity exact for n<=8",
           all(r.ok for r in results))


def test_criterion_04_lemma3_brute_force():
    t0 = time.time()
    results = verify.lemma3_suite(word_len=12)
    elapsed = time.time() - t0
    ok = all(r.ok for r in results) and elapsed < 30.0
    report(4, "recursion equals matrix word products, all 2^12 words", ok,
           f"{elapsed:.2f}s < 30s")


def test_criterion_05_lemma4_bound():
    results = verify.lemma4_suite(word_len=12, num_random=1000, random_len=24)
    report(5, "coefficient bound |a_k| < 2^(k+1), exhaustive + 10^3 random",
           all(r.ok for r in results))


def test_criterion_06_lemma5_increment():
    results = verify.lemma5_suite(max_m=12)
    report(6, "Takagi increment identity exact for n <= m <= 12",
           all(r.ok for r in results))


def test_criterion_07_lemma6_slope():
    results = verify.lemma6_suite(word_len=12)
    report(7, "a_1 = 2 T(a_0) exact over all words length <= 12",
           all(r.ok for r in results))


def test_criterion_08_takagi_convergence():
    betas = [0.25, 0.125, 0.0625, 0.03125]
    per_beta = []
    rows = []
    for beta in betas:
        t0 = time.time()
        row = convergence_sweep([beta], depth=15, grid=12, budget=1 << 20)[0]
        per_beta.append(time.time() - t0)
        rows.append(row)
    bounded = all(r.passed for r in rows)
    decreasing = all(a.d_h > b.d_h for a, b in zip(rows, rows[1:]))
    timed = all(dt < 60.0 for dt in per_beta)
    ok = bounded and decreasing and timed
    report(8, "d_H within envelope+allowance and strictly decreasing in beta",
           ok, f"d_H={['%.4f' % r.d_h for r in rows]}, "
               f"max {max(per_beta):.1f}s/beta < 60s")


def test_criterion_09_hausdorff_oracle():
    rng = np.random.default_rng(2024)
    ok = True
    for _ in range(100):
        na, nb = rng.integers(1, 2001, size=2)
        a = rng.normal(size=na) + 1j * rng.normal(size=na)
        b = rng.normal(size=nb) + 1j * rng.normal(size=nb)
        brute = hausdorff(a, b, method="brute")
        tree = hausdorff(a, b, method="tree")
        if (brute.d_h != tree.d_h or brute.d_ab != tree.d_ab
                or brute.d_ba != tree.d_ba):
            ok = False
            break
    report(9, "accelerated Hausdorff equals brute force on 100 random pairs", ok)


def test_criterion_10_figure_smoke():
    # Fig 1: quadratic P-form system.
    f0, f1 = build_ifs_from_controls([-1 + 1j, 1j, 2 + 1j], 0.4 - 0.55j)
    cloud1 = iterate_attractor(IfsPair(f0=f0, f1=f1, t=0.4 - 0.55j), None, 20,
                               budget=1 << 18)
    fig1_ok = all(np.abs(cloud1.points - fp).min() < 2 ** -40
                  for fp in (-1 + 1j, 2 + 1j))
    # Fig 4: degree-6 controls at four parameter values.
    controls6 = [-2, -1 + 1j, 2j, 1 + 1j, 1, 2 + 1j, 3 + 1j]
    fig4_ok = True
    for t in (0.1 + 0.3j, 0.4 + 0.4j, 0.5 + 0.25j, 0.5 + 0.5j):
        g0, g1 = build_ifs_from_controls(controls6, t)
        cloud = iterate_attractor(IfsPair(f0=g0, f1=g1, t=t), None, 12,
                                  budget=1 << 16)
        if not (np.abs(cloud.points - (-2)).min() < 2 ** -40
                and np.abs(cloud.points - (3 + 1j)).min() < 2 ** -40):
            fig4_ok = False
    # d_H ordering of the scaled two-point clouds.
    graph = takagi_graph(12)
    d_quarter = hausdorff(scaled_attractor(0.25, 15, 1 << 20), graph).d_h
    d_eighth = hausdorff(scaled_attractor(0.125, 15, 1 << 20), graph).d_h
    order_ok = d_quarter > d_eighth
    report(10, "figure configs render with fixed points present, d_H ordered",
           fig1_ok and fig4_ok and order_ok,
           f"d_H(1/4)={d_quarter:.4f} > d_H(1/8)={d_eighth:.4f}")


def test_criterion_11_degree_m_consistency():
    rng = random.Random(99)
    ok = True
    for m in range(1, 5):
        for n in range(1, 11):
            for _ in range(20):
                word = tuple(rng.randint(0, 1) for _ in range(n))
                if degree_m_first_component(m, word, n) != m * z_poly(word, n):
                    ok = False
    # v_m samples: x = m*j/2^8 so x/m = j/2^8 is dyadic and order 8 is exact
    # for j < 256.  The right endpoint x/m = 1 is the distinguished all-ones
    # address, so finite order only approaches 2m*T(1) = 0; check the
    # truncation value 2m*T(1 - 2^-n) there instead.
    from fractions import Fraction
    for m in range(1, 5):
        for j in range(0, 256):
            x = Fraction(m * j, 256)
            want = 2 * m * float(takagi(Dyadic(j, 8)))
            if vector_field_vm(x, m, 8) != 1j * want:
                ok = False
        endpoint = 2 * m * float(takagi(Dyadic(255, 8)))
        if vector_field_vm(m, m, 8) != 1j * endpoint:
            ok = False
    report(11, "degree-m first component = m*z_poly; v_m = 2mi T(x/m) on grid", ok)
