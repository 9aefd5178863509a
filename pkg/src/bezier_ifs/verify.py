"""Exact-arithmetic check suites behind the `verify` CLI command.

Each suite re-derives one of the matrix or orbit identities at a
configurable size and reports machine-readable pass/fail results.  The
`perturb` hook on the matrix suites corrupts one entry before comparison,
as a negative control that the checks can actually fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import decasteljau
from .exactnum import ComplexD, Dyadic, binom
from .ifs import overlap_point
from .orbits import iter_orbit_states, z_poly_via_matrices
from .takagi import takagi, tak1_increment


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f" ({self.detail})" if self.detail else "")


def random_dyadic_t(rng: random.Random, max_exp: int = 8) -> ComplexD:
    """A random exact complex parameter with dyadic re/im in [-1, 1]."""
    def part():
        e = rng.randint(1, max_exp)
        return Dyadic(rng.randint(-(1 << e), 1 << e), e)
    return ComplexD(part(), part())


def _perturb(mat: tuple, where: Optional[Tuple[int, int]]):
    if where is None:
        return mat
    i, j = where
    if max(where) >= len(mat):
        return mat
    rows = [list(r) for r in mat]
    rows[i][j] = rows[i][j] + Dyadic(1, 30)
    return tuple(tuple(r) for r in rows)


def lemma2_suite(n_max: int = 8, num_t: int = 50, seed: int = 7,
                 perturb: Optional[Tuple[int, int]] = None) -> List[CheckResult]:
    """Sinv L S = diag(t^i) and Sinv R S = the closed upper-triangular form."""
    rng = random.Random(seed)
    ts = [random_dyadic_t(rng) for _ in range(num_t)]
    results = []
    for n in range(n_max + 1):
        ok = True
        for t in ts:
            D, T = decasteljau.triangular_forms(n, t)
            T = _perturb(T, perturb)
            if D != decasteljau.diagonal_closed_form(n, t):
                ok = False
                break
            if T != decasteljau.upper_closed_form(n, t):
                ok = False
                break
        results.append(CheckResult(f"lemma2.triangularization.n={n}", ok,
                                   f"{num_t} dyadic t, exact"))
    return results


def corollary_suite(n_max: int = 6, num_exact_t: int = 10, num_float_t: int = 20,
                    seed: int = 11) -> List[CheckResult]:
    """The two entrywise recurrences between T^(n) and T^(n+1)."""
    rng = random.Random(seed)
    results = []
    for n in range(1, n_max + 1):
        ok = all(decasteljau.corollary_identities(n, random_dyadic_t(rng))
                 for _ in range(num_exact_t))
        results.append(CheckResult(f"corollary.exact.n={n}", ok, "dyadic t"))
    ok = True
    for _ in range(num_float_t):
        t = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        for n in range(1, min(n_max, 4) + 1):
            if not decasteljau.corollary_identities(n, t, tol=1e-11):
                ok = False
    results.append(CheckResult("corollary.float", ok, f"{num_float_t} complex t, 1e-11"))
    return results


def theorem3_suite(n_max: int = 8, num_t: int = 10, seed: int = 13) -> List[CheckResult]:
    """Fixed points (1, 0^n) and (binom(n,i))_i, and the overlap identity."""
    rng = random.Random(seed)
    results = []
    for n in range(1, n_max + 1):
        ok = True
        for _ in range(num_t):
            t = random_dyadic_t(rng)
            M0, M1 = decasteljau.type_iv_ifs(n, t)
            z0 = tuple(1 if i == 0 else 0 for i in range(n + 1))
            z1 = tuple(binom(n, i) for i in range(n + 1))
            if tuple(M0.apply(z0)) != z0 or tuple(M1.apply(z1)) != z1:
                ok = False
            try:
                overlap_point(n, t)
            except ArithmeticError:
                ok = False
        results.append(CheckResult(f"theorem3.witnesses.n={n}", ok,
                                   f"{num_t} dyadic t, exact"))
    return results


def lemma3_suite(word_len: int = 10) -> List[CheckResult]:
    """z_poly recursion against the matrix word-product oracle, all words."""
    ok = True
    for state in iter_orbit_states(word_len):
        if state.n == word_len and state.Z != z_poly_via_matrices(state.d, word_len):
            ok = False
            break
    return [CheckResult(f"lemma3.recursion_vs_matrices.len={word_len}", ok,
                        f"all {2 ** word_len} words, exact")]


def lemma4_suite(word_len: int = 12, num_random: int = 200, random_len: int = 24,
                 seed: int = 17) -> List[CheckResult]:
    """Coefficient bound |a_{k,n}| < 2^(k+1), exhaustive plus random words."""
    ok = all(abs(c) < Dyadic(1, -(k + 1))
             for state in iter_orbit_states(word_len)
             for k, c in enumerate(state.Z.coeffs))
    results = [CheckResult(f"lemma4.bound.exhaustive.len<={word_len}", ok)]
    rng = random.Random(seed)
    ok = True
    for _ in range(num_random):
        from .orbits import z_poly
        word = tuple(rng.randint(0, 1) for _ in range(random_len))
        Z = z_poly(word, random_len)
        if not all(abs(c) < Dyadic(1, -(k + 1)) for k, c in enumerate(Z.coeffs)):
            ok = False
    results.append(CheckResult(f"lemma4.bound.random.len={random_len}", ok,
                               f"{num_random} words"))
    return results


def lemma5_suite(max_m: int = 12) -> List[CheckResult]:
    """Increment identity T(r_n + 2^-m) - T(r_n) = (m - 2 u_n)/2^m, exhaustive."""
    ok = True
    for n in range(0, max_m + 1):
        for bits in range(1 << n):
            d = tuple((bits >> (n - 1 - i)) & 1 for i in range(n))
            for m in range(n, max_m + 1):
                try:
                    tak1_increment(d, n, m)
                except ArithmeticError:
                    ok = False
    return [CheckResult(f"lemma5.increment.m<={max_m}", ok, "exhaustive, exact")]


def lemma6_suite(word_len: int = 12) -> List[CheckResult]:
    """a_{1,n} = 2 T(a_{0,n}) exactly over all words up to word_len."""
    ok = all(state.Z.coeff(1) == 2 * takagi(state.r)
             for state in iter_orbit_states(word_len))
    return [CheckResult(f"lemma6.takagi_slope.len<={word_len}", ok,
                        f"all words, exact")]


def run_all(n_max: int = 8, word_len: int = 10) -> List[CheckResult]:
    results = []
    results += lemma2_suite(n_max=n_max)
    results += corollary_suite(n_max=min(n_max, 6))
    results += theorem3_suite(n_max=n_max)
    results += lemma3_suite(word_len=word_len)
    results += lemma4_suite(word_len=min(word_len, 12))
    results += lemma5_suite(max_m=min(word_len, 12))
    results += lemma6_suite(word_len=min(word_len, 12))
    return results
