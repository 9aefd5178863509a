"""Symbolic binary addresses and the exact orbit polynomial calculus.

A digit word d selects which of the two scalar maps f0(z) = t z,
f1(z) = (1 - t) z + t is applied at each step (in reversed order), with
t = 1/2 + i*beta.  The image of 0 is a polynomial Z_n in (i*beta) whose
Dyadic coefficients are computed here by the exact single-step recursion;
an independent matrix-product oracle is provided alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Tuple, Union

from . import _linalg
from .exactnum import Dyadic, IBetaPoly, binom
from .takagi import takagi


class _AllOnes:
    """Sentinel for the distinguished address (1, 1, 1, ...) mapping to 1."""

    def __repr__(self):
        return "ALL_ONES"


ALL_ONES = _AllOnes()

DigitSeq = Union[Sequence[int], _AllOnes]


def _validate(d: Sequence[int]) -> Tuple[int, ...]:
    bits = tuple(int(b) for b in d)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("digits must be 0 or 1")
    return bits


def pi(d: DigitSeq) -> Dyadic:
    """x = sum_k d_k / 2^k; the all-ones address maps to 1."""
    if isinstance(d, _AllOnes):
        return Dyadic(1)
    bits = _validate(d)
    n = len(bits)
    return Dyadic(sum(b << (n - k - 1) for k, b in enumerate(bits)), n)


def pi_inverse(x: Union[float, int, Dyadic, Fraction], n: int) -> Tuple[int, ...]:
    """First n binary digits of x in [0, 1], eventually-zeros convention.

    Exact for Dyadic/Fraction/float inputs (floats are binary rationals);
    x = 1 yields the truncated all-ones word.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if isinstance(x, Dyadic):
        y = Fraction(x.num, 1 << x.exp)
    else:
        y = Fraction(x)
    if not 0 <= y <= 1:
        raise ValueError("argument must lie in [0, 1]")
    if y == 1:
        return (1,) * n
    bits = []
    for _ in range(n):
        y *= 2
        b = 1 if y >= 1 else 0
        y -= b
        bits.append(b)
    return tuple(bits)


def reverse_prefix(d: DigitSeq, n: int) -> Tuple[int, ...]:
    """(d_n, d_{n-1}, ..., d_1), padding missing digits with zeros."""
    if n < 1:
        raise ValueError("need n >= 1")
    bits = _digits_prefix(d, n)
    return bits[::-1]


def _digits_prefix(d: DigitSeq, n: int) -> Tuple[int, ...]:
    if isinstance(d, _AllOnes):
        return (1,) * n
    bits = _validate(d)
    if len(bits) < n:
        bits = bits + (0,) * (n - len(bits))
    return bits[:n]


@dataclass(frozen=True)
class OrbitState:
    """Running orbit data after n digits: Z polynomial, ones count, prefix value."""
    d: Tuple[int, ...]
    n: int
    Z: IBetaPoly
    u: int
    r: Dyadic


def initial_state() -> OrbitState:
    return OrbitState(d=(), n=0, Z=IBetaPoly(), u=0, r=Dyadic(0))


def w_poly(n: int, u: int) -> IBetaPoly:
    """The exact step polynomial W_n = (1/2 - i b)^u (1/2 + i b)^(n - u + 1).

    Coefficient of (i*beta)^m is (1 / 2^(n+1-m)) * sum_k (-1)^k
    binom(u, k) binom(n+1-u, m-k); the i^m factor is absorbed by the
    (i*beta)^m basis so all stored coefficients are real dyadics.
    """
    coeffs = []
    for m in range(n + 2):
        s = sum((-1) ** k * binom(u, k) * binom(n + 1 - u, m - k)
                for k in range(m + 1))
        coeffs.append(Dyadic(s, n + 1 - m))
    return IBetaPoly(coeffs)


def z_step(state: OrbitState, next_digit: int) -> OrbitState:
    """One step of the orbit recursion: Z stays (digit 0) or gains W_n (digit 1)."""
    if next_digit not in (0, 1):
        raise ValueError("digit must be 0 or 1")
    n, u = state.n, state.u
    if next_digit:
        Z = state.Z + w_poly(n, u)
        r = state.r + Dyadic(1, n + 1)
    else:
        Z = state.Z
        r = state.r
    return OrbitState(d=state.d + (next_digit,), n=n + 1, Z=Z,
                      u=u + next_digit, r=r)


def orbit_state(d: DigitSeq, n: int) -> OrbitState:
    state = initial_state()
    for b in _digits_prefix(d, n):
        state = z_step(state, b)
    return state


def z_poly(d: DigitSeq, n: int) -> IBetaPoly:
    """Z_n for the word's first n digits, by the exact step recursion."""
    return orbit_state(d, n).Z


def scalar_ifs_polys() -> Tuple[IBetaPoly, IBetaPoly]:
    """(t, 1 - t) with t = 1/2 + i*beta, as exact polynomials."""
    t = IBetaPoly.t_half_plus_ibeta()
    return t, 1 - t


def scalar_matrices() -> Tuple[tuple, tuple]:
    """Type-I homogeneous 2x2 matrices of the two scalar maps, over IBetaPoly."""
    t, omt = scalar_ifs_polys()
    zero, one = IBetaPoly(), IBetaPoly([1])
    M0 = _linalg.freeze([[t, zero], [zero, one]])
    M1 = _linalg.freeze([[omt, t], [zero, one]])
    return M0, M1


def z_poly_via_matrices(d: DigitSeq, n: int) -> IBetaPoly:
    """Independent oracle: the matrix word product applied to the origin.

    Computes M^(d1) ... M^(dn) (1, 0) right-to-left as exact 2x2
    polynomial mat-vecs; must agree with z_poly exactly.
    """
    M = scalar_matrices()
    v = (IBetaPoly(), IBetaPoly([1]))
    for b in reversed(_digits_prefix(d, n)):
        v = _linalg.mat_vec(M[b], v)
    return v[0]


def iter_orbit_states(max_len: int) -> Iterator[OrbitState]:
    """All orbit states for every word of length 1..max_len (depth-first)."""
    stack = [initial_state()]
    while stack:
        state = stack.pop()
        if state.n > 0:
            yield state
        if state.n < max_len:
            stack.append(z_step(state, 0))
            stack.append(z_step(state, 1))


def a_coeff(d: DigitSeq, k: int, n: int) -> Dyadic:
    """Coefficient of (i*beta)^k in Z_n; a_0 = r_n and |a_k| < 2^(k+1)."""
    if k < 0 or n < 0:
        raise ValueError("need k >= 0 and n >= 0")
    return z_poly(d, n).coeff(k)


def a_coeff_tail_bound(k: int, n: int, terms: int = 200) -> float:
    """Numeric tail bound on |a_k - a_{k,n}|: 2^k sum_{j>=n} binom(j+1,k)/2^(j+1)."""
    return (2.0 ** k) * sum(binom(j + 1, k) / 2.0 ** (j + 1)
                            for j in range(n, n + terms))


def vector_field_v(alpha: Union[float, Dyadic], n: int) -> complex:
    """Order-n approximation of the normal field v(alpha) = 2i T(alpha)."""
    if isinstance(alpha, Dyadic):
        if alpha < 0 or alpha > 1:
            raise ValueError("alpha must lie in [0, 1]")
    elif not 0.0 <= float(alpha) <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    d = pi_inverse(alpha, n)
    return 1j * float(a_coeff(d, 1, n))


def a_k_samples(k: int, grid: int, n: int) -> list:
    """Exact samples (alpha, a_{k,n}(alpha)) on the dyadic grid j / 2^grid."""
    if k < 0 or grid < 1:
        raise ValueError("need k >= 0 and grid >= 1")
    out = []
    for j in range(2 ** grid + 1):
        alpha = Dyadic(j, grid)
        d = pi_inverse(alpha, n)
        out.append((float(alpha), a_coeff(d, k, n)))
    return out


def vector_field_vm(x: Union[float, Dyadic, Fraction], m: int, n: int) -> complex:
    """One vector-field component for the degree-m system: 2 m i T(x/m).

    Computed as the order-n approximation through the scalar first-component
    maps x -> t x and x -> (1 - t) x + m t.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if isinstance(x, Dyadic):
        xf = Fraction(x.num, 1 << x.exp)
    else:
        xf = Fraction(x)
    if not 0 <= xf <= m:
        raise ValueError(f"argument must lie in [0, {m}]")
    d = pi_inverse(xf / m, n)
    t, omt = scalar_ifs_polys()
    z = IBetaPoly()
    for b in reversed(d):
        z = omt * z + m * t if b else t * z
    return 1j * float(z.coeff(1))
