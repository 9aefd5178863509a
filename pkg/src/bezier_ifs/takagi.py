"""Takagi (blancmange) function: truncated double evaluation and exact
dyadic evaluation, plus the exact dyadic increment identity.

For a dyadic argument k/2^e the series terminates after e terms, so the
Dyadic path is exact; the float path truncates with tail bound 2^-depth.
"""

from __future__ import annotations

from typing import Sequence, Union

from .exactnum import Dyadic

DEFAULT_DEPTH = 52


def sigma(x: Union[float, Dyadic]) -> Union[float, Dyadic]:
    """Distance from x to the nearest integer, in [0, 1/2]."""
    if isinstance(x, Dyadic):
        f = x.frac()
        g = 1 - f
        return f if f <= g else g
    f = float(x) % 1.0
    return min(f, 1.0 - f)


def takagi(x: Union[float, Dyadic], depth: int = DEFAULT_DEPTH) -> Union[float, Dyadic]:
    """T(x) = sum_n sigma(2^n x) / 2^n on [0, 1].

    Exact (terminating series) for Dyadic x; truncated after `depth` terms
    for floats, with truncation error at most 2^-depth.
    """
    if isinstance(x, Dyadic):
        if x < 0 or x > 1:
            raise ValueError("takagi argument must lie in [0, 1]")
        total = Dyadic(0)
        for n in range(x.exp):
            total = total + sigma(x.scale2(n)).scale2(-n)
        return total
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError("takagi argument must lie in [0, 1]")
    if depth < 1:
        raise ValueError("need depth >= 1 for non-dyadic evaluation")
    total = 0.0
    y = x
    for n in range(depth):
        total += sigma(y) / (1 << n)
        y = (2.0 * y) % 1.0
    return total


def tak1_increment(d: Sequence[int], n: int, m: int) -> Dyadic:
    """Exact increment T(r_n + 2^-m) - T(r_n) = (m - 2 u_n) / 2^m.

    Evaluates both sides independently (terminating series vs. the digit
    statistics r_n, u_n) and insists on exact equality.
    """
    if not 0 <= n <= m:
        raise ValueError("need m >= n >= 0")
    bits = [int(b) for b in d[:n]]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("digits must be 0 or 1")
    bits += [0] * (n - len(bits))
    r_n = Dyadic(sum(b << (n - k - 1) for k, b in enumerate(bits)), n)
    u_n = sum(bits)
    lhs = takagi(r_n + Dyadic(1, m)) - takagi(r_n)
    rhs = Dyadic(m - 2 * u_n, m)
    if lhs != rhs:
        raise ArithmeticError(
            f"increment identity failed at n={n}, m={m}: {lhs!r} != {rhs!r}")
    return rhs
