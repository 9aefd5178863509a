"""Exact dyadic-rational, complex-dyadic, and (i*beta)-polynomial arithmetic.

Everything here is exact: values are integers scaled by powers of two, so
the matrix and orbit identities checked elsewhere hold with zero rounding
error.  Floating point enters only on explicit conversion.
"""

from __future__ import annotations

import math
from typing import Iterable, Union


def binom(n: int, k: int) -> int:
    """Generalized binomial coefficient over all integer pairs.

    Follows the usual conventions: 0 for k < 0; for negative upper index,
    binom(n, k) = (-1)^k * binom(k - n - 1, k).  With these, the addition
    formula binom(n, k) = binom(n-1, k) + binom(n-1, k-1) holds on all of
    Z x Z, and binom(0, i - j) is the Kronecker delta.
    """
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        return math.comb(n, k)
    return (-1 if k & 1 else 1) * math.comb(k - n - 1, k)


def _trailing_zeros(n: int) -> int:
    return (n & -n).bit_length() - 1


class Dyadic:
    """Exact rational with power-of-two denominator: num / 2**exp.

    Canonical form keeps gcd(num, 2**exp) == 1 and exp >= 0, so equality
    is structural.  Closed under +, -, *; division is available only by
    powers of two (scale2).
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        elif exp > 0:
            k = min(_trailing_zeros(num), exp)
            if k:
                num >>= k
                exp -= k
        self.num = num
        self.exp = exp

    @property
    def denominator(self) -> int:
        return 1 << self.exp

    def is_integer(self) -> bool:
        return self.exp == 0

    def scale2(self, k: int) -> "Dyadic":
        """Return self * 2**k (exact for any integer k)."""
        return Dyadic(self.num, self.exp - k)

    def floor(self) -> int:
        return self.num >> self.exp

    def frac(self) -> "Dyadic":
        """Fractional part, in [0, 1)."""
        return self - self.floor()

    @staticmethod
    def _coerce(other) -> "Dyadic":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) + (o.num << (e - o.exp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) - (o.num << (e - o.exp)), e)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dyadic(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return Dyadic(self.num ** k, self.exp * k)

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def _cmp_key(self, other: "Dyadic"):
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.exp == o.exp

    def __lt__(self, other):
        a, b = self._cmp_key(self._coerce(other))
        return a < b

    def __le__(self, other):
        a, b = self._cmp_key(self._coerce(other))
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_key(self._coerce(other))
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_key(self._coerce(other))
        return a >= b

    def __hash__(self):
        return hash((self.num, self.exp))

    def __bool__(self):
        return self.num != 0

    def __float__(self):
        return self.num / (1 << self.exp)

    def __repr__(self):
        if self.exp == 0:
            return f"Dyadic({self.num})"
        return f"Dyadic({self.num}, {self.exp})"


DyadicLike = Union[Dyadic, int]


class ComplexD:
    """Complex number with exact Dyadic real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: DyadicLike = 0, im: DyadicLike = 0):
        self.re = re if isinstance(re, Dyadic) else Dyadic(re)
        self.im = im if isinstance(im, Dyadic) else Dyadic(im)

    @staticmethod
    def _coerce(other) -> "ComplexD":
        if isinstance(other, ComplexD):
            return other
        if isinstance(other, (Dyadic, int)):
            return ComplexD(other)
        return NotImplemented

    def conjugate(self) -> "ComplexD":
        return ComplexD(self.re, -self.im)

    def scale2(self, k: int) -> "ComplexD":
        return ComplexD(self.re.scale2(k), self.im.scale2(k))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexD(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexD(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexD(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ComplexD(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return ComplexD(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexD({self.re!r}, {self.im!r})"


class IBetaPoly:
    """Polynomial in (i*beta) with Dyadic coefficients.

    coeff k is the coefficient of (i*beta)**k, so evaluation at real beta
    collects even powers into the real part and odd powers into the
    imaginary part (with the alternating sign from i**k).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[DyadicLike] = ()):
        cs = [c if isinstance(c, Dyadic) else Dyadic(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t_half_plus_ibeta(cls) -> "IBetaPoly":
        """The subdivision parameter t = 1/2 + i*beta as a polynomial."""
        return cls([Dyadic(1, 1), Dyadic(1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Dyadic:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Dyadic(0)

    @property
    def constant(self) -> Dyadic:
        return self.coeff(0)

    @staticmethod
    def _coerce(other) -> "IBetaPoly":
        if isinstance(other, IBetaPoly):
            return other
        if isinstance(other, (Dyadic, int)):
            return IBetaPoly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IBetaPoly([self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IBetaPoly([self.coeff(k) - o.coeff(k) for k in range(n)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IBetaPoly()
        out = [Dyadic(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return IBetaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = IBetaPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __neg__(self):
        return IBetaPoly([-c for c in self.coeffs])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def eval_at(self, beta: float) -> complex:
        """Evaluate at a real beta in floating point."""
        z = 0j
        ib = 1j * beta
        for c in reversed(self.coeffs):
            z = z * ib + float(c)
        return z

    def eval_exact(self, beta: DyadicLike) -> ComplexD:
        """Evaluate at a dyadic beta with exact arithmetic."""
        b = beta if isinstance(beta, Dyadic) else Dyadic(beta)
        ib = ComplexD(0, b)
        z = ComplexD(0)
        for c in reversed(self.coeffs):
            z = z * ib + ComplexD(c)
        return z

    def __repr__(self):
        return f"IBetaPoly({list(self.coeffs)!r})"


def bernstein(n: int, j: int, t):
    """Bernstein basis polynomial B^n_j(t) = binom(n,j) t^j (1-t)^(n-j).

    Generic in the scalar type of t: works for float/complex as well as
    the exact Dyadic / ComplexD / IBetaPoly types.
    """
    if not 0 <= j <= n:
        raise ValueError(f"bernstein index out of range: j={j}, n={n}")
    return binom(n, j) * t ** j * (1 - t) ** (n - j)


def ipoly_mul_affine(p: IBetaPoly, scale, shift) -> IBetaPoly:
    """Apply z -> scale*z + shift in the (i*beta)-polynomial ring."""
    return p * scale + shift
