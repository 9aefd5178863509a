"""Matrix forms of de Casteljau subdivision with a complex parameter.

Builds the left/right subdivision matrices L(t), R(t), the binomial
eigenvector conjugacy S / S^-1, the diagonal/upper-triangular conjugates,
and the two homogeneous affine representations used as IFS generators
(type IV closed form, and type II via a control-point basis matrix P).

All constructions are generic in the scalar type of t: pass a ComplexD or
Dyadic for exact arithmetic, a Python complex/float for speed, or an
IBetaPoly to keep the whole matrix symbolic in i*beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from . import _linalg
from .exactnum import binom, bernstein

REP_TAGS = ("I", "II", "III", "IV")

# Row-vector reps multiply as x -> x.M, column-vector reps as v -> M.v;
# the homogeneous 1 sits in the last or the first slot.
ROW_ACTING = {"II", "III"}
HOMOGENEOUS_FIRST = {"III", "IV"}


@dataclass(frozen=True)
class SubdivisionMatrices:
    """The pair L(t), R(t) for a degree-n curve; (n+1)x(n+1), row-stochastic."""
    n: int
    t: object
    L: tuple
    R: tuple


@dataclass(frozen=True)
class ConjugacyS:
    """Binomial eigenvector matrix S and its exact integer inverse."""
    n: int
    S: tuple
    Sinv: tuple


@dataclass(frozen=True)
class AffineMapH:
    """An affine map stored as a homogeneous square matrix with a rep tag.

    The tag fixes which row/column carries the identity and therefore how
    the matrix acts (left vs right, homogeneous slot first vs last);
    applying a map with the wrong orientation is a checked error.
    """
    rep: str
    mat: tuple

    def __post_init__(self):
        if self.rep not in REP_TAGS:
            raise ValueError(f"unknown representation tag {self.rep!r}")

    @property
    def dim(self) -> int:
        """Ambient affine dimension (matrix is (dim+1) x (dim+1))."""
        return len(self.mat) - 1

    @property
    def row_acting(self) -> bool:
        return self.rep in ROW_ACTING

    @property
    def homogeneous_index(self) -> int:
        return 0 if self.rep in HOMOGENEOUS_FIRST else self.dim

    def linear_part(self) -> tuple:
        m, d = self.mat, self.dim
        if self.rep in ("I", "II"):
            return _linalg.freeze(row[:d] for row in m[:d])
        return _linalg.freeze(row[1:] for row in m[1:])

    def translation(self) -> tuple:
        m, d = self.mat, self.dim
        if self.rep == "I":
            return tuple(m[i][d] for i in range(d))
        if self.rep == "II":
            return tuple(m[d][:d])
        if self.rep == "III":
            return tuple(m[0][1:])
        return tuple(m[i][0] for i in range(1, d + 1))

    def apply(self, vec: Sequence) -> tuple:
        """Apply to one homogeneous vector (row or column per the tag)."""
        if len(vec) != self.dim + 1:
            raise ValueError("vector/matrix dimension mismatch")
        if self.row_acting:
            return _linalg.vec_mat(vec, self.mat)
        return _linalg.mat_vec(self.mat, vec)


def eval_point(controls: Sequence, t):
    """Evaluate the curve at t by the triangular de Casteljau recurrence."""
    if len(controls) == 0:
        raise ValueError("need at least one control point")
    level = list(controls)
    while len(level) > 1:
        level = [(1 - t) * a + t * b for a, b in zip(level, level[1:])]
    return level[0]


def subdivide(controls: Sequence, t) -> Tuple[tuple, tuple]:
    """Split at t into left/right control polygons.

    left_i = sum_{j<=i} B^i_j(t) p_j; right_i = sum_{j>=i} B^{n-i}_{n-j}(t) p_{i+n-j}.
    """
    n = len(controls) - 1
    if n < 1:
        raise ValueError("need at least two control points")
    left = tuple(_sum(bernstein(i, j, t) * controls[j] for j in range(i + 1))
                 for i in range(n + 1))
    right = tuple(_sum(bernstein(n - i, n - j, t) * controls[i + n - j]
                       for j in range(i, n + 1))
                  for i in range(n + 1))
    return left, right


def _sum(terms):
    terms = list(terms)
    acc = terms[0]
    for x in terms[1:]:
        acc = acc + x
    return acc


def build_LR(n: int, t) -> SubdivisionMatrices:
    """The subdivision matrices: L[i][j] = B^i_j(t), R[i][j] = B^{n-i}_{j-i}(t)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    L = _linalg.freeze([bernstein(i, j, t) if j <= i else 0 for j in range(n + 1)]
                       for i in range(n + 1))
    R = _linalg.freeze([bernstein(n - i, j - i, t) if j >= i else 0 for j in range(n + 1)]
                       for i in range(n + 1))
    return SubdivisionMatrices(n=n, t=t, L=L, R=R)


def conjugacy(n: int) -> ConjugacyS:
    """S_ij = binom(i,j) and its inverse Sinv_ij = (-1)^(i+j) binom(i,j)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    S = _linalg.freeze([binom(i, j) for j in range(n + 1)] for i in range(n + 1))
    Sinv = _linalg.freeze([(-1) ** (i + j) * binom(i, j) for j in range(n + 1)]
                          for i in range(n + 1))
    return ConjugacyS(n=n, S=S, Sinv=Sinv)


def triangular_forms(n: int, t) -> Tuple[tuple, tuple]:
    """Conjugate L and R by S: returns (Sinv L S, Sinv R S) as direct products.

    The first is diagonal with entries t^i, the second upper-triangular with
    entries binom(n-i, n-j) t^(j-i) (1-t)^i; see the closed-form builders.
    """
    lr = build_LR(n, t)
    c = conjugacy(n)
    D = _linalg.mat_mul(_linalg.mat_mul(c.Sinv, lr.L), c.S)
    T = _linalg.mat_mul(_linalg.mat_mul(c.Sinv, lr.R), c.S)
    return D, T


def diagonal_closed_form(n: int, t) -> tuple:
    """diag(1, t, ..., t^n): the closed form of Sinv L S."""
    return _linalg.freeze([t ** i if i == j else 0 for j in range(n + 1)]
                          for i in range(n + 1))


def upper_closed_form(n: int, t) -> tuple:
    """Entries binom(n-i, n-j) t^(j-i) (1-t)^i: the closed form of Sinv R S."""
    return _linalg.freeze(
        [binom(n - i, n - j) * t ** (j - i) * (1 - t) ** i if j >= i else 0
         for j in range(n + 1)]
        for i in range(n + 1))


def _close(a, b, tol: float) -> bool:
    if tol == 0:
        return a == b
    return abs(complex(a) - complex(b)) <= tol


def corollary_identities(n: int, t, tol: float = 0.0) -> bool:
    """Check the two recurrences tying T^(n) and T^(n+1) entrywise.

    T^(n)_{i+1,j+1} = (1-t) T^(n)_{i,j} - t T^(n)_{i+1,j} and
    T^(n+1)_{i+1,j+1} = (1-t) T^(n)_{i,j}, on the conjugates computed by
    direct matrix products.  tol=0 demands exact scalar equality.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    _, Tn = triangular_forms(n, t)
    _, Tn1 = triangular_forms(n + 1, t)
    one_minus_t = 1 - t
    for i in range(n):
        for j in range(n):
            lhs = Tn[i + 1][j + 1]
            rhs = one_minus_t * Tn[i][j] - t * Tn[i + 1][j]
            if not _close(lhs, rhs, tol):
                return False
    for i in range(n + 1):
        for j in range(n + 1):
            if not _close(Tn1[i + 1][j + 1], one_minus_t * Tn[i][j], tol):
                return False
    return True


def type_iv_ifs(n: int, t) -> Tuple[AffineMapH, AffineMapH]:
    """The computational IFS pair in type-IV form (transposed conjugates).

    M0 = diag(1, t, ..., t^n); M1 lower-triangular with
    M1_ij = binom(n-j, n-i) t^(i-j) (1-t)^j.  Both act on column vectors
    whose first entry is the homogeneous 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    M0 = _linalg.freeze([t ** i if i == j else 0 for j in range(n + 1)]
                        for i in range(n + 1))
    M1 = _linalg.freeze(
        [binom(n - j, n - i) * t ** (i - j) * (1 - t) ** j if j <= i else 0
         for j in range(n + 1)]
        for i in range(n + 1))
    return AffineMapH(rep="IV", mat=M0), AffineMapH(rep="IV", mat=M1)


def control_basis_matrix(controls: Sequence[complex]) -> tuple:
    """The change-of-basis matrix P built from a control-point column.

    First column holds the controls, the middle columns are the identity
    columns e_0 .. e_{n-2}, and the last column is all ones.  This choice
    makes det(P) proportional to the difference of the last two controls,
    matching the stated invertibility condition, and puts the fixed points
    of the resulting IFS on the first/last rows of P.
    """
    n = len(controls) - 1
    if n < 1:
        raise ValueError("need at least two control points")
    if complex(controls[-1]) == complex(controls[-2]):
        raise ValueError("last two control points must differ")
    rows = []
    for i in range(n + 1):
        row = [complex(controls[i])]
        row += [1.0 + 0j if i == j else 0j for j in range(n - 1)]
        row.append(1.0 + 0j)
        rows.append(row)
    return _linalg.freeze(rows)


def build_ifs_from_controls(controls: Sequence[complex], t) -> Tuple[AffineMapH, AffineMapH]:
    """Conjugate L, R by the control basis P: the type-II pair P^-1 L P, P^-1 R P.

    Computed in double-precision complex (P^-1 via partial-pivoting
    elimination with a 1e-12 pivot threshold).
    """
    n = len(controls) - 1
    P = control_basis_matrix(controls)
    Pinv = _linalg.inv_complex(P)
    lr = build_LR(n, complex(t))
    M0 = _linalg.mat_mul(_linalg.mat_mul(Pinv, lr.L), P)
    M1 = _linalg.mat_mul(_linalg.mat_mul(Pinv, lr.R), P)
    return AffineMapH(rep="II", mat=M0), AffineMapH(rep="II", mat=M1)
