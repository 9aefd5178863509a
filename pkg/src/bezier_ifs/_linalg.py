"""Small dense-matrix helpers, generic over the scalar ring.

Matrices are tuples of tuples.  The same routines run on exact scalars
(int, Dyadic, ComplexD, IBetaPoly) and on Python floats/complex; only
`inv_complex` is tied to double precision.
"""

from __future__ import annotations

from typing import Sequence


def freeze(rows) -> tuple:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> tuple:
    return freeze([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_mul(a, b) -> tuple:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append(tuple(_dot(row, col) for col in bt))
    return tuple(out)


def mat_vec(a, v) -> tuple:
    return tuple(_dot(row, v) for row in a)


def vec_mat(v, a) -> tuple:
    return tuple(_dot(v, col) for col in zip(*a))


def _dot(xs, ys):
    it = [x * y for x, y in zip(xs, ys)]
    acc = it[0]
    for term in it[1:]:
        acc = acc + term
    return acc


def transpose(a) -> tuple:
    return freeze(zip(*a))


def to_complex(a) -> tuple:
    return freeze([[complex(x) for x in row] for row in a])


def inv_complex(a: Sequence[Sequence[complex]], pivot_tol: float = 1e-12) -> tuple:
    """Invert a complex matrix by Gauss-Jordan with partial pivoting.

    Raises ValueError when a pivot falls below pivot_tol (singular input).
    """
    n = len(a)
    aug = [[complex(x) for x in row] + [1.0 + 0j if i == j else 0j for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if abs(aug[piv][col]) < pivot_tol:
            raise ValueError(f"singular matrix: pivot {abs(aug[piv][col]):.3e} below {pivot_tol}")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1.0 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return freeze(row[n:] for row in aug)
