"""Hyperbolic IFS engine: gating, fixed points, set iteration, word products.

The attractor approximation is deterministic set iteration of
F(A) = f0(A) u f1(A) on snapped point sets; a chaos-game sampler is kept
only as a cross-check.  Numeric work runs on numpy complex arrays; the
symbolic/exact paths (word_map, overlap_point) stay in the generic
tuple-matrix representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import _linalg
from .decasteljau import AffineMapH, type_iv_ifs
from .exactnum import binom, ComplexD, Dyadic, IBetaPoly

SNAP_BITS = 40
DEFAULT_BUDGET = 1 << 22
WORD_BUDGET_CAP = 1 << 18


class ResourceLimitError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its word budget."""


@dataclass(frozen=True)
class IfsPair:
    """Two affine maps sharing dimension and representation tag."""
    f0: AffineMapH
    f1: AffineMapH
    t: complex

    def __post_init__(self):
        if self.f0.rep != self.f1.rep:
            raise ValueError("maps must share a representation tag")
        if self.f0.dim != self.f1.dim:
            raise ValueError("maps must share a dimension")

    @property
    def dim(self) -> int:
        return self.f0.dim


@dataclass
class PointCloud:
    """Finite set of complex points (already projected), plus provenance."""
    points: np.ndarray
    generation: int = 0
    subsampled: bool = False

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=complex).ravel()
        if self.points.size == 0:
            raise ValueError("point cloud must be non-empty")

    def __len__(self) -> int:
        return self.points.size


def is_hyperbolic(t: complex) -> bool:
    """True iff both contraction factors are strictly below 1."""
    t = complex(t)
    return abs(t) < 1.0 and abs(1 - t) < 1.0


def joint_spectral_radius(t: complex) -> float:
    """Joint spectral radius of the de Casteljau pair: max(|t|, |1-t|)."""
    t = complex(t)
    return max(abs(t), abs(1 - t))


def jsr_empirical(M0: AffineMapH, M1: AffineMapH, maxlen: int) -> float:
    """max over words w, |w| <= maxlen, of rho(A_w)^(1/|w|) on the linear parts."""
    if maxlen < 1:
        raise ValueError("need maxlen >= 1")
    if M0.dim != M1.dim:
        raise ValueError("maps must share a dimension")
    if 2 ** (maxlen + 1) > WORD_BUDGET_CAP:
        raise ResourceLimitError(
            f"2^{maxlen + 1} matrix products exceed the {WORD_BUDGET_CAP}-word cap")
    mats = (np.array(_linalg.to_complex(M0.linear_part())),
            np.array(_linalg.to_complex(M1.linear_part())))
    best = 0.0
    stack = [(mats[0], 1), (mats[1], 1)]
    while stack:
        prod, length = stack.pop()
        rho = float(np.abs(np.linalg.eigvals(prod)).max())
        best = max(best, rho ** (1.0 / length))
        if length < maxlen:
            stack.append((prod @ mats[0], length + 1))
            stack.append((prod @ mats[1], length + 1))
    return best


def _linear_numeric(f: AffineMapH) -> Tuple[np.ndarray, np.ndarray]:
    A = np.array(_linalg.to_complex(f.linear_part()))
    b = np.array([complex(x) for x in f.translation()])
    return A, b


def fixed_point(f: AffineMapH) -> np.ndarray:
    """Unique fixed point of a contraction, in homogeneous coordinates."""
    A, b = _linear_numeric(f)
    rho = float(np.abs(np.linalg.eigvals(A)).max())
    if rho >= 1.0:
        raise ValueError(f"map is not a contraction (spectral radius {rho:.6f})")
    if f.row_acting:
        x = np.linalg.solve(np.eye(f.dim) - A.T, b)
    else:
        x = np.linalg.solve(np.eye(f.dim) - A, b)
    vec = np.empty(f.dim + 1, dtype=complex)
    if f.homogeneous_index == 0:
        vec[0] = 1.0
        vec[1:] = x
    else:
        vec[:-1] = x
        vec[-1] = 1.0
    out = np.array(f.apply(tuple(vec)), dtype=complex)
    residual = float(np.abs(out - vec).max())
    tol = 1e-9 * max(1.0, float(np.abs(A).max()), float(np.abs(vec).max()))
    if residual > tol:
        raise ArithmeticError(f"fixed-point residual {residual:.3e} exceeds {tol:.3e}")
    return vec


def overlap_point(n: int, t) -> tuple:
    """The common image M0 z1* = M1 z0* = (binom(n,i) t^i)_i, verified.

    Exact when t is an exact scalar (Dyadic/ComplexD/IBetaPoly); within
    1e-12 for floating t.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    M0, M1 = type_iv_ifs(n, t)
    z0 = tuple(1 if i == 0 else 0 for i in range(n + 1))
    z1 = tuple(binom(n, i) for i in range(n + 1))
    expected = tuple(binom(n, i) * t ** i for i in range(n + 1))
    left = M0.apply(z1)
    right = M1.apply(z0)
    exact = isinstance(t, (int, Dyadic, ComplexD, IBetaPoly))
    for got in (left, right):
        for a, b in zip(got, expected):
            if exact:
                ok = a == b
            else:
                ok = abs(complex(a) - complex(b)) <= 1e-12
            if not ok:
                raise ArithmeticError("overlap identity M0 z1* = M1 z0* failed")
    return expected


def word_map(maps: Union[IfsPair, Tuple[AffineMapH, AffineMapH]],
             word: Sequence[int]) -> AffineMapH:
    """The product M^(d1) M^(d2) ... M^(dn) for a non-empty digit word."""
    if isinstance(maps, IfsPair):
        pair = (maps.f0, maps.f1)
    else:
        pair = tuple(maps)
    if len(word) == 0:
        raise ValueError("word must be non-empty")
    if pair[0].rep != pair[1].rep:
        raise ValueError("maps must share a representation tag")
    acc = pair[word[0]].mat
    for d in word[1:]:
        acc = _linalg.mat_mul(acc, pair[d].mat)
    return AffineMapH(rep=pair[0].rep, mat=acc)


def _snap_unique(pts: np.ndarray) -> np.ndarray:
    """Deduplicate rows of a complex array on the 2^-SNAP_BITS grid."""
    scale = float(1 << SNAP_BITS)
    flat = pts.reshape(len(pts), -1)
    keys = np.empty((len(pts), 2 * flat.shape[1]), dtype=np.int64)
    keys[:, 0::2] = np.round(flat.real * scale)
    keys[:, 1::2] = np.round(flat.imag * scale)
    _, idx = np.unique(keys, axis=0, return_index=True)
    return pts[np.sort(idx)]


def _subsample(pts: np.ndarray, budget: int) -> np.ndarray:
    take = np.unique(np.linspace(0, len(pts) - 1, budget).astype(np.int64))
    return pts[take]


def _numeric_matrix(f: AffineMapH) -> np.ndarray:
    """Double-precision matrix with the homogeneous slot snapped exact.

    Affine maps keep the homogeneous coordinate identically 1; float noise
    (e.g. from a basis-change inverse) must not be allowed to violate that.
    """
    M = np.array(_linalg.to_complex(f.mat))
    h = f.homogeneous_index
    if f.row_acting:
        M[:, h] = 0.0
        M[h, h] = 1.0
    else:
        M[h, :] = 0.0
        M[h, h] = 1.0
    return M


def _apply_numeric(f: AffineMapH, pts: np.ndarray) -> np.ndarray:
    """Apply to an (N, dim+1) array of homogeneous vectors."""
    M = _numeric_matrix(f)
    out = pts @ M if f.row_acting else pts @ M.T
    h = out[:, f.homogeneous_index]
    if float(np.abs(h - 1.0).max()) > 1e-12:
        raise ArithmeticError("homogeneous coordinate drifted from 1")
    return out


def lift_seed(ifs: IfsPair, seed: Union[PointCloud, np.ndarray, Sequence]) -> np.ndarray:
    """Turn a seed into an (N, dim+1) homogeneous array.

    Complex seeds are accepted only in ambient dimension 1 (the value goes
    into the single affine slot); higher dimensions need full vectors.
    """
    arr = seed.points if isinstance(seed, PointCloud) else np.asarray(seed, dtype=complex)
    if arr.ndim == 1:
        if ifs.dim != 1:
            raise ValueError("complex seeds only lift in ambient dimension 1; "
                             "pass full homogeneous vectors")
        full = np.empty((arr.size, 2), dtype=complex)
        h = ifs.f0.homogeneous_index
        full[:, h] = 1.0
        full[:, 1 - h] = arr
        return full
    if arr.shape[1] != ifs.dim + 1:
        raise ValueError("seed vectors have the wrong dimension")
    return arr


def default_seed(ifs: IfsPair) -> np.ndarray:
    """Both fixed points; they lie on the attractor, so iteration fills inward."""
    return np.vstack([fixed_point(ifs.f0), fixed_point(ifs.f1)])


def project(ifs: IfsPair, pts: np.ndarray) -> np.ndarray:
    """First affine coordinate of each homogeneous vector."""
    first_affine = 1 if ifs.f0.homogeneous_index == 0 else 0
    return pts[:, first_affine]


def iterate_attractor(ifs: IfsPair,
                      seed: Union[PointCloud, np.ndarray, None],
                      depth: int,
                      budget: int = DEFAULT_BUDGET) -> PointCloud:
    """depth-fold set iteration of F(A) = f0(A) u f1(A), projected.

    Points are snapped/deduplicated each generation and uniformly
    subsampled if they exceed the budget (flagged on the result).
    """
    if not is_hyperbolic(ifs.t):
        raise ValueError(f"parameter t={ifs.t} is outside the hyperbolic domain")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if budget < 1:
        raise ValueError("budget must be positive")
    pts = default_seed(ifs) if seed is None else lift_seed(ifs, seed)
    subsampled = False
    for _ in range(depth):
        pts = np.vstack([_apply_numeric(ifs.f0, pts), _apply_numeric(ifs.f1, pts)])
        pts = _snap_unique(pts)
        if len(pts) > budget:
            pts = _subsample(pts, budget)
            subsampled = True
    return PointCloud(points=project(ifs, pts), generation=depth, subsampled=subsampled)


def chaos_game(ifs: IfsPair, npoints: int, burn_in: int = 32,
               rng: Optional[np.random.Generator] = None) -> PointCloud:
    """Random-orbit sampler of the attractor; cross-check for set iteration."""
    if not is_hyperbolic(ifs.t):
        raise ValueError(f"parameter t={ifs.t} is outside the hyperbolic domain")
    rng = rng or np.random.default_rng(0)
    mats = [_numeric_matrix(f) for f in (ifs.f0, ifs.f1)]
    row = ifs.f0.row_acting
    v = fixed_point(ifs.f0)
    out = np.empty((npoints, ifs.dim + 1), dtype=complex)
    choices = rng.integers(0, 2, size=burn_in + npoints)
    for k, c in enumerate(choices):
        v = v @ mats[c] if row else mats[c] @ v
        if k >= burn_in:
            out[k - burn_in] = v
    return PointCloud(points=project(ifs, out), generation=npoints)
