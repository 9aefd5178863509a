"""Hausdorff distance between finite planar point clouds.

Two interchangeable paths: an O(|A||B|) brute force (the oracle) and a
k-d tree accelerated nearest-neighbour path.  Both compute candidate
distances with the same |a - b| expression so the accelerated result is
bit-identical to brute force away from exact ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.spatial import cKDTree

from .ifs import PointCloud

_BRUTE_CHUNK = 4096


@dataclass(frozen=True)
class DistanceReport:
    """Both asymmetric distances, their max, and the attaining pair."""
    d_ab: float
    d_ba: float
    d_h: float
    witness: Tuple[complex, complex]


def _as_points(cloud: Union[PointCloud, np.ndarray]) -> np.ndarray:
    pts = cloud.points if isinstance(cloud, PointCloud) else np.asarray(cloud, dtype=complex)
    pts = pts.ravel()
    if pts.size == 0:
        raise ValueError("point cloud must be non-empty")
    return pts


def _nearest_brute(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Per-point nearest distance and index into b, dense evaluation."""
    best = np.full(a.size, np.inf)
    best_idx = np.zeros(a.size, dtype=np.int64)
    for start in range(0, a.size, _BRUTE_CHUNK):
        chunk = a[start:start + _BRUTE_CHUNK]
        d = np.abs(chunk[:, None] - b[None, :])
        idx = d.argmin(axis=1)
        best[start:start + _BRUTE_CHUNK] = d[np.arange(len(chunk)), idx]
        best_idx[start:start + _BRUTE_CHUNK] = idx
    return best, best_idx


def _nearest_tree(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Tree-accelerated nearest neighbours, re-scored with |a - b|.

    Querying the two tree-nearest candidates and re-measuring them with the
    same complex-abs expression as brute force absorbs any last-ulp
    disagreement between the two distance computations.
    """
    tree = cKDTree(np.column_stack([b.real, b.imag]))
    k = min(2, b.size)
    _, idx = tree.query(np.column_stack([a.real, a.imag]), k=k)
    if k == 1:
        idx = idx[:, None]
    cand = np.abs(a[:, None] - b[idx])
    pick = cand.argmin(axis=1)
    rows = np.arange(a.size)
    return cand[rows, pick], idx[rows, pick]


def dist_asym(A, B, method: str = "auto") -> float:
    """d(A, B) = max over a of min over b of |a - b| (asymmetric)."""
    d, _, _ = _dist_asym_witness(_as_points(A), _as_points(B), method)
    return d


def _dist_asym_witness(a: np.ndarray, b: np.ndarray, method: str):
    if method == "brute" or (method == "auto" and a.size * b.size <= 65536):
        dists, idx = _nearest_brute(a, b)
    elif method in ("auto", "tree"):
        dists, idx = _nearest_tree(a, b)
    else:
        raise ValueError(f"unknown method {method!r}")
    i = int(dists.argmax())
    return float(dists[i]), complex(a[i]), complex(b[idx[i]])


def hausdorff(A, B, method: str = "auto") -> DistanceReport:
    """Symmetric Hausdorff distance with the witness pair attaining it."""
    a, b = _as_points(A), _as_points(B)
    d_ab, wa_ab, wb_ab = _dist_asym_witness(a, b, method)
    d_ba, wb_ba, wa_ba = _dist_asym_witness(b, a, method)
    if d_ab >= d_ba:
        return DistanceReport(d_ab=d_ab, d_ba=d_ba, d_h=d_ab, witness=(wa_ab, wb_ab))
    return DistanceReport(d_ab=d_ab, d_ba=d_ba, d_h=d_ba, witness=(wa_ba, wb_ba))
