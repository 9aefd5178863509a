"""Scaled attractors and the Takagi-graph convergence experiment.

For t = 1/2 + i*beta the two-control-point IFS is the pair of scalar maps
z -> t z and z -> (1 - t) z + t; stretching the imaginary axis by
1/(2*beta) sends its attractor toward the graph of the Takagi function as
beta -> 0.  The measured Hausdorff distance is compared against the
4*beta / (1 - 4*beta^2) envelope plus an explicit discretization
allowance (finite depth + finite graph grid are our budget, not part of
the limit statement).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from .decasteljau import type_iv_ifs
from .exactnum import Dyadic, IBetaPoly
from .ifs import (DEFAULT_BUDGET, IfsPair, PointCloud, _snap_unique, _subsample,
                  is_hyperbolic, iterate_attractor, joint_spectral_radius)
from .metrics import hausdorff
from .orbits import DigitSeq, _digits_prefix
from .takagi import takagi

SEED_GRID_BITS = 6  # unit-interval seed refined to a 2^-6 grid
HYPERBOLIC_BETA = math.sqrt(3.0) / 2.0


def scale_g(z, beta: float):
    """g(z, beta) = Re(z) + i * beta * Im(z); accepts scalars or arrays."""
    z = np.asarray(z, dtype=complex)
    out = z.real + 1j * beta * z.imag
    return complex(out) if out.ndim == 0 else out


def scale_g2(z, alpha: float, beta: float):
    """Two-parameter variant alpha * Re(z) + i * beta * Im(z)."""
    z = np.asarray(z, dtype=complex)
    out = alpha * z.real + 1j * beta * z.imag
    return complex(out) if out.ndim == 0 else out


def envelope(beta: float) -> Optional[float]:
    """The proof bound 4 beta / (1 - 4 beta^2); defined only for 0 < beta < 1/2."""
    if not 0.0 < beta < 0.5:
        return None
    return 4.0 * beta / (1.0 - 4.0 * beta * beta)


def two_point_attractor(beta: float, depth: int,
                        budget: int = DEFAULT_BUDGET) -> PointCloud:
    """Set iteration of the scalar pair from the refined unit-interval seed."""
    t = 0.5 + 1j * beta
    if not is_hyperbolic(t):
        raise ValueError(f"beta={beta} leaves the hyperbolic domain |beta| < sqrt(3)/2")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    pts = np.linspace(0.0, 1.0, (1 << SEED_GRID_BITS) + 1).astype(complex)
    subsampled = False
    for _ in range(depth):
        pts = np.concatenate([t * pts, (1 - t) * pts + t])
        pts = _snap_unique(pts[:, None]).ravel()
        if pts.size > budget:
            pts = _subsample(pts, budget)
            subsampled = True
    return PointCloud(points=pts, generation=depth, subsampled=subsampled)


def scaled_attractor(beta: float, depth: int,
                     budget: int = DEFAULT_BUDGET) -> PointCloud:
    """A*(beta): the two-point attractor with Im stretched by 1/(2*beta)."""
    if beta == 0:
        raise ValueError("beta = 0: scaling by 1/(2*beta) undefined")
    if not abs(beta) < HYPERBOLIC_BETA:
        raise ValueError(f"beta={beta} leaves the hyperbolic domain |beta| < sqrt(3)/2")
    cloud = two_point_attractor(beta, depth, budget)
    return PointCloud(points=scale_g(cloud.points, 1.0 / (2.0 * beta)),
                      generation=cloud.generation, subsampled=cloud.subsampled)


def takagi_graph(grid: int) -> PointCloud:
    """Points x + i T(x) on the dyadic grid x = k / 2^grid, exact ordinates."""
    if grid < 1:
        raise ValueError("need grid >= 1")
    pts = np.array([float(Dyadic(k, grid)) + 1j * float(takagi(Dyadic(k, grid)))
                    for k in range(2 ** grid + 1)])
    return PointCloud(points=pts, generation=grid)


@dataclass(frozen=True)
class ConvergenceRow:
    beta: float
    depth: int
    grid: int
    d_h: float
    envelope: Optional[float]
    allowance: float
    passed: bool

    @property
    def envelope_defined(self) -> bool:
        return self.envelope is not None


def _cloud_diameter(*clouds: PointCloud) -> float:
    pts = np.concatenate([c.points for c in clouds])
    return float(math.hypot(pts.real.max() - pts.real.min(),
                            pts.imag.max() - pts.imag.min()))


def _make_row(beta: float, depth: int, grid: int,
              cloud: PointCloud, graph: PointCloud) -> ConvergenceRow:
    d_h = hausdorff(cloud, graph).d_h
    env = envelope(beta)
    rho = joint_spectral_radius(0.5 + 1j * beta)
    allowance = _cloud_diameter(cloud, graph) * rho ** depth + 2.0 * 2.0 ** (-grid)
    passed = env is not None and d_h <= env + allowance
    return ConvergenceRow(beta=beta, depth=depth, grid=grid, d_h=d_h,
                          envelope=env, allowance=allowance, passed=passed)


def convergence_sweep(betas: Sequence[float], depth: int, grid: int,
                      budget: int = DEFAULT_BUDGET) -> List[ConvergenceRow]:
    """Measure d_H(A*(beta), Takagi graph) per beta, largest beta first."""
    rows = []
    for beta in sorted(betas, reverse=True):
        cloud = scaled_attractor(beta, depth, budget)
        rows.append(_make_row(beta, depth, grid, cloud, takagi_graph(grid)))
    return rows


def degree_m_first_component(m: int, word: DigitSeq, n: int) -> IBetaPoly:
    """First affine component of the degree-m word product applied to (1, 0^m).

    Full (m+1)-dimensional type-IV matrix path over exact polynomials;
    equals m * z_poly(word, n) by the x -> m x conjugacy.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    t = IBetaPoly.t_half_plus_ibeta()
    M0, M1 = type_iv_ifs(m, t)
    maps = (M0, M1)
    zero, one = IBetaPoly(), IBetaPoly([1])
    v = (one,) + (zero,) * m
    for b in reversed(_digits_prefix(word, n)):
        v = maps[b].apply(v)
    return v[1] if isinstance(v[1], IBetaPoly) else IBetaPoly([v[1]])


def degree_m_attractor_first_component(m: int, beta: float, depth: int,
                                       budget: int = DEFAULT_BUDGET) -> PointCloud:
    """Iterate the (m+1)-dimensional type-IV IFS; project to component one."""
    t = 0.5 + 1j * beta
    M0, M1 = type_iv_ifs(m, t)
    pair = IfsPair(f0=M0, f1=M1, t=t)
    return iterate_attractor(pair, None, depth, budget)


def degree_m_sweep(m: int, betas: Sequence[float], depth: int, grid: int,
                   budget: int = DEFAULT_BUDGET) -> List[ConvergenceRow]:
    """Degree-m analogue: scale component one by (1/m, 1/(2 m beta))."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        return convergence_sweep(betas, depth, grid, budget)
    rows = []
    for beta in sorted(betas, reverse=True):
        if beta == 0:
            raise ValueError("beta = 0: scaling undefined")
        cloud = degree_m_attractor_first_component(m, beta, depth, budget)
        scaled = PointCloud(
            points=scale_g2(cloud.points, 1.0 / m, 1.0 / (2.0 * m * beta)),
            generation=cloud.generation, subsampled=cloud.subsampled)
        rows.append(_make_row(beta, depth, grid, scaled, takagi_graph(grid)))
    return rows
