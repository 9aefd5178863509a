"""Complex-parameter Bezier subdivision as a hyperbolic IFS.

Exact dyadic/polynomial arithmetic for the subdivision-matrix and orbit
identities, numpy-backed attractor rendering, Hausdorff metrics, and the
scaled convergence experiment toward the Takagi curve.
"""

from .exactnum import ComplexD, Dyadic, IBetaPoly, bernstein, binom
from .decasteljau import (AffineMapH, ConjugacyS, SubdivisionMatrices,
                          build_ifs_from_controls, build_LR, conjugacy,
                          corollary_identities, diagonal_closed_form,
                          eval_point, subdivide, triangular_forms,
                          type_iv_ifs, upper_closed_form)
from .ifs import (IfsPair, PointCloud, ResourceLimitError, chaos_game,
                  fixed_point, is_hyperbolic, iterate_attractor,
                  joint_spectral_radius, jsr_empirical, overlap_point,
                  word_map)
from .metrics import DistanceReport, dist_asym, hausdorff
from .orbits import (ALL_ONES, OrbitState, a_coeff, a_k_samples, orbit_state,
                     pi, pi_inverse, vector_field_v, vector_field_vm, w_poly,
                     z_poly, z_poly_via_matrices)
from .scaling import (ConvergenceRow, convergence_sweep, degree_m_sweep,
                      envelope, scale_g, scaled_attractor, takagi_graph,
                      two_point_attractor)
from .takagi import sigma, tak1_increment, takagi

__version__ = "1.0.0"

__all__ = [
    "ComplexD", "Dyadic", "IBetaPoly", "bernstein", "binom",
    "AffineMapH", "ConjugacyS", "SubdivisionMatrices",
    "build_ifs_from_controls", "build_LR", "conjugacy",
    "corollary_identities", "diagonal_closed_form", "eval_point",
    "subdivide", "triangular_forms", "type_iv_ifs", "upper_closed_form",
    "IfsPair", "PointCloud", "ResourceLimitError", "chaos_game",
    "fixed_point", "is_hyperbolic", "iterate_attractor",
    "joint_spectral_radius", "jsr_empirical", "overlap_point", "word_map",
    "DistanceReport", "dist_asym", "hausdorff",
    "ALL_ONES", "OrbitState", "a_coeff", "a_k_samples", "orbit_state", "pi",
    "pi_inverse", "vector_field_v", "vector_field_vm", "w_poly", "z_poly",
    "z_poly_via_matrices",
    "ConvergenceRow", "convergence_sweep", "degree_m_sweep", "envelope",
    "scale_g", "scaled_attractor", "takagi_graph", "two_point_attractor",
    "sigma", "tak1_increment", "takagi",
]
