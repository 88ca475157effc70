"""Momenta, angular momenta and barycenters of paraxial Hermite-Gaussian
beams, with the helicity-dependent barycenter shift seen from a tilted frame.

Internal units: k = 1 (lengths in reduced wavelengths), momenta in hbar k.
"""

from .modes import (
    BeamGeometry,
    ModeSuperposition,
    Point3,
    PolarizationState,
    evaluate_superposition,
    helicity,
    hermite_eval,
    mode_amplitude,
    mode_transverse_gradient,
    superposition_amplitude_and_gradient,
)
from .densities import (
    DensitySample,
    VectorFieldSample,
    angular_momentum_density,
    momentum_density,
    sample_densities,
    vector_fields,
)
from .quadrature import (
    BeamMoments,
    QuadratureSpec,
    centroid,
    convergence_delta,
    integrate_plane,
    momenta_numeric,
    parts_relations_residuals,
    plane_grid,
)
from .operators import (
    LadderCoefficients,
    angular_momentum_modespace,
    extract_three_modes,
    ladder_coefficients,
    momentum_modespace,
    three_mode_summary,
)
from .tilt import (
    TiltFrame,
    rotated_momentum_density,
    rotation_matrix,
    rotation_matrix_series,
    so3_generators,
    tilted_centroid_closed,
    tilted_centroid_numeric,
    tilted_momenta_closed,
    tilted_momenta_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "BeamGeometry",
    "ModeSuperposition",
    "Point3",
    "PolarizationState",
    "evaluate_superposition",
    "helicity",
    "hermite_eval",
    "mode_amplitude",
    "mode_transverse_gradient",
    "superposition_amplitude_and_gradient",
    "DensitySample",
    "VectorFieldSample",
    "angular_momentum_density",
    "momentum_density",
    "sample_densities",
    "vector_fields",
    "BeamMoments",
    "QuadratureSpec",
    "centroid",
    "convergence_delta",
    "integrate_plane",
    "momenta_numeric",
    "parts_relations_residuals",
    "plane_grid",
    "LadderCoefficients",
    "angular_momentum_modespace",
    "extract_three_modes",
    "ladder_coefficients",
    "momentum_modespace",
    "three_mode_summary",
    "TiltFrame",
    "rotated_momentum_density",
    "rotation_matrix",
    "rotation_matrix_series",
    "so3_generators",
    "tilted_centroid_closed",
    "tilted_centroid_numeric",
    "tilted_momenta_closed",
    "tilted_momenta_numeric",
    "__version__",
]
