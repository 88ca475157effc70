"""Vector fields and momentum / angular-momentum densities of a polarized
paraxial envelope.

The primary quantities are computed from the scalar envelope f and its
transverse gradient:

    k p_x = -Im(f dx f*) + sigma Re(f dy f*)
    k p_y = -Im(f dy f*) - sigma Re(f dx f*)
      p_z = |f|^2
    j = r x p

The full E and B fields are also available; the Poynting route Re[E x B*]
reproduces p identically (with epsilon0 = omega = k = 1) and is kept in the
test suite as an independent oracle rather than used at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modes import (
    BeamGeometry,
    ModeSuperposition,
    Point3,
    PolarizationState,
    helicity,
    superposition_amplitude_and_gradient,
)

__all__ = [
    "VectorFieldSample",
    "DensitySample",
    "vector_fields",
    "momentum_density",
    "angular_momentum_density",
    "sample_densities",
]


@dataclass(frozen=True)
class VectorFieldSample:
    """Complex E and B at a point, in the k = omega = 1 convention."""

    E: np.ndarray
    B: np.ndarray


@dataclass(frozen=True)
class DensitySample:
    """Momentum density p and angular momentum density j = r x p at a point.

    p carries units of hbar*k per normalized volume, j the same times length.
    """

    point: Point3
    p: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        if self.p[2] < 0:
            raise ValueError(f"p_z must be non-negative, got {self.p[2]!r}")
        r = np.array([self.point.x, self.point.y, self.point.z])
        rj = abs(float(np.dot(r, self.j)))
        bound = 1e-12 * float(np.linalg.norm(r) * np.linalg.norm(self.j))
        if rj > bound + 1e-300:
            raise ValueError(
                f"r . j = {rj:g} violates orthogonality bound {bound:g}"
            )


def vector_fields(f, dxf, dyf, pol: PolarizationState) -> VectorFieldSample:
    """E and B of the polarized envelope, omega = k = 1.

    E = i omega [alpha f, beta f, i(alpha dx f + beta dy f)]
    B = i k     [-beta f, alpha f, -i(beta dx f - alpha dy f)]
    """
    a, b = complex(pol.alpha), complex(pol.beta)
    E = 1j * np.array([a * f, b * f, 1j * (a * dxf + b * dyf)])
    B = 1j * np.array([-b * f, a * f, -1j * (b * dxf - a * dyf)])
    return VectorFieldSample(E, B)


def momentum_density(f, dxf, dyf, sigma: float, k: float = 1.0):
    """Momentum density 3-vector from the envelope and its gradient.

    Accepts scalars or broadcastable arrays; returns shape (3,) + broadcast
    shape. The polarization enters only through the helicity sigma.
    """
    if not -1.0 <= sigma <= 1.0:
        raise ValueError(f"helicity must lie in [-1, 1], got {sigma!r}")
    f = np.asarray(f, dtype=complex)
    ax = f * np.conj(np.asarray(dxf, dtype=complex))
    ay = f * np.conj(np.asarray(dyf, dtype=complex))
    px = (-ax.imag + sigma * ay.real) / k
    py = (-ay.imag - sigma * ax.real) / k
    pz = (f * np.conj(f)).real
    return np.stack(np.broadcast_arrays(px, py, pz))


def angular_momentum_density(point, p):
    """j = r x p about the observation-frame origin.

    `point` may be a Point3 or any (x, y, z) triple of broadcastable arrays;
    `p` is the matching (3, ...) momentum density.
    """
    if isinstance(point, Point3):
        x, y, z = point.x, point.y, point.z
    else:
        x, y, z = point
    px, py, pz = p[0], p[1], p[2]
    jx = y * pz - z * py
    jy = z * px - x * pz
    jz = x * py - y * px
    return np.stack(np.broadcast_arrays(jx, jy, jz))


def sample_densities(
    modes: ModeSuperposition,
    pol: PolarizationState,
    geom: BeamGeometry,
    point: Point3,
) -> DensitySample:
    """Evaluate p and j for a superposition at one point."""
    f, dxf, dyf = superposition_amplitude_and_gradient(modes, point, geom)
    p = momentum_density(f, dxf, dyf, helicity(pol), k=geom.k)
    j = angular_momentum_density(point, p)
    return DensitySample(point, p, j)
