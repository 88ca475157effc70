"""
Momenta by two independent routes
=================================

Per-unit-length momentum P and angular momentum J of a random mode
superposition, computed twice:

  * quadrature  - integrate the momentum density over a transverse plane
  * mode space  - contract the coefficients against banded ladder matrices

The two share no code beyond the mode definition, so their agreement to
thirteen-plus digits is a strong correctness check on both. It also shows
the conservation law: P and J do not depend on which plane you integrate.

    python3 demos/two_route_momenta.py
"""

import numpy as np

from paraxbeam import (
    BeamGeometry,
    ModeSuperposition,
    PolarizationState,
    angular_momentum_modespace,
    helicity,
    momenta_numeric,
    momentum_modespace,
)

rng = np.random.default_rng(7)
geom = BeamGeometry(w0=20.0)

coeffs = {
    (n, m): complex(rng.standard_normal(), rng.standard_normal())
    for n in range(3)
    for m in range(3)
}
modes = ModeSuperposition(coeffs).normalized()
pol = PolarizationState.from_helicity(0.6)
sigma = helicity(pol)
print(f"random order-2 superposition, {len(modes)} modes, sigma = {sigma:.3f}")
print()

P_ms = momentum_modespace(modes, geom)
J_ms = angular_momentum_modespace(modes, geom, sigma)

labels = ["P_x", "P_y", "P_z", "J_x", "J_y", "J_z"]
print(f"{'z':>8} " + " ".join(f"{s:>13}" for s in labels) + "   route")
for z in (0.0, geom.rayleigh_range, 3 * geom.rayleigh_range):
    m = momenta_numeric(modes, pol, geom, z)
    row = np.concatenate([m.P, m.J])
    print(f"{z:8.0f} " + " ".join(f"{v:13.9f}" for v in row) + "   quadrature")
row = np.concatenate([P_ms, J_ms])
print(f"{'any':>8} " + " ".join(f"{v:13.9f}" for v in row) + "   mode space")
print()

worst = 0.0
for z in (0.0, geom.rayleigh_range, 3 * geom.rayleigh_range):
    m = momenta_numeric(modes, pol, geom, z)
    worst = max(
        worst,
        float(np.max(np.abs(m.P - P_ms))),
        float(np.max(np.abs(m.J - J_ms))),
    )
print(f"largest disagreement between the routes over three planes: {worst:.3e}")
print("(P in units of hbar k per unit length, J in hbar; k = 1 internally)")
