"""
Centroid transport and the waist theorem
========================================

Two structural facts about beam barycenters, shown numerically:

1. The centroid travels in a straight line: d<r_perp>/dz = P_perp / P_z.
   A beam built with a little (1,0)-mode admixture in phase quadrature
   carries transverse momentum, and its intensity spot drifts accordingly.

2. At the waist the transverse angular momentum reads the centroid:
   (J_x, J_y)/P_z = (<y>, -<x>). A displacement in +y stores J_x, and
   <r_perp> . J_perp = 0 always.

    python3 demos/centroid_transport.py
"""

import math

import numpy as np

from paraxbeam import (
    BeamGeometry,
    ModeSuperposition,
    PolarizationState,
    momenta_numeric,
)

geom = BeamGeometry(w0=20.0)
pol = PolarizationState.linear_x()
s = 1 / math.sqrt(2)

# an imaginary f_10 admixture tilts the mean wavevector (walking beam)
walking = ModeSuperposition({(0, 0): s, (1, 0): 1j * s})
m0 = momenta_numeric(walking, pol, geom, 0.0)
slope = m0.P[:2] / m0.P[2]
print("walking beam: f_00 = 1/sqrt2, f_10 = i/sqrt2")
print(f"  P_perp/P_z = ({slope[0]:.6f}, {slope[1]:.6f})"
      f"   [theta0/2 = {geom.theta0 / 2}]")
print(f"{'z':>10} {'<x> numeric':>14} {'<x> = z P_x/P_z':>16}")
for z in np.linspace(0.0, 2 * geom.rayleigh_range, 5):
    m = momenta_numeric(walking, pol, geom, float(z))
    print(f"{z:10.0f} {m.centroid[0]:14.6f} {z * slope[0]:16.6f}")
print()

# a real f_01 admixture displaces the beam instead: no drift, stored J_x
displaced = ModeSuperposition({(0, 0): s, (0, 1): s})
print("displaced beam: f_00 = f_01 = 1/sqrt2  (centroid at w0/2 on y)")
m = momenta_numeric(displaced, pol, geom, 0.0)
print(f"  <r_perp>   = ({m.centroid[0]:.6f}, {m.centroid[1]:.6f})")
print(f"  J_x/P_z    = {m.J[0] / m.P[2]:.6f}   (equals <y>)")
print(f"  J_y/P_z    = {m.J[1] / m.P[2]:.6f}   (equals -<x>)")
dot = float(m.centroid @ m.J[:2])
print(f"  <r_perp>.J_perp = {dot:.3e}   (orthogonal)")
print()

# the y-displaced beam does not drift; the walking beam does not displace
print("cross-check at z = 2L:")
m2 = momenta_numeric(displaced, pol, geom, 2 * geom.rayleigh_range)
print(f"  displaced beam centroid stays at ({m2.centroid[0]:.6f}, {m2.centroid[1]:.6f})")
