"""
Hermite-Gaussian mode gallery
=============================

Evaluates a few basis modes on a grid and writes their intensity
patterns as PGM images next to this script, alongside a small table of
norms and spot sizes. Run with:

    python3 demos/mode_gallery.py
"""

import os

import numpy as np

from paraxbeam import BeamGeometry, ModeSuperposition, evaluate_superposition
from paraxbeam.cli import write_pgm

HERE = os.path.dirname(os.path.abspath(__file__))

geom = BeamGeometry(w0=20.0)  # k w0 = 20, theta0 = 0.1
print(f"waist k*w0 = {geom.w0}, Rayleigh range k*L = {geom.rayleigh_range}")
print(f"far-field divergence theta0 = {geom.theta0}")
print()

# a 256-pixel frame, four waists across
n = 256
axis = np.linspace(-4 * geom.w0, 4 * geom.w0, n)
X = axis[None, :]
Y = axis[::-1][:, None]

print(f"{'mode':>8} {'peak |psi|^2':>14} {'image':>22}")
for nm in [(0, 0), (1, 0), (2, 1), (3, 3)]:
    modes = ModeSuperposition({nm: 1.0})
    f, _, _ = evaluate_superposition(modes, X, Y, 0.0, geom)
    intensity = (f * np.conj(f)).real
    path = os.path.join(HERE, f"mode_{nm[0]}{nm[1]}.pgm")
    write_pgm(path, intensity)
    print(f"  psi_{nm[0]}{nm[1]:<2} {intensity.max():>14.6e} {os.path.basename(path):>22}")

# the vortex superposition: a dark core threaded by a phase singularity
lg = ModeSuperposition.laguerre_gauss_l1()
f, _, _ = evaluate_superposition(lg, X, Y, 0.0, geom)
intensity = (f * np.conj(f)).real
write_pgm(os.path.join(HERE, "mode_vortex.pgm"), intensity)
center = intensity[n // 2 - 1 : n // 2 + 1, n // 2 - 1 : n // 2 + 1]
print(f"  vortex {intensity.max():>14.6e} {'mode_vortex.pgm':>22}"
      f"   (core max {center.max():.2e})")
print()

# spreading: the same mode at increasing heights, in one strip
strips = []
for z in (0.0, geom.rayleigh_range, 2 * geom.rayleigh_range):
    f, _, _ = evaluate_superposition(ModeSuperposition.fundamental(), X, Y, z, geom)
    strips.append((f * np.conj(f)).real)
write_pgm(os.path.join(HERE, "spreading.pgm"), np.hstack(strips))
print("spreading.pgm shows psi_00 at z = 0, L, 2L: the width grows as")
print("w(z) = w0 sqrt(1 + z^2/L^2) while each panel keeps unit total power.")
for z in (0.0, geom.rayleigh_range, 2 * geom.rayleigh_range):
    print(f"  z = {z:8.1f}   w(z) = {float(geom.spot_size(z)):.3f}")
