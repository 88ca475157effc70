"""Closed-form P and J as quadratic forms over Hermite-Gaussian coefficients.

For a superposition f = sum f_nm psi_nm with helicity sigma, the plane
integrals collapse to banded contractions over the mode indices:

    P_x = -i sum f*_nm B_np f_pm          B_np = (sqrt(p) d_{p,n+1} - sqrt(n) d_{n,p+1}) / (k w0)
    P_y = -i sum f*_nm B_mq f_nq
    P_z =  sum |f_nm|^2
    J_x =  (1/k) sum f*_nm C_mq f_nq      C_np = (k w0 / 2)(sqrt(p) d_{p,n+1} + sqrt(n) d_{n,p+1})
    J_y = -(1/k) sum f*_nm C_np f_pm
    J_z =  lambda_bar [ sigma P_z
           + sum f*_nm ( -i sqrt(n(m+1)) f_{n-1,m+1} + i sqrt(m(n+1)) f_{n+1,m-1} ) ]

with d the Kronecker delta. All six are real for any coefficient set; the
floating-point imaginary residue is asserted tiny and dropped. This is the
analytic route that the quadrature engine must reproduce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .modes import BeamGeometry, ModeSuperposition

__all__ = [
    "LadderCoefficients",
    "ladder_coefficients",
    "momentum_modespace",
    "angular_momentum_modespace",
    "three_mode_summary",
    "extract_three_modes",
]


@dataclass(frozen=True)
class LadderCoefficients:
    """Banded ladder matrices B (antisymmetric) and C (symmetric), order N."""

    B: np.ndarray
    C: np.ndarray
    order: int


def ladder_coefficients(geom: BeamGeometry, N: int) -> LadderCoefficients:
    """Dense (N+1)x(N+1) realizations of the B and C bands."""
    if N < 1:
        raise ValueError(f"ladder order must be >= 1, got {N}")
    kw0 = geom.k * geom.w0
    B = np.zeros((N + 1, N + 1))
    C = np.zeros((N + 1, N + 1))
    for n in range(N):
        root = math.sqrt(n + 1.0)
        B[n, n + 1] = root / kw0
        B[n + 1, n] = -root / kw0
        C[n, n + 1] = (kw0 / 2.0) * root
        C[n + 1, n] = (kw0 / 2.0) * root
    return LadderCoefficients(B=B, C=C, order=N)


def _assert_real(value: complex, scale: float) -> float:
    assert abs(value.imag) <= 1e-14 * max(1.0, scale), value
    return value.real


def momentum_modespace(modes: ModeSuperposition, geom: BeamGeometry) -> np.ndarray:
    """P by sparse contraction over the banded deltas; exact to rounding."""
    kw0 = geom.k * geom.w0
    get = dict(modes.items()).get
    px = 0.0j
    py = 0.0j
    pz = 0.0
    for (n, m), c in modes.items():
        cc = c.conjugate()
        pz += (c * cc).real
        up = get((n + 1, m))
        if up is not None:
            px += cc * math.sqrt(n + 1.0) * up
        if n:
            down = get((n - 1, m))
            if down is not None:
                px -= cc * math.sqrt(n) * down
        up = get((n, m + 1))
        if up is not None:
            py += cc * math.sqrt(m + 1.0) * up
        if m:
            down = get((n, m - 1))
            if down is not None:
                py -= cc * math.sqrt(m) * down
    return np.array([
        _assert_real(-1j * px / kw0, pz),
        _assert_real(-1j * py / kw0, pz),
        pz,
    ])


def angular_momentum_modespace(
    modes: ModeSuperposition, geom: BeamGeometry, sigma: float
) -> np.ndarray:
    """J about the beam axis origin, including the spin term lambda_bar sigma P_z."""
    if not -1.0 <= sigma <= 1.0:
        raise ValueError(f"helicity must lie in [-1, 1], got {sigma!r}")
    w0 = geom.w0
    lam = geom.lambda_bar
    get = dict(modes.items()).get
    jx = 0.0j
    jy = 0.0j
    cross = 0.0j
    pz = 0.0
    for (n, m), c in modes.items():
        cc = c.conjugate()
        pz += (c * cc).real
        up = get((n, m + 1))
        if up is not None:
            jx += cc * math.sqrt(m + 1.0) * up
        if m:
            down = get((n, m - 1))
            if down is not None:
                jx += cc * math.sqrt(m) * down
        up = get((n + 1, m))
        if up is not None:
            jy += cc * math.sqrt(n + 1.0) * up
        if n:
            down = get((n - 1, m))
            if down is not None:
                jy += cc * math.sqrt(n) * down
        # orbital z term: raising one index while lowering the other
        if n:
            partner = get((n - 1, m + 1))
            if partner is not None:
                cross += -1j * math.sqrt(n * (m + 1.0)) * cc * partner
        if m:
            partner = get((n + 1, m - 1))
            if partner is not None:
                cross += 1j * math.sqrt(m * (n + 1.0)) * cc * partner
    return np.array([
        (w0 / 2.0) * _assert_real(jx, pz),
        -(w0 / 2.0) * _assert_real(jy, pz),
        lam * (sigma * pz + _assert_real(cross, pz)),
    ])


def extract_three_modes(modes: ModeSuperposition):
    """(f00, f01, f10) of a superposition; any other populated mode is an error."""
    allowed = {(0, 0), (0, 1), (1, 0)}
    extra = [nm for nm, c in modes.items() if nm not in allowed and c != 0]
    if extra:
        raise ValueError(
            f"three-mode summary needs modes within {sorted(allowed)}, "
            f"also populated: {extra}"
        )
    return (
        modes.coefficient(0, 0),
        modes.coefficient(0, 1),
        modes.coefficient(1, 0),
    )


def three_mode_summary(f00, f01, f10, sigma: float, geom: BeamGeometry):
    """(P_x, P_y, P_z, J_x, J_y, J_z) for the three lowest modes.

    The closed forms specialize the general contractions:

        P_x = theta0 Im(f00* f10)      P_y = theta0 Im(f00* f01)
        J_x = w0 Re(f00* f01)          J_y = -w0 Re(f00* f10)
        J_z = lambda_bar (sigma P_z + 2 Im(f10* f01))

    J_x couples to f01 and J_y to f10: a real f01 admixture displaces the
    beam towards +y, and the z = 0 centroid theorem then demands exactly
    J_x = <y> P_z. Agrees with the general operators to rounding.
    """
    if not -1.0 <= sigma <= 1.0:
        raise ValueError(f"helicity must lie in [-1, 1], got {sigma!r}")
    f00, f01, f10 = complex(f00), complex(f01), complex(f10)
    theta0 = geom.theta0
    lam = geom.lambda_bar
    pz = abs(f00) ** 2 + abs(f01) ** 2 + abs(f10) ** 2
    px = theta0 * (f00.conjugate() * f10).imag
    py = theta0 * (f00.conjugate() * f01).imag
    jx = geom.w0 * (f00.conjugate() * f01).real
    jy = -geom.w0 * (f00.conjugate() * f10).real
    jz = lam * (sigma * pz + 2.0 * (f10.conjugate() * f01).imag)
    return px, py, pz, jx, jy, jz
