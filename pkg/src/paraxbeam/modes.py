"""Hermite-Gaussian mode basis for paraxial beams.

Everything here works in reduced units: the wavenumber k is carried as an
explicit field but defaults to 1, so lengths are measured in reduced
wavelengths (lambda_bar = 1/k) and the waist enters through the dimensionless
product k*w0. The mode functions are the standard orthonormal set

    psi_nm(r) = sqrt(2^(1-n-m) / (pi w(z)^2 n! m!)) H_n(sqrt2 x/w) H_m(sqrt2 y/w)
                * exp(ik(x^2+y^2)/(2(z - iL))) * exp(-i(n+m+1) arctan(z/L))

with L = k w0^2/2 the Rayleigh range and w(z) = w0 sqrt(1 + z^2/L^2).
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BeamGeometry",
    "PolarizationState",
    "ModeSuperposition",
    "Point3",
    "hermite_eval",
    "mode_amplitude",
    "mode_transverse_gradient",
    "superposition_amplitude_and_gradient",
    "evaluate_superposition",
    "helicity",
]

_MAX_HERMITE_ORDER = 64
_SQRT2 = math.sqrt(2.0)
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class BeamGeometry:
    """Waist, wavenumber and the derived length scales of a Gaussian beam.

    Parameters
    ----------
    w0 : float
        Waist radius, in units of 1/k.
    k : float, optional
        Wavenumber. Kept explicit but the library convention is k = 1.
    max_spread : float, optional
        Upper bound enforced on the angular spread theta0 = 2/(k w0).
        The default 0.2 keeps the paraxial expansion honest; raise it
        deliberately when constructing toy geometries (w0 of order 1/k).
    """

    w0: float
    k: float = 1.0
    max_spread: float = 0.2

    def __post_init__(self):
        if not (self.w0 > 0):
            raise ValueError("beam waist w0 must be positive")
        if not (self.k > 0):
            raise ValueError("wavenumber k must be positive")
        if not (self.theta0 < self.max_spread):
            raise ValueError(
                f"angular spread theta0 = {self.theta0:g} exceeds the paraxial "
                f"guard {self.max_spread:g}; increase k*w0 or raise max_spread"
            )

    @property
    def rayleigh_range(self) -> float:
        return self.k * self.w0 * self.w0 / 2.0

    @property
    def lambda_bar(self) -> float:
        return 1.0 / self.k

    @property
    def theta0(self) -> float:
        """Far-field divergence half-angle of the fundamental mode."""
        return 2.0 / (self.k * self.w0)

    def spot_size(self, z):
        L = self.rayleigh_range
        return self.w0 * np.sqrt(1.0 + (z / L) ** 2)


@dataclass(frozen=True)
class PolarizationState:
    """Transverse polarization unit vector u = alpha x + beta y."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(
                f"polarization not normalized: |alpha|^2+|beta|^2 = {norm!r}"
            )

    @classmethod
    def linear_x(cls) -> "PolarizationState":
        return cls(1.0, 0.0)

    @classmethod
    def linear_y(cls) -> "PolarizationState":
        return cls(0.0, 1.0)

    @classmethod
    def circular(cls, handedness: int = +1) -> "PolarizationState":
        """Circular state with helicity +1 or -1."""
        if handedness not in (+1, -1):
            raise ValueError("handedness must be +1 or -1")
        s = 1.0 / _SQRT2
        return cls(s, handedness * 1j * s)

    @classmethod
    def from_helicity(cls, sigma: float) -> "PolarizationState":
        """A state with the requested helicity sigma in [-1, 1].

        Uses alpha = cos(chi), beta = i sin(chi) with sin(2 chi) = sigma,
        which interpolates linear (sigma=0) through circular (sigma=+-1).
        """
        if not -1.0 <= sigma <= 1.0:
            raise ValueError(f"helicity must lie in [-1, 1], got {sigma!r}")
        chi = math.asin(sigma) / 2.0
        return cls(math.cos(chi), 1j * math.sin(chi))

    @property
    def helicity(self) -> float:
        return helicity(self)


def helicity(pol: PolarizationState) -> float:
    """Spin quantum number sigma = i(alpha beta* - alpha* beta).

    Exactly invariant under a global phase of (alpha, beta). The expression
    is real by construction; any floating-point imaginary residue is
    asserted below 1e-14 and dropped.
    """
    a, b = complex(pol.alpha), complex(pol.beta)
    s = 1j * (a * b.conjugate() - a.conjugate() * b)
    assert abs(s.imag) < 1e-14
    return s.real


@dataclass(frozen=True)
class Point3:
    """An observation point (x, y, z) in units of 1/k."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise ValueError(f"point has non-finite components: {self}")


class ModeSuperposition:
    """Sparse coefficient map (n, m) -> f_nm over the Hermite-Gaussian basis.

    Coefficients are stored with a deterministic (n-major, m-minor) iteration
    order so that floating-point sums over modes are reproducible run to run.
    """

    def __init__(self, coefficients, max_order: int = 8):
        items = []
        for (n, m), c in coefficients.items():
            n, m = int(n), int(m)
            if n < 0 or m < 0:
                raise ValueError(f"mode indices must be non-negative, got ({n},{m})")
            if n > max_order or m > max_order:
                raise ValueError(
                    f"mode ({n},{m}) exceeds max_order {max_order}"
                )
            items.append(((n, m), complex(c)))
        items.sort(key=lambda kv: kv[0])
        self._items = tuple(items)
        self.max_order = max_order
        total = math.fsum(abs(c) ** 2 for _, c in items)
        if not total > 0.0:
            raise ValueError("superposition has zero norm")
        self._norm_sq = total

    def items(self):
        return self._items

    def __len__(self):
        return len(self._items)

    @property
    def norm_squared(self) -> float:
        return self._norm_sq

    @property
    def is_normalized(self) -> bool:
        return abs(self._norm_sq - 1.0) <= 1e-12

    def normalized(self) -> "ModeSuperposition":
        s = 1.0 / math.sqrt(self._norm_sq)
        return ModeSuperposition(
            {nm: c * s for nm, c in self._items}, max_order=self.max_order
        )

    def coefficient(self, n: int, m: int) -> complex:
        for nm, c in self._items:
            if nm == (n, m):
                return c
        return 0.0 + 0.0j

    @classmethod
    def fundamental(cls) -> "ModeSuperposition":
        return cls({(0, 0): 1.0})

    @classmethod
    def laguerre_gauss_l1(cls) -> "ModeSuperposition":
        """The l=+1, p=0 Laguerre-Gaussian mode in its HG decomposition:
        (psi_10 + i psi_01)/sqrt2."""
        s = 1.0 / _SQRT2
        return cls({(0, 1): 1j * s, (1, 0): s})

    def __repr__(self):
        body = ", ".join(f"({n},{m}): {c:.6g}" for (n, m), c in self._items)
        return f"ModeSuperposition({{{body}}})"


def hermite_eval(n: int, u):
    """Physicists' Hermite polynomial H_n(u) via the three-term recurrence.

    H_{k+1}(u) = 2u H_k(u) - 2k H_{k-1}(u). Accepts scalars or arrays.
    n is capped at 64; beyond that the recurrence magnitudes overflow the
    double range for moderate u and nothing in this library needs them.
    """
    n = int(n)
    if n < 0:
        raise ValueError("Hermite order must be non-negative")
    if n > _MAX_HERMITE_ORDER:
        raise ValueError(
            f"Hermite order {n} above supported cutoff {_MAX_HERMITE_ORDER}"
        )
    u = np.asarray(u)
    h_prev = np.ones_like(u, dtype=float)
    if n == 0:
        return h_prev if h_prev.shape else float(h_prev)
    h = 2.0 * u
    for k in range(1, n):
        h, h_prev = 2.0 * u * h - 2.0 * k * h_prev, h
    return h if np.ndim(h) else float(h)


def _hermite_table(nmax: int, u):
    # all orders 0..nmax at once; the recurrence is cheaper than repeated calls
    out = [np.ones_like(u)]
    if nmax >= 1:
        out.append(2.0 * u)
    for k in range(1, nmax):
        out.append(2.0 * u * out[k] - 2.0 * k * out[k - 1])
    return out


def _mode_scale(n: int, m: int) -> float:
    # sqrt(2^-(n+m) / (n! m!)) in log space; exact to the last bit for n,m <= 64
    return math.exp(-0.5 * ((n + m) * _LN2 + math.lgamma(n + 1) + math.lgamma(m + 1)))


def evaluate_superposition(modes: ModeSuperposition, x, y, z, geom: BeamGeometry):
    """Evaluate f = sum f_nm psi_nm and its transverse gradient on arrays.

    Parameters
    ----------
    modes : ModeSuperposition
    x, y : array_like
        Broadcastable transverse coordinates.
    z : float
        Axial position (a scalar; one transverse plane per call).
    geom : BeamGeometry

    Returns
    -------
    f, dxf, dyf : complex ndarrays, broadcast shape of (x, y)

    The per-mode pieces share one complex-Gaussian envelope and one Hermite
    recurrence table, which is what makes the quadrature grids cheap.
    """
    if len(modes) == 0:
        raise ValueError("empty superposition")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = float(z)
    k = geom.k
    L = geom.rayleigh_range
    w = geom.w0 * math.sqrt(1.0 + (z / L) ** 2)
    zc = z - 1j * L
    gouy = math.atan2(z, L)

    u = (_SQRT2 / w) * x
    v = (_SQRT2 / w) * y
    nmax = max(n for (n, _), _ in modes.items())
    mmax = max(m for (_, m), _ in modes.items())
    hx = _hermite_table(nmax, u)
    hy = _hermite_table(mmax, v)

    envelope = np.exp((0.5j * k / zc) * (x * x + y * y))
    radial = (1j * k / zc)  # d(envelope)/dx = radial * x * envelope

    f = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=complex)
    fx = np.zeros_like(f)
    fy = np.zeros_like(f)
    for (n, m), c in modes.items():
        cnm = c * _mode_scale(n, m) * cmath.exp(-1j * (n + m + 1) * gouy)
        f = f + cnm * (hx[n] * hy[m])
        dhx = (2.0 * n) * hx[n - 1] if n else 0.0
        dhy = (2.0 * m) * hy[m - 1] if m else 0.0
        fx = fx + cnm * ((dhx * (_SQRT2 / w) + hx[n] * (radial * x)) * hy[m])
        fy = fy + cnm * ((dhy * (_SQRT2 / w) + hy[m] * (radial * y)) * hx[n])

    base = (math.sqrt(2.0 / math.pi) / w) * envelope
    return base * f, base * fx, base * fy


def mode_amplitude(n: int, m: int, point: Point3, geom: BeamGeometry) -> complex:
    """psi_nm at a single point."""
    single = ModeSuperposition({(n, m): 1.0}, max_order=max(n, m, 8))
    f, _, _ = evaluate_superposition(
        single, np.float64(point.x), np.float64(point.y), point.z, geom
    )
    return complex(f)


def mode_transverse_gradient(n: int, m: int, point: Point3, geom: BeamGeometry):
    """(d/dx psi_nm, d/dy psi_nm) at a single point, analytic."""
    single = ModeSuperposition({(n, m): 1.0}, max_order=max(n, m, 8))
    _, fx, fy = evaluate_superposition(
        single, np.float64(point.x), np.float64(point.y), point.z, geom
    )
    return complex(fx), complex(fy)


def superposition_amplitude_and_gradient(
    modes: ModeSuperposition, point: Point3, geom: BeamGeometry
):
    """(f, dx f, dy f) of a coefficient superposition at a single point."""
    f, fx, fy = evaluate_superposition(
        modes, np.float64(point.x), np.float64(point.y), point.z, geom
    )
    return complex(f), complex(fx), complex(fy)
