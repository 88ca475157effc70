"""Batch front end: sweeps and verification as deterministic CSV / graymap files.

Subcommands
-----------
moments       integrated P, J and centroid per z plane, quadrature and
              mode-space routes side by side
centroid      barycenter per z plane
tilt-sweep    tilted-frame barycenter over theta x phi x sigma x z, numeric
              next to the closed form
density-grid  p_z sampled on a uniform grid: text triplets plus a binary PGM
verify        run the named invariant battery, exit 0 only if all pass

Exit codes: 0 success, 1 validation failure, 2 I/O failure. All numeric
output is printed with 17 significant digits so files are byte-identical
across repeated runs and floats round-trip exactly.

A config file may supply any parameter as flat `key = value` lines with
dotted sections (beam.kw0, beam.sigma, beam.mode, frame.theta, frame.phi,
sweep.z, quadrature.nodes, quadrature.half_width_factor, output.path,
experiment); command-line flags override config values. Lines starting
with # are comments. beam.mode holds semicolon-separated n,m,re,im quads.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .modes import (
    BeamGeometry,
    ModeSuperposition,
    PolarizationState,
    evaluate_superposition,
    helicity,
)
from .quadrature import QuadratureSpec, momenta_numeric
from .operators import angular_momentum_modespace, momentum_modespace
from .tilt import TiltFrame, tilted_centroid_closed, tilted_momenta_numeric
from . import _checks

__all__ = ["main", "write_pgm", "write_text_grid"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # route usage problems through the validation exit code
        raise ValueError(message)


def _float_list(chunks):
    values = []
    for chunk in chunks:
        for piece in chunk.split(","):
            piece = piece.strip()
            if piece:
                values.append(float(piece))
    return values


def _parse_mode_entry(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"mode must be 'n,m,re,im', got {text!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
        c = complex(float(parts[2]), float(parts[3]))
    except ValueError:
        raise ValueError(f"mode must be 'n,m,re,im' with numeric fields, got {text!r}")
    return (n, m), c


def load_config(path: str) -> dict:
    """Flat key = value file with dotted keys; # starts a comment line."""
    cfg = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            cfg[key.strip()] = value.strip()
    return cfg


def _add_common_flags(sub):
    sub.add_argument("--kw0", type=float, default=None,
                     help="dimensionless waist k*w0 (default 200)")
    sub.add_argument("--sigma", action="append", default=None,
                     help="helicity; repeat or comma-separate for sweeps")
    sub.add_argument("--alpha-re", type=float, default=None)
    sub.add_argument("--alpha-im", type=float, default=None)
    sub.add_argument("--beta-re", type=float, default=None)
    sub.add_argument("--beta-im", type=float, default=None)
    sub.add_argument("--mode", action="append", default=None, metavar="N,M,RE,IM",
                     help="mode coefficient, repeatable (default fundamental)")
    sub.add_argument("--theta", action="append", default=None,
                     help="tilt polar angle(s), radians")
    sub.add_argument("--phi", action="append", default=None,
                     help="tilt azimuth(s), radians")
    sub.add_argument("--z", action="append", default=None,
                     help="observation plane height(s), units of 1/k")
    sub.add_argument("--nodes", type=int, default=None,
                     help="quadrature / image nodes per axis (odd, >= 21)")
    sub.add_argument("--half-width-factor", type=float, default=None,
                     help="integration half-width in spot sizes (>= 5)")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--config", default=None, help="key = value config file")


def build_parser() -> _Parser:
    parser = _Parser(prog="paraxbeam", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="experiment", required=True)
    for name, text in [
        ("moments", "integrated momenta per plane"),
        ("centroid", "barycenter per plane"),
        ("tilt-sweep", "tilted-frame barycenter sweep"),
        ("density-grid", "p_z heatmap as text grid + PGM"),
        ("verify", "run the invariant battery"),
    ]:
        sub = subs.add_parser(name, help=text)
        _add_common_flags(sub)
    return parser


class RunConfig:
    """Fully resolved parameters of one run; validates as it builds."""

    def __init__(self, args):
        cfg = load_config(args.config) if args.config else {}
        wanted = cfg.get("experiment")
        if wanted is not None and wanted != args.experiment:
            raise ValueError(
                f"config requests experiment {wanted!r} but the command line "
                f"selected {args.experiment!r}"
            )
        self.experiment = args.experiment

        def pick(flag_value, key, fallback=None):
            if flag_value is not None:
                return flag_value
            if key in cfg:
                return cfg[key]
            return fallback

        self.geometry = BeamGeometry(w0=float(pick(args.kw0, "beam.kw0", 200.0)))

        nodes = int(pick(args.nodes, "quadrature.nodes", 201))
        half = float(pick(args.half_width_factor, "quadrature.half_width_factor", 8.0))
        self.quadrature = QuadratureSpec(half_width_factor=half, nodes_per_axis=nodes)

        mode_entries = args.mode
        if mode_entries is None and "beam.mode" in cfg:
            mode_entries = [p for p in cfg["beam.mode"].split(";") if p.strip()]
        if mode_entries is None:
            mode_entries = ["0,0,1,0"]
        coeffs = {}
        for entry in mode_entries:
            nm, c = _parse_mode_entry(entry)
            if nm in coeffs:
                raise ValueError(f"mode ({nm[0]},{nm[1]}) given more than once")
            coeffs[nm] = c
        self.modes = ModeSuperposition(coeffs)

        alpha_parts = [
            pick(args.alpha_re, "beam.alpha_re"), pick(args.alpha_im, "beam.alpha_im"),
            pick(args.beta_re, "beam.beta_re"), pick(args.beta_im, "beam.beta_im"),
        ]
        sigma_chunks = args.sigma
        if sigma_chunks is None and "beam.sigma" in cfg:
            sigma_chunks = [cfg["beam.sigma"]]
        if any(p is not None for p in alpha_parts):
            if sigma_chunks is not None:
                raise ValueError(
                    "give either --sigma or the alpha/beta components, not both"
                )
            ar, ai, br, bi = (float(p) if p is not None else 0.0 for p in alpha_parts)
            self.polarizations = [PolarizationState(complex(ar, ai), complex(br, bi))]
            self.sigmas = [helicity(self.polarizations[0])]
        elif sigma_chunks is not None:
            self.sigmas = _float_list(sigma_chunks)
            if not self.sigmas:
                raise ValueError("--sigma given without values")
            self.polarizations = [PolarizationState.from_helicity(s) for s in self.sigmas]
        else:
            self.sigmas = [0.0]
            self.polarizations = [PolarizationState.linear_x()]

        self.thetas = _float_list(args.theta) if args.theta else (
            _float_list([cfg["frame.theta"]]) if "frame.theta" in cfg else [0.3])
        self.phis = _float_list(args.phi) if args.phi else (
            _float_list([cfg["frame.phi"]]) if "frame.phi" in cfg else [0.0])
        self.heights = _float_list(args.z) if args.z else (
            _float_list([cfg["sweep.z"]]) if "sweep.z" in cfg else [0.0])
        for name, values in (("theta", self.thetas), ("phi", self.phis),
                             ("z", self.heights)):
            if not values:
                raise ValueError(f"--{name} given without values")

        self.out = pick(args.out, "output.path")

    def single_polarization(self) -> PolarizationState:
        if len(self.polarizations) != 1:
            raise ValueError(
                f"{self.experiment} needs exactly one polarization, "
                f"got {len(self.polarizations)} sigma values"
            )
        return self.polarizations[0]


def _fmt(value) -> str:
    return format(float(value), ".17g")


def _emit_csv(out_path, header, rows):
    text = ",".join(header) + "\n"
    for row in rows:
        text += ",".join(_fmt(v) for v in row) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def write_text_grid(path, x, y, values):
    """x y value triplets, row-major from the top image row (max y) down."""
    lines = []
    for i in range(values.shape[0]):
        for j in range(values.shape[1]):
            lines.append(f"{_fmt(x[j])} {_fmt(y[i])} {_fmt(values[i, j])}")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def write_pgm(path, values):
    """Binary P5 graymap, linear in value, 255 at the grid maximum."""
    arr = np.asarray(values, dtype=float)
    vmax = float(arr.max())
    if vmax > 0:
        pixels = np.floor(arr * (255.0 / vmax) + 0.5).astype(np.uint8)
    else:
        pixels = np.zeros(arr.shape, dtype=np.uint8)
    header = f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii")
    with open(path, "wb") as handle:
        handle.write(header + pixels.tobytes())


def _run_moments(run: RunConfig) -> int:
    pol = run.single_polarization()
    geom = run.geometry
    P_ms = momentum_modespace(run.modes, geom)
    J_ms = angular_momentum_modespace(run.modes, geom, helicity(pol))
    header = [
        "z_lambdabar", "sigma",
        "px_hbar_k", "py_hbar_k", "pz_hbar_k",
        "jx_hbar", "jy_hbar", "jz_hbar",
        "x_centroid_lambdabar", "y_centroid_lambdabar",
        "px_modespace_hbar_k", "py_modespace_hbar_k", "pz_modespace_hbar_k",
        "jx_modespace_hbar", "jy_modespace_hbar", "jz_modespace_hbar",
    ]
    rows = []
    for z in run.heights:
        m = momenta_numeric(run.modes, pol, geom, z, run.quadrature)
        rows.append([z, helicity(pol), *m.P, *m.J, *m.centroid, *P_ms, *J_ms])
    _emit_csv(run.out, header, rows)
    return 0


def _run_centroid(run: RunConfig) -> int:
    pol = run.single_polarization()
    header = ["z_lambdabar", "sigma",
              "x_centroid_lambdabar", "y_centroid_lambdabar"]
    rows = []
    for z in run.heights:
        m = momenta_numeric(run.modes, pol, run.geometry, z, run.quadrature)
        rows.append([z, helicity(pol), *m.centroid])
    _emit_csv(run.out, header, rows)
    return 0


def _run_tilt_sweep(run: RunConfig) -> int:
    if [nm for nm, _ in run.modes.items()] != [(0, 0)]:
        raise ValueError(
            "tilt-sweep models the tilted fundamental mode; "
            "drop the --mode flags or give only 0,0"
        )
    geom = run.geometry
    header = [
        "theta_rad", "phi_rad", "sigma", "z_lambdabar",
        "x_centroid_lambdabar", "y_centroid_lambdabar",
        "x_closed_lambdabar", "y_closed_lambdabar",
    ]
    rows = []
    for theta in run.thetas:
        for phi in run.phis:
            frame = TiltFrame(theta, phi)
            for sigma in run.sigmas:
                for z in run.heights:
                    m = tilted_momenta_numeric(sigma, geom, frame, z, run.quadrature)
                    closed = tilted_centroid_closed(sigma, frame, z, geom)
                    rows.append([theta, phi, sigma, z, *m.centroid, *closed])
    _emit_csv(run.out, header, rows)
    return 0


def _run_density_grid(run: RunConfig) -> int:
    if run.out is None:
        raise ValueError("density-grid needs --out (writes a .txt grid and a .pgm)")
    if len(run.heights) != 1:
        raise ValueError("density-grid samples a single plane; give one --z")
    geom = run.geometry
    z = run.heights[0]
    n = run.quadrature.nodes_per_axis
    half = run.quadrature.half_width_factor * float(geom.spot_size(z))
    axis = np.linspace(-half, half, n)
    X = axis[None, :]
    Y = axis[::-1][:, None]  # top image row carries max y
    f, _, _ = evaluate_superposition(run.modes, X, Y, z, geom)
    pz = (f * np.conj(f)).real
    out = run.out
    pgm_path = out[: out.rfind(".")] + ".pgm" if "." in out.rsplit("/", 1)[-1] else out + ".pgm"
    write_text_grid(out, axis, axis[::-1], pz)
    write_pgm(pgm_path, pz)
    return 0


def _run_verify(run: RunConfig) -> int:
    results = _checks.run_all()
    lines = _checks.report_lines(results)
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if run.out is not None:
        with open(run.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return 0 if all(r.passed for r in results) else 1


_RUNNERS = {
    "moments": _run_moments,
    "centroid": _run_centroid,
    "tilt-sweep": _run_tilt_sweep,
    "density-grid": _run_density_grid,
    "verify": _run_verify,
}


def run(config: RunConfig) -> int:
    return _RUNNERS[config.experiment](config)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return run(RunConfig(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
