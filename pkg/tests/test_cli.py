"""Command-line front end: CSV contracts, config handling, determinism.

Each subcommand runs through cli.main() in-process. Rows are re-derived
through the library API and compared for exact equality, and repeated
runs must produce byte-identical files.
"""

import math

import numpy as np
import pytest

from paraxbeam import (
    BeamGeometry,
    ModeSuperposition,
    PolarizationState,
    QuadratureSpec,
    TiltFrame,
    momenta_numeric,
    tilted_centroid_closed,
    tilted_momenta_numeric,
)
from paraxbeam.cli import main


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    return header, rows


class TestTiltSweep:
    def test_shift_column_matches_closed_form(self, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main([
            "tilt-sweep", "--kw0", "200", "--sigma", "1,-1",
            "--theta", "0.1,0.3,0.6", "--phi", "0", "--z", "0",
            "--out", str(out),
        ])
        assert rc == 0
        header, rows = read_csv(out)
        assert header == [
            "theta_rad", "phi_rad", "sigma", "z_lambdabar",
            "x_centroid_lambdabar", "y_centroid_lambdabar",
            "x_closed_lambdabar", "y_closed_lambdabar",
        ]
        assert len(rows) == 6
        for theta, phi, sigma, z, xc, yc, xcl, ycl in rows:
            want = (sigma / 2) * math.tan(theta)
            assert yc == pytest.approx(want, rel=1e-2)
            assert ycl == pytest.approx(want, rel=1e-15)
            assert abs(xc) <= 1e-9 * 200.0

    def test_rows_recomputable_exactly(self, tmp_path):
        out = tmp_path / "sweep.csv"
        main([
            "tilt-sweep", "--kw0", "200", "--sigma", "1", "--theta", "0.3",
            "--phi", "1.0", "--z", "5000", "--out", str(out),
        ])
        _, rows = read_csv(out)
        theta, phi, sigma, z, xc, yc, xcl, ycl = rows[0]
        geom = BeamGeometry(200.0)
        frame = TiltFrame(theta, phi)
        m = tilted_momenta_numeric(sigma, geom, frame, z, QuadratureSpec())
        closed = tilted_centroid_closed(sigma, frame, z, geom)
        # 17 significant digits round-trip doubles exactly
        assert (xc, yc) == (m.centroid[0], m.centroid[1])
        assert (xcl, ycl) == (closed[0], closed[1])

    def test_rejects_higher_modes(self, capsys):
        rc = main(["tilt-sweep", "--mode", "1,0,1,0", "--sigma", "1"])
        assert rc == 1
        assert "fundamental" in capsys.readouterr().err


class TestMomentsAndCentroid:
    def test_two_routes_agree_in_file(self, tmp_path):
        out = tmp_path / "moments.csv"
        rc = main([
            "moments", "--kw0", "20", "--sigma", "0.5",
            "--mode", "0,0,0.6,0", "--mode", "1,1,0,0.8",
            "--z", "0,200", "--out", str(out),
        ])
        assert rc == 0
        header, rows = read_csv(out)
        i_q = header.index("px_hbar_k")
        i_m = header.index("px_modespace_hbar_k")
        for row in rows:
            quad = np.array(row[i_q:i_q + 6])
            mode = np.array(row[i_m:i_m + 6])
            assert np.max(np.abs(quad - mode)) <= 1e-6 * max(1.0, np.max(np.abs(mode)))

    def test_centroid_matches_library(self, tmp_path):
        out = tmp_path / "cen.csv"
        s = 1 / math.sqrt(2)
        rc = main([
            "centroid", "--kw0", "20", "--sigma", "0",
            "--mode", f"0,0,{s!r},0", "--mode", f"0,1,{s!r},0",
            "--z", "0", "--out", str(out),
        ])
        assert rc == 0
        header, rows = read_csv(out)
        assert header == [
            "z_lambdabar", "sigma", "x_centroid_lambdabar", "y_centroid_lambdabar",
        ]
        assert rows[0][3] == pytest.approx(10.0, rel=1e-12)  # w0/2

    def test_stdout_when_no_out_flag(self, capsys):
        rc = main(["centroid", "--kw0", "20", "--sigma", "0", "--z", "0"])
        assert rc == 0
        text = capsys.readouterr().out
        assert text.startswith("z_lambdabar,sigma,")
        assert len(text.splitlines()) == 2

    def test_alpha_beta_flags(self, tmp_path):
        out = tmp_path / "m.csv"
        s = 1 / math.sqrt(2)
        rc = main([
            "moments", "--kw0", "20",
            "--alpha-re", f"{s!r}", "--beta-im", f"{s!r}",
            "--z", "0", "--out", str(out),
        ])
        assert rc == 0
        _, rows = read_csv(out)
        sigma_col = rows[0][1]
        assert sigma_col == pytest.approx(1.0, abs=5e-16)


class TestDensityGrid:
    def test_vortex_null_and_pgm(self, tmp_path):
        out = tmp_path / "grid.txt"
        s = 1 / math.sqrt(2)
        rc = main([
            "density-grid", "--kw0", "20",
            "--mode", f"1,0,{s!r},0", "--mode", f"0,1,0,{s!r}",
            "--z", "0", "--nodes", "41", "--half-width-factor", "5",
            "--out", str(out),
        ])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 41 * 41
        triplets = [[float(v) for v in line.split()] for line in lines]
        center = [t for t in triplets if t[0] == 0.0 and t[1] == 0.0]
        assert center == [[0.0, 0.0, 0.0]]  # on-axis null
        pgm = (tmp_path / "grid.pgm").read_bytes()
        assert pgm.startswith(b"P5\n41 41\n255\n")
        pixels = np.frombuffer(pgm[len(b"P5\n41 41\n255\n"):], dtype=np.uint8)
        assert pixels.shape == (41 * 41,)
        img = pixels.reshape(41, 41)
        assert img[20, 20] == 0  # dark core
        assert img.max() == 255  # normalized to the ring peak

    def test_gaussian_peak_centered(self, tmp_path):
        out = tmp_path / "g.txt"
        rc = main([
            "density-grid", "--kw0", "20", "--z", "0", "--nodes", "21",
            "--half-width-factor", "5", "--out", str(out),
        ])
        assert rc == 0
        img = np.frombuffer(
            (tmp_path / "g.pgm").read_bytes()[len(b"P5\n21 21\n255\n"):],
            dtype=np.uint8,
        ).reshape(21, 21)
        assert img[10, 10] == 255

    def test_requires_out(self, capsys):
        assert main(["density-grid", "--kw0", "20", "--z", "0"]) == 1
        assert "--out" in capsys.readouterr().err


class TestConfigFile:
    def test_config_supplies_everything(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        out = tmp_path / "out.csv"
        cfg.write_text(
            "# comment line\n"
            "experiment = tilt-sweep\n"
            "beam.kw0 = 200\n"
            "beam.sigma = 1\n"
            "frame.theta = 0.3\n"
            "frame.phi = 0\n"
            "sweep.z = 0\n"
            f"output.path = {out}\n"
        )
        assert main(["tilt-sweep", "--config", str(cfg)]) == 0
        _, rows = read_csv(out)
        assert len(rows) == 1
        assert rows[0][0] == 0.3

    def test_flags_override_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("beam.kw0 = 100\nbeam.sigma = 1\n")
        out = tmp_path / "o.csv"
        rc = main([
            "centroid", "--config", str(cfg), "--kw0", "20",
            "--z", "0", "--out", str(out),
        ])
        assert rc == 0

    def test_mode_list_in_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        out = tmp_path / "o.csv"
        s = 1 / math.sqrt(2)
        cfg.write_text(
            "beam.kw0 = 20\n"
            "beam.sigma = 0\n"
            f"beam.mode = 0,0,{s!r},0 ; 1,0,{s!r},0\n"
            "sweep.z = 0\n"
        )
        assert main(["centroid", "--config", str(cfg), "--out", str(out)]) == 0
        _, rows = read_csv(out)
        assert rows[0][2] == pytest.approx(10.0, rel=1e-12)  # <x> = w0/2

    def test_experiment_mismatch(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("experiment = verify\n")
        assert main(["moments", "--config", str(cfg)]) == 1
        assert "experiment" in capsys.readouterr().err

    def test_malformed_line(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("beam.kw0 20\n")
        assert main(["moments", "--config", str(cfg)]) == 1
        assert "key = value" in capsys.readouterr().err

    def test_missing_config_is_io_error(self, tmp_path):
        assert main(["moments", "--config", str(tmp_path / "nope.cfg")]) == 2


class TestExitCodes:
    def test_validation_failures(self, capsys):
        assert main(["centroid", "--sigma", "2"]) == 1
        assert "helicity" in capsys.readouterr().err
        assert main(["centroid", "--nodes", "20"]) == 1
        assert "odd" in capsys.readouterr().err
        assert main(["centroid", "--kw0", "5"]) == 1
        err = capsys.readouterr().err
        assert "paraxial" in err or "spread" in err
        assert main(["centroid", "--sigma", "1", "--alpha-re", "1"]) == 1
        capsys.readouterr()
        assert main(["centroid", "--mode", "0,0,1"]) == 1
        capsys.readouterr()
        assert main(["centroid", "--mode", "0,0,1,0", "--mode", "0,0,0,1"]) == 1
        capsys.readouterr()
        assert main(["centroid", "--sigma", "1,0"]) == 1  # needs exactly one
        capsys.readouterr()
        assert main(["nonsense"]) == 1
        capsys.readouterr()

    def test_io_failure(self, capsys):
        rc = main([
            "centroid", "--kw0", "20", "--z", "0",
            "--out", "/nonexistent_dir_xyz/file.csv",
        ])
        assert rc == 2
        capsys.readouterr()


class TestDeterminism:
    def test_sweep_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = [
            "tilt-sweep", "--kw0", "200", "--sigma", "1,-1,0",
            "--theta", "0.1,0.6", "--phi", "0,1.0", "--z", "0,5000",
        ]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_moments_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = [
            "moments", "--kw0", "20", "--sigma", "0.3",
            "--mode", "0,0,0.6,0", "--mode", "2,1,0,0.8", "--z", "0,100,500",
        ]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_density_grid_byte_identical(self, tmp_path):
        args = [
            "density-grid", "--kw0", "20", "--z", "30", "--nodes", "21",
        ]
        assert main(args + ["--out", str(tmp_path / "a.txt")]) == 0
        assert main(args + ["--out", str(tmp_path / "b.txt")]) == 0
        assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
        assert (tmp_path / "a.pgm").read_bytes() == (tmp_path / "b.pgm").read_bytes()
