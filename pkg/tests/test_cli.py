import math

import numpy as np
import pytest

from cvrpkit import (
    ArraySpec,
    ElementModel,
    SphericalMask,
    cvrp,
    prp_preset,
    read_pattern,
    read_sweep_csv,
    rotate_about_y,
    synthesize_eirp,
    to_dbm,
    trp,
    write_pattern,
)
from cvrpkit.cli import cli_main
from cvrpkit.grid import Direction


@pytest.fixture(scope="module")
def pattern_file(tmp_path_factory):
    """Synthesized boresight cosine-array pattern on disk."""
    path = str(tmp_path_factory.mktemp("cli") / "pattern.csv")
    assert cli_main(["synth", "--element", "cosine", "-o", path]) == 0
    return path


def run(capsys, argv):
    code = cli_main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def fmt_power(name, mw):
    """Expected scalar display: 4 decimals, negative zero normalized."""
    dbm = round(to_dbm(mw), 4) + 0.0
    return f"{name}: {dbm:.4f} dBm ({round(mw, 4) + 0.0:.4f} mW)"


class TestSynth:
    def test_file_matches_library(self, pattern_file):
        p = read_pattern(pattern_file)
        ref = synthesize_eirp(ArraySpec(element=ElementModel.COSINE), 1.0).pattern
        np.testing.assert_allclose(p.eirp_theta_mw, ref.eirp_theta_mw, rtol=1e-9)
        assert p.label == ref.label

    def test_beam_flag_sets_scan(self, tmp_path, capsys):
        path = str(tmp_path / "b1.csv")
        code, out, _ = run(capsys, ["synth", "--element", "huygens",
                                    "--beam", "1", "-o", path])
        assert code == 0
        assert "scan -45 deg" in read_pattern(path).label

    def test_invalid_fe_is_domain_error(self, tmp_path, capsys):
        path = str(tmp_path / "x.csv")
        code, _, err = run(capsys, ["synth", "--element", "cosine",
                                    "--fe", "99", "-o", path])
        assert code == 1
        assert "error:" in err

    def test_unknown_element_is_usage_error(self, tmp_path, capsys):
        code, _, _ = run(capsys, ["synth", "--element", "patch",
                                  "-o", str(tmp_path / "x.csv")])
        assert code == 2


class TestScalarCommands:
    def test_trp_output_format(self, pattern_file, capsys):
        code, out, _ = run(capsys, ["trp", pattern_file])
        assert code == 0
        assert out == "TRP: 0.0000 dBm (1.0000 mW)\n"

    def test_trp_matches_library(self, pattern_file, capsys):
        p = read_pattern(pattern_file)
        code, out, _ = run(capsys, ["trp", pattern_file])
        assert out.strip() == fmt_power("TRP", trp(p))

    def test_prp_preset_matches_library(self, pattern_file, capsys):
        p = read_pattern(pattern_file)
        expect = prp_preset(p, "uhrp")
        code, out, _ = run(capsys, ["prp", pattern_file, "--preset", "uhrp"])
        assert code == 0
        assert out.strip() == fmt_power("PRP[uhrp]", expect)

    def test_prp_requires_band_or_preset(self, pattern_file, capsys):
        code, _, err = run(capsys, ["prp", pattern_file])
        assert code == 1
        assert "preset" in err

    def test_cvrp_cap_matches_library(self, pattern_file, capsys):
        p = read_pattern(pattern_file)
        expect = cvrp(p, SphericalMask.cap(Direction(0, 0), 30.0))
        code, out, _ = run(capsys, ["cvrp", pattern_file, "--cap", "30"])
        assert code == 0
        assert f"({expect:.4f} mW)" in out

    def test_cvrp_cap_180_equals_trp(self, pattern_file, capsys):
        _, out_cap, _ = run(capsys, ["cvrp", pattern_file, "--cap", "180"])
        _, out_trp, _ = run(capsys, ["trp", pattern_file])
        assert out_cap.split(":")[1] == out_trp.split(":")[1]

    def test_cvrp_window(self, pattern_file, capsys):
        p = read_pattern(pattern_file)
        expect = cvrp(p, SphericalMask.window(0.0, 30.0, 0.0, 360.0))
        code, out, _ = run(capsys, ["cvrp", pattern_file,
                                    "--window", "0,30,0,360"])
        assert code == 0
        assert f"({expect:.4f} mW)" in out

    def test_cvrp_point(self, pattern_file, capsys):
        code, out, _ = run(capsys, ["cvrp", pattern_file, "--point", "0,0"])
        assert code == 0
        assert "CVRP[point]" in out

    def test_cvrp_requires_one_region(self, pattern_file, capsys):
        code, _, err = run(capsys, ["cvrp", pattern_file])
        assert code == 1
        code, _, err = run(capsys, ["cvrp", pattern_file, "--cap", "30",
                                    "--point", "0,0"])
        assert code == 1

    def test_missing_file_is_domain_error(self, capsys):
        code, _, err = run(capsys, ["trp", "/nonexistent/nope.csv"])
        assert code == 1
        assert "error:" in err


class TestPipelines:
    def test_rotate_then_sweep(self, tmp_path, capsys):
        src = str(tmp_path / "scan.csv")
        rot = str(tmp_path / "aligned.csv")
        swp = str(tmp_path / "sweep.csv")
        assert cli_main(["synth", "--element", "cosine", "--scan", "-45",
                         "-o", src]) == 0
        assert cli_main(["rotate", src, "--about-y", "45", "-o", rot]) == 0
        assert cli_main(["sweep", rot, "--center", "0,0",
                         "--fovs", "180,90,30,0", "-o", swp]) == 0
        capsys.readouterr()
        sweep = read_sweep_csv(swp)
        assert sweep.fov_deg == (180.0, 90.0, 30.0, 0.0)
        # same numbers as the pure library pipeline
        spec = ArraySpec(element=ElementModel.COSINE, scan_angle_deg=-45.0)
        p = rotate_about_y(synthesize_eirp(spec, 1.0).pattern, 45.0)
        from cvrpkit import cvrp_sweep
        lib = cvrp_sweep(p, Direction(0, 0), (180.0, 90.0, 30.0, 0.0))
        np.testing.assert_allclose(sweep.cvrp_mw, lib.cvrp_mw, rtol=1e-9)

    def test_diagnose_flags_fault(self, tmp_path, capsys):
        ref = str(tmp_path / "ref.csv")
        bad = str(tmp_path / "bad.csv")
        for path, fe in ((ref, ""), (bad, "14,7")):
            pat = path + ".pat"
            assert cli_main(["synth", "--element", "cosine", "--scan", "-45",
                             "--fe", fe, "-o", pat]) == 0
            rot = path + ".rot"
            assert cli_main(["rotate", pat, "--about-y", "45", "-o", rot]) == 0
            assert cli_main(["sweep", rot, "-o", path]) == 0
        out_csv = str(tmp_path / "cmp.csv")
        code, out, _ = run(capsys, ["diagnose", "--ref", ref, "--test", bad,
                                    "-o", out_csv])
        assert code == 0
        assert "FLAGGED" in out
        header = open(out_csv).readline().strip()
        assert header == "fov_deg,ref_dbm,test_dbm,delta_db,flagged"

    def test_diagnose_self_clean(self, tmp_path, capsys):
        swp = str(tmp_path / "s.csv")
        pat = str(tmp_path / "p.csv")
        assert cli_main(["synth", "--element", "huygens", "-o", pat]) == 0
        assert cli_main(["sweep", pat, "-o", swp]) == 0
        code, out, _ = run(capsys, ["diagnose", "--ref", swp, "--test", swp])
        assert code == 0
        assert "not flagged" in out
        assert "max |delta|: 0.0000 dB" in out

    def test_repro_fig5_writes_six_sweeps(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["repro-fig5", "--outdir", str(tmp_path)])
        assert code == 0
        files = sorted(f.name for f in tmp_path.iterdir())
        assert len(files) == 6
        assert "fig5_cosine_scan-45.csv" in files
        assert "fig5_huygens_scan+0.csv" in files
        for f in files:
            s = read_sweep_csv(str(tmp_path / f))
            assert len(s.entries) == 16

    def test_repro_fig6_flags_default_fault(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["repro-fig6", "--scan", "-45",
                                    "--outdir", str(tmp_path)])
        assert code == 0
        assert "FLAGGED" in out
        names = sorted(f.name for f in tmp_path.iterdir())
        assert names == ["fig6_cosine_scan-45_all_on.csv",
                         "fig6_cosine_scan-45_comparison.csv",
                         "fig6_cosine_scan-45_fe.csv"]


class TestDeterminism:
    def test_synth_reproducible(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for path in (a, b):
            assert cli_main(["synth", "--element", "cosine", "--scan", "-4.5",
                             "-o", str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_fill_round_trip_identity(self, tmp_path, pattern_file):
        out = tmp_path / "filled.csv"
        assert cli_main(["fill", pattern_file, "-o", str(out)]) == 0
        assert out.read_bytes() == open(pattern_file, "rb").read()
