"""End-to-end drive of the command-line interface via ``main(argv)``."""

import logging
import math

import pytest
from conftest import read_report_csv

from rindler_teleport import squeeze_param
from rindler_teleport.cli import ENV_OUTDIR, main


class TestFig4:
    def test_shape_and_values(self, tmp_path):
        out = tmp_path / "fig4.csv"
        assert main(["fig4", "--a-steps", "10", "--out", str(out)]) == 0
        meta, header, rows = read_report_csv(out)
        assert header == ["omega0", "a", "variance_total", "thermal", "qnl", "status"]
        curves = sorted({row[0] for row in rows}, key=float)
        assert len(curves) == 7 and len(rows) == 70
        assert all(row[5] == "ok" for row in rows)
        assert all(float(row[4]) == 1.0 for row in rows)  # coherent payload is at the noise unit
        for w0 in curves:
            sub = [row for row in rows if row[0] == w0]
            low_a = min(sub, key=lambda row: float(row[1]))
            assert abs(float(low_a[2]) - 3.0) <= 1e-2

    def test_reruns_are_byte_identical(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["fig4", "--a-steps", "6", "--omega0", "1.0"]
        assert main(argv + ["--out", str(out1)]) == 0
        assert main(argv + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_single_curve_flag(self, tmp_path):
        out = tmp_path / "one.csv"
        assert main(["fig4", "--a-steps", "5", "--omega0", "2.5", "--out", str(out)]) == 0
        meta, _, rows = read_report_csv(out)
        assert meta["omega0_curves"] == "2.5"
        assert {row[0] for row in rows} == {"2.5"}
        assert len(rows) == 5


class TestFig5:
    def test_columns_and_low_acceleration_limits(self, tmp_path):
        out = tmp_path / "fig5.csv"
        assert main(["fig5", "--a-steps", "10", "--out", str(out)]) == 0
        _, header, rows = read_report_csv(out)
        assert header == [
            "a", "thermal", "delta_phi0", "delta_phi90", "total_phi0", "total_phi90", "status",
        ]
        first = min(rows, key=lambda row: float(row[0]))
        assert abs(float(first[1]) - 2.0) <= 1e-3
        assert abs(float(first[2]) - math.e) <= 1e-2  # default payload squeezing 0.5
        assert abs(float(first[3]) - 1.0 / math.e) <= 1e-2
        for row in rows:
            assert float(row[4]) == pytest.approx(float(row[1]) + float(row[2]), rel=1e-9)

    def test_zero_squeezing_collapses_deltas(self, tmp_path):
        out = tmp_path / "rs0.csv"
        assert main(["fig5", "--a-steps", "4", "--rs", "0", "--out", str(out)]) == 0
        _, _, rows = read_report_csv(out)
        for row in rows:
            assert float(row[2]) == 1.0
            assert float(row[3]) == 1.0


class TestSweep:
    def test_displaced_with_oracle(self, tmp_path):
        out = tmp_path / "sw.csv"
        argv = [
            "sweep", "--scenario", "displaced", "--a-steps", "4",
            "--oracle", "--bins", "64", "--out", str(out),
        ]
        assert main(argv) == 0
        _, header, rows = read_report_csv(out)
        assert header == [
            "a", "omega0", "sigma", "r_s", "phi", "r_omega",
            "variance_total", "thermal_noise", "qnl_or_decoherence", "purity_product",
            "oracle_deviation", "status",
        ]
        assert len(rows) == 4
        for row in rows:
            assert row[11] == "ok"
            assert row[3] == "" and row[4] == ""  # no payload squeezing knobs in play
            assert float(row[10]) <= 1e-6
            total = float(row[6])
            assert total == pytest.approx(float(row[7]) + float(row[8]), rel=1e-9)
            assert float(row[9]) == pytest.approx(total**2, rel=1e-9)

    def test_squeezed_rows_filled(self, tmp_path):
        out = tmp_path / "sq.csv"
        argv = [
            "sweep", "--scenario", "squeezed", "--a-steps", "3",
            "--rs", "0.3", "--phi", "0", "--out", str(out),
        ]
        assert main(argv) == 0
        _, _, rows = read_report_csv(out)
        for row in rows:
            assert float(row[3]) == 0.3
            assert float(row[6]) > float(row[7])  # decoherence rides on top of thermal
            assert row[10] == ""  # oracle not requested

    def test_inertial_ignores_oracle_and_matches_closed_form(self, tmp_path, caplog):
        out = tmp_path / "in.csv"
        argv = ["sweep", "--scenario", "inertial", "--a-steps", "5", "--oracle", "--out", str(out)]
        with caplog.at_level(logging.WARNING, logger="rindler_teleport.cli"):
            assert main(argv) == 0
        assert any("ignores" in rec.getMessage() and "oracle" in rec.getMessage()
                   for rec in caplog.records)
        _, _, rows = read_report_csv(out)
        for row in rows:
            assert row[2] == "" and row[3] == "" and row[4] == "" and row[10] == ""
            r_omega = float(row[5])
            assert r_omega == pytest.approx(squeeze_param(1.0, float(row[0])), rel=1e-9)
            expected = 1.0 + 2.0 * math.exp(-2.0 * r_omega)
            assert float(row[6]) == pytest.approx(expected, rel=1e-9)
            assert float(row[9]) == pytest.approx(expected**2, rel=1e-9)


class TestConfigFile:
    def test_file_values_apply_and_flags_win(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("a-steps = 6\nomega0 = 2.0  # overridden by the flag\n")
        out = tmp_path / "f.csv"
        argv = ["fig4", "--config", str(cfg), "--omega0", "1.5", "--out", str(out)]
        assert main(argv) == 0
        meta, _, rows = read_report_csv(out)
        assert meta["omega0_curves"] == "1.5"
        assert len(rows) == 6

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("bogus = 1\n")
        with pytest.raises(SystemExit) as excinfo:
            main(["fig4", "--config", str(cfg)])
        assert excinfo.value.code == 2

    def test_bad_boolean_rejected(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("oracle = maybe\n")
        with pytest.raises(SystemExit) as excinfo:
            main(["sweep", "--config", str(cfg)])
        assert excinfo.value.code == 2

    def test_missing_file_rejected(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["fig4", "--config", str(tmp_path / "absent.cfg")])
        assert excinfo.value.code == 2


class TestOutputLocation:
    def test_env_outdir_used_for_default_names(self, tmp_path, monkeypatch):
        outdir = tmp_path / "reports"
        monkeypatch.setenv(ENV_OUTDIR, str(outdir))
        assert main(["fig5", "--a-steps", "3"]) == 0
        assert (outdir / "fig5_decoherence_vs_acceleration.csv").exists()

    def test_explicit_out_beats_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv(ENV_OUTDIR, str(tmp_path / "ignored"))
        out = tmp_path / "here.csv"
        assert main(["fig5", "--a-steps", "3", "--out", str(out)]) == 0
        assert out.exists()
        assert not (tmp_path / "ignored").exists()


class TestParameterValidation:
    @pytest.mark.parametrize(
        "argv",
        [
            ["fig4", "--a-min", "0"],
            ["fig4", "--a-min", "2", "--a-max", "1"],
            ["fig4", "--a-steps", "0"],
            ["fig4", "--omega0", "-3"],
            ["fig5", "--rs", "-1"],
            ["fig5", "--sigma", "0"],
            ["verify", "--bins", "2"],
        ],
    )
    def test_rejected_with_usage_exit(self, argv):
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        assert excinfo.value.code == 2


class TestVerify:
    def test_passes_and_is_deterministic(self, tmp_path, capsys):
        out1, out2 = tmp_path / "r1.txt", tmp_path / "r2.txt"
        assert main(["verify", "--bins", "64", "--out", str(out1)]) == 0
        assert main(["verify", "--bins", "64", "--out", str(out2)]) == 0
        report = out1.read_text()
        assert out1.read_bytes() == out2.read_bytes()
        assert "result: PASS (5/5 suites)" in report
        assert report.count("\nPASS ") == 5
        assert capsys.readouterr().out.count("result: PASS") == 2

    def test_coarse_grid_fails_with_named_breach(self, tmp_path):
        out = tmp_path / "coarse.txt"
        assert main(["verify", "--bins", "16", "--out", str(out)]) == 1
        report = out.read_text()
        assert "FAIL oracle-vs-closed-form" in report
        assert "result: FAIL (4/5 suites)" in report


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert "rindler-teleport" in capsys.readouterr().out
