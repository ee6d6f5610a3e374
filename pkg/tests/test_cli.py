import json
import math

import pytest

from paecs.analytic import entropy
from paecs.cli import main
from paecs.params import Family, PaecsSpec

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run_cli(*argv):
    return main(list(argv))


class TestEntropyScan:
    def test_default_grid_shape(self, tmp_path):
        out = tmp_path / "scan.csv"
        code = run_cli(
            "entropy-scan", "--family", "psi1-",
            "--mn", "0,0", "--mn", "2,1", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "alpha,m,n,lambda_plus,lambda_minus,entropy_bits"
        assert len(lines) == 1 + 121 * 2

    def test_degenerate_rows_are_marked_not_dropped(self, tmp_path):
        out = tmp_path / "scan.csv"
        run_cli(
            "entropy-scan", "--family", "psi2-", "--alpha", "0:1:3",
            "--mn", "1,1", "--out", str(out),
        )
        lines = out.read_text().splitlines()
        assert len(lines) == 4
        assert lines[1] == "0.0,1,1,degenerate,degenerate,degenerate"
        assert "degenerate" not in lines[2]

    def test_row_ordering_alpha_outer_pair_inner(self, tmp_path):
        out = tmp_path / "scan.csv"
        run_cli(
            "entropy-scan", "--family", "psi1+", "--alpha", "0.5:1:2",
            "--mn", "0,0", "--mn", "1,0", "--out", str(out),
        )
        rows = [line.split(",")[:3] for line in out.read_text().splitlines()[1:]]
        assert rows == [
            ["0.5", "0", "0"], ["0.5", "1", "0"],
            ["1.0", "0", "0"], ["1.0", "1", "0"],
        ]

    def test_values_match_library_calls(self, tmp_path):
        out = tmp_path / "scan.csv"
        run_cli(
            "entropy-scan", "--family", "psi1+", "--alpha", "1.0",
            "--mn", "0,0", "--out", str(out),
        )
        row = out.read_text().splitlines()[1].split(",")
        res = entropy(PaecsSpec(Family.PSI1_PLUS, 1.0, 0, 0))
        assert row[3] == repr(res.lambda_plus)
        assert row[4] == repr(res.lambda_minus)
        assert row[5] == repr(res.bits)

    def test_byte_identical_reruns(self, tmp_path):
        out_a = tmp_path / "a.csv"
        out_b = tmp_path / "b.csv"
        args = ("entropy-scan", "--family", "psi1-", "--alpha", "0:2:41",
                "--mn", "3,1")
        run_cli(*args, "--out", str(out_a))
        run_cli(*args, "--out", str(out_b))
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_json_format(self, tmp_path):
        out = tmp_path / "scan.json"
        run_cli(
            "entropy-scan", "--family", "psi1-", "--alpha", "0:1:3",
            "--mn", "1,1", "--format", "json", "--out", str(out),
        )
        payload = json.loads(out.read_text())
        assert payload["columns"][0] == "alpha"
        assert len(payload["rows"]) == 3
        assert payload["rows"][0]["entropy_bits"] == "degenerate"
        assert payload["rows"][2]["alpha"] == 1.0

    def test_figure_rendering(self, tmp_path):
        out = tmp_path / "scan.csv"
        fig = tmp_path / "scan.png"
        code = run_cli(
            "entropy-scan", "--family", "psi1-", "--alpha", "0:2:11",
            "--mn", "0,0", "--out", str(out), "--fig", str(fig),
        )
        assert code == 0
        assert fig.read_bytes()[:8] == PNG_MAGIC

    def test_missing_mn_is_config_error(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("entropy-scan", "--family", "psi1+")
        assert excinfo.value.code == 2

    def test_bad_family_is_config_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("entropy-scan", "--family", "psi3+", "--mn", "0,0")
        assert excinfo.value.code == 2

    def test_single_step_range_is_config_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli(
                "entropy-scan", "--family", "psi1+", "--alpha", "0:3:1",
                "--mn", "0,0",
            )
        assert excinfo.value.code == 2


class TestEntropyVsM:
    def test_rows_per_n_with_m_inner(self, tmp_path):
        out = tmp_path / "vsm.csv"
        code = run_cli(
            "entropy-vs-m", "--family", "psi1-", "--alpha", "0.2",
            "--n", "0,1", "--m-max", "3", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "m,n,entropy_bits"
        starts = [line.split(",")[:2] for line in lines[1:]]
        assert starts == [
            ["0", "0"], ["1", "0"], ["2", "0"], ["3", "0"],
            ["0", "1"], ["1", "1"], ["2", "1"], ["3", "1"],
        ]

    def test_agrees_with_entropy_scan_at_same_point(self, tmp_path):
        vsm = tmp_path / "vsm.csv"
        scan = tmp_path / "scan.csv"
        run_cli(
            "entropy-vs-m", "--family", "psi1+", "--alpha", "0.2",
            "--n", "0", "--m-max", "0", "--out", str(vsm),
        )
        run_cli(
            "entropy-scan", "--family", "psi1+", "--alpha", "0.2",
            "--mn", "0,0", "--out", str(scan),
        )
        vsm_bits = vsm.read_text().splitlines()[1].split(",")[2]
        scan_bits = scan.read_text().splitlines()[1].split(",")[5]
        assert vsm_bits == scan_bits

    def test_argmax_feature_visible_in_output(self, tmp_path):
        out = tmp_path / "vsm.csv"
        run_cli(
            "entropy-vs-m", "--family", "psi1-", "--alpha", "0.2",
            "--n", "4", "--m-max", "20", "--out", str(out),
        )
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        bits = [float(r[2]) for r in rows]
        assert bits.index(max(bits)) == 4


class TestQfunc:
    def test_defaults_header_and_size(self, tmp_path):
        out = tmp_path / "q.csv"
        code = run_cli(
            "qfunc", "--family", "psi1+", "--alpha2", "0.05",
            "--mn", "2,1", "--range", "-4:4", "--points", "21",
            "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# family,")
        assert lines[2] == "axis1,axis2,q_value"
        assert len(lines) == 3 + 21 * 21

    def test_json_output(self, tmp_path):
        out = tmp_path / "q.json"
        run_cli(
            "qfunc", "--family", "psi2+", "--alpha2", "0.5",
            "--mn", "0,0", "--points", "9", "--format", "json",
            "--out", str(out),
        )
        payload = json.loads(out.read_text())
        assert payload["family"] == "psi2+"
        assert payload["m"] == 0
        assert len(payload["values"]) == 9

    def test_alpha_option_sets_amplitude_directly(self, tmp_path):
        out = tmp_path / "q.json"
        run_cli(
            "qfunc", "--family", "psi1+", "--alpha", "0.5",
            "--mn", "0,0", "--points", "5", "--format", "json",
            "--out", str(out),
        )
        payload = json.loads(out.read_text())
        assert payload["alpha_re"] == 0.5

    def test_alpha_and_alpha2_together_rejected(self, tmp_path):
        code = run_cli(
            "qfunc", "--family", "psi1+", "--alpha", "0.5",
            "--alpha2", "0.25", "--mn", "0,0", "--out", str(tmp_path / "q.csv"),
        )
        assert code == 2

    def test_negative_alpha2_rejected(self, tmp_path):
        code = run_cli(
            "qfunc", "--family", "psi1+", "--alpha2", "-0.1",
            "--mn", "0,0", "--out", str(tmp_path / "q.csv"),
        )
        assert code == 2

    def test_figure_rendering(self, tmp_path):
        fig = tmp_path / "q.png"
        code = run_cli(
            "qfunc", "--family", "psi1+", "--alpha2", "0.05",
            "--mn", "0,0", "--points", "15",
            "--out", str(tmp_path / "q.csv"), "--fig", str(fig),
        )
        assert code == 0
        assert fig.read_bytes()[:8] == PNG_MAGIC

    def test_imaginary_axis_slice(self, tmp_path):
        out = tmp_path / "q.json"
        code = run_cli(
            "qfunc", "--family", "psi1+", "--alpha2", "0.5",
            "--mn", "0,0", "--points", "7", "--axes", "im_z1,im_z2",
            "--fixed", "0.5,-0.5", "--format", "json", "--out", str(out),
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["slice"]["axis_1"] == "im_z1"
        assert payload["slice"]["fixed_values"] == [0.5, -0.5]


class TestState:
    def test_dump_round_trip_fields(self, tmp_path):
        out = tmp_path / "state.json"
        code = run_cli(
            "state", "--family", "psi2-", "--alpha", "1.0",
            "--mn", "3,2", "--out", str(out),
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["family"] == "psi2-"
        assert payload["m"] == 3 and payload["n"] == 2
        assert len(payload["coeffs"]) == payload["dim_a"] * payload["dim_b"]
        total = sum(re * re + im * im for re, im in payload["coeffs"])
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_degenerate_state_is_config_error(self, tmp_path):
        code = run_cli(
            "state", "--family", "psi1-", "--alpha", "0",
            "--mn", "0,0", "--out", str(tmp_path / "state.json"),
        )
        assert code == 2

    def test_truncation_cap_is_numerical_error(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PAECS_MAX_DIM", "8")
        code = run_cli(
            "state", "--family", "psi1+", "--alpha", "2.5",
            "--mn", "4,4", "--out", str(tmp_path / "state.json"),
        )
        assert code == 3


class TestVerify:
    def test_quick_run_passes_and_writes_report(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = run_cli("verify", "--quick", "--out", str(out))
        assert code == 0
        captured = capsys.readouterr().out
        assert "overall: PASS" in captured
        payload = json.loads(out.read_text())
        assert payload["overall_pass"] is True
        assert len(payload["checks"]) == 12

    def test_perturbed_run_fails(self, tmp_path, capsys):
        code = run_cli("verify", "--quick", "--perturb", "1e-6")
        assert code == 1
        assert "overall: FAIL" in capsys.readouterr().out
