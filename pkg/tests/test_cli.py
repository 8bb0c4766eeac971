"""Command-line interface: formats, exit codes, end-to-end subcommands."""

import json
import subprocess
import sys

import pytest

from harmonic4.cli import main

D1_COMPONENTS = ["1", "0", "0", "0", "0", "0", "0", "0", "0"]
IDENTITY = ["1", "0", "0", "0", "1", "0", "0", "0", "1"]


@pytest.fixture
def d1_file(tmp_path):
    path = tmp_path / "d1.json"
    path.write_text(json.dumps({"components": [1, 0, 0, 0, 0, 0, 0, 0, 0]}))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestInvariantsCommand:
    def test_exact_file(self, d1_file, capsys):
        code, out = run(["invariants", "--input", d1_file, "--backend", "exact"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["J2"] == "8/1"
        assert payload["J4"] == "32/1"
        assert payload["K6"] == "128/1"

    def test_cubic_witness_exact(self, capsys):
        argv = ["invariants", "--backend", "exact"]
        for v in ("8", "0", "0", "-4", "0", "5", "5", "3", "0"):
            argv += ["-c", v]
        code, out = run(argv, capsys)
        assert code == 0
        assert json.loads(out)["J3"] == "-6480/1"

    def test_inline_overrides_file(self, d1_file, capsys):
        argv = ["invariants", "--input", d1_file, "--backend", "exact"]
        for v in ["0"] * 9:
            argv += ["-c", v]
        code, out = run(argv, capsys)
        assert code == 0
        assert json.loads(out)["J2"] == "0/1"

    def test_float_output_is_numeric(self, d1_file, capsys):
        code, out = run(["invariants", "--input", d1_file], capsys)
        assert code == 0
        assert json.loads(out)["J2"] == 8.0

    def test_csv_format(self, d1_file, capsys):
        code, out = run(["invariants", "--input", d1_file, "--format", "csv"], capsys)
        assert code == 0
        header, row = out.strip().splitlines()
        assert header == "J2,J3,J4,J5,J6,K6,J7,J8,J9,J10"
        assert row.split(",")[0] == "8.0"

    def test_text_format(self, d1_file, capsys):
        code, out = run(["invariants", "--input", d1_file, "--format", "text"], capsys)
        assert code == 0
        assert "J2 = 8.0" in out

    def test_output_file(self, d1_file, tmp_path, capsys):
        out_path = tmp_path / "result.json"
        code, _ = run(["invariants", "--input", d1_file, "--out", str(out_path)], capsys)
        assert code == 0
        assert json.loads(out_path.read_text())["J4"] == 32.0

    def test_deterministic_output(self, d1_file, capsys):
        _, first = run(["invariants", "--input", d1_file], capsys)
        _, second = run(["invariants", "--input", d1_file], capsys)
        assert first == second

    def test_malformed_json_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _ = run(["invariants", "--input", str(bad)], capsys)
        assert code == 2

    def test_empty_components_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "empty.json"
        bad.write_text(json.dumps({"components": []}))
        code, _ = run(["invariants", "--input", str(bad)], capsys)
        assert code == 2

    def test_exact_backend_rejects_float_components(self, tmp_path, capsys):
        bad = tmp_path / "half.json"
        bad.write_text(json.dumps({"components": [0.5, 0, 0, 0, 0, 0, 0, 0, 0]}))
        code, _ = run(["invariants", "--input", str(bad), "--backend", "exact"], capsys)
        assert code == 2

    def test_missing_tensor_exits_2(self, capsys):
        code, _ = run(["invariants"], capsys)
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _ = run(["invariants", "--input", "/nonexistent/tensor.json"], capsys)
        assert code == 2


class TestRotateCommand:
    def test_identity_echoes_input(self, d1_file, capsys):
        code, out = run(["rotate", "--input", d1_file, "--matrix"] + IDENTITY, capsys)
        assert code == 0
        assert json.loads(out)["components"][0] == 1.0

    def test_reflection_flips_single_three_component(self, capsys):
        argv = ["rotate", "--matrix", "1", "0", "0", "0", "1", "0", "0", "0", "-1"]
        for v in ("0", "0", "1", "0", "0", "0", "0", "0", "0"):
            argv += ["-c", v]
        code, out = run(argv, capsys)
        assert code == 0
        assert json.loads(out)["components"][2] == -1.0

    def test_non_orthogonal_matrix_exits_2(self, d1_file, capsys):
        argv = ["rotate", "--input", d1_file,
                "--matrix", "1", "1", "0", "0", "1", "0", "0", "0", "1"]
        code, _ = run(argv, capsys)
        assert code == 2

    def test_quarter_turn_preserves_invariants(self, d1_file, capsys):
        c = 0.7071067811865476
        argv = ["rotate", "--input", d1_file,
                "--matrix", str(c), str(-c), "0", str(c), str(c), "0", "0", "0", "1"]
        code, out = run(argv, capsys)
        assert code == 0
        from harmonic4 import from_json_dict, invariants

        vec = invariants(from_json_dict(json.loads(out)))
        assert vec.j2 == pytest.approx(8.0, rel=1e-9)
        assert vec.j4 == pytest.approx(32.0, rel=1e-9)


class TestVerifyCommand:
    @pytest.mark.parametrize("suite", ["identity", "parity", "restriction"])
    def test_symbolic_suites_pass(self, suite, capsys):
        code, out = run(["verify", suite], capsys)
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_witnesses_suite(self, capsys):
        code, out = run(["verify", "witnesses"], capsys)
        assert code == 0
        summary = json.loads(out)
        assert summary["suites"]["witnesses"]["passed"] is True
        assert len(summary["suites"]["witnesses"]["checks"]) == 20

    def test_isotropy_suite_small(self, capsys):
        code, out = run(["verify", "isotropy", "--trials", "25", "--seed", "42"], capsys)
        assert code == 0
        summary = json.loads(out)
        assert summary["suites"]["isotropy"]["trials"] == 25

    def test_all_suites(self, capsys):
        code, out = run(["verify", "all", "--trials", "25"], capsys)
        assert code == 0
        summary = json.loads(out)
        assert set(summary["suites"]) == {
            "identity", "parity", "restriction", "isotropy", "witnesses"}
        assert summary["passed"] is True


class TestSolveCommand:
    def test_j8_root(self, capsys):
        code, out = run(["solve", "j8-root"], capsys)
        assert code == 0
        payload = json.loads(out)
        root = payload["solve"]["solution"]["root"]
        assert 0.15 < root < 0.2
        assert payload["solve"]["residual_norm"] <= 1e-10
        assert payload["report"]["passed"] is True

    def test_smith_bao_j6(self, capsys):
        code, out = run(["solve", "smith-bao-j6"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["solve"]["solution"]["D1123"] == pytest.approx(-0.406303, abs=1e-4)
        assert payload["report"]["passed"] is True

    def test_mixed_j6(self, capsys):
        code, out = run(["solve", "mixed-j6"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["solve"]["solution"]["D1223"] == pytest.approx(0.67075, abs=1e-4)


class TestConsoleScript:
    def test_module_entry_point(self, d1_file):
        proc = subprocess.run(
            [sys.executable, "-m", "harmonic4", "invariants", "--input", d1_file,
             "--backend", "exact"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["J2"] == "8/1"

    def test_usage_error_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "harmonic4", "verify", "everything"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
