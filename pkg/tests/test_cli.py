import io
import json
import subprocess
import sys

import pytest

from toeplitz_minors.cli import run
from toeplitz_minors.partitions import Partition
from toeplitz_minors.symfunc import SymPoly
from toeplitz_minors.toeplitz_numeric import CrossCheckReport
from toeplitz_minors.tw_formula import tw_poly


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def spec_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"p": [[0.6, 0], [0.2, 0]], "p_tilde": [[0.6, 0], [0.2, 0]]}))
    return str(path)


class TestPolynomials:
    def test_bd_text(self):
        assert invoke("bd", "--lambda", "1", "--mu", "1") == (0, "p1*pt1 + 1\n")

    def test_tw_matches_bd(self):
        _, bd = invoke("bd", "--lambda", "2,1", "--mu", "1")
        _, tw = invoke("tw", "--lambda", "2,1", "--mu", "1", "--d", "3")
        assert bd == tw

    def test_empty_partitions(self):
        assert invoke("bd") == (0, "1\n")
        assert invoke("tw", "--lambda", "", "--mu", "0") == (0, "1\n")

    def test_value_with_spec(self, spec_file):
        code, text = invoke("bd", "--lambda", "1", "--mu", "1", "--spec", spec_file)
        assert code == 0
        poly_line, value_line = text.splitlines()
        assert poly_line == "p1*pt1 + 1"
        assert complex(value_line.split("=", 1)[1].strip()) == pytest.approx(1.36)

    def test_json_round_trip(self, spec_file):
        code, text = invoke("tw", "--lambda", "2,1", "--mu", "1", "--format", "json", "--spec", spec_file)
        assert code == 0
        doc = json.loads(text)
        poly = SymPoly.from_json(doc["poly"])
        assert poly == tw_poly(Partition([2, 1]), Partition([1]))
        assert doc["text"] == str(poly)
        assert doc["lambda"] == [2, 1] and doc["mu"] == [1]
        assert len(doc["value"]) == 2

    def test_tw_size_too_small(self, capsys):
        with pytest.raises(SystemExit) as exc:
            invoke("tw", "--lambda", "1,1", "--d", "1")
        assert exc.value.code == 2


class TestChecks:
    def test_identity_weight_zero(self):
        code, text = invoke("identity-check", "--max-weight", "0")
        assert code == 0
        assert text == "PASS bd=tw lambda=() mu=()\nidentity-check: 1/1 passed\n"

    def test_identity_json(self):
        code, text = invoke("identity-check", "--max-weight", "2", "--format", "json")
        doc = json.loads(text)
        assert code == 0 and doc["passed"]
        assert len(doc["results"]) == 16

    def test_delta_check(self):
        code, text = invoke("delta-check", "--max-weight", "2")
        assert code == 0
        assert text.splitlines()[-1] == "delta-check: 48/48 passed"


class TestNumeric:
    def test_ratio_sequence_text(self, spec_file):
        code, text = invoke("ratio-numeric", "--spec", spec_file, "--lambda", "1", "--mu", "1", "--n", "8,16")
        assert code == 0
        lines = text.splitlines()
        assert [line.split()[0] for line in lines] == ["n=8", "n=16"]
        assert complex(lines[1].split("=", 2)[2]) == pytest.approx(1.36, abs=1e-12)

    def test_ratio_sequence_json(self, spec_file):
        code, text = invoke("ratio-numeric", "--spec", spec_file, "--format", "json")
        doc = json.loads(text)
        assert code == 0 and doc["n"] == [8, 16, 32, 64]
        assert all(complex(*z) == pytest.approx(1) for z in doc["ratios"])

    def test_cross_check_converges(self, spec_file):
        code, text = invoke("cross-check", "--spec", spec_file, "--lambda", "2,1", "--mu", "1",
                            "--n", "64", "--tol", "1e-6")
        assert code == 0
        assert "converged = true" in text

    def test_cross_check_json_round_trip(self, spec_file):
        code, text = invoke("cross-check", "--spec", spec_file, "--lambda", "2,1", "--mu", "1", "--format", "json")
        report = CrossCheckReport.from_json(json.loads(text))
        assert code == 0 and report.converged
        assert json.dumps(report.to_json(), sort_keys=True) + "\n" == text

    def test_cross_check_not_converged_exits_one(self, spec_file):
        code, text = invoke("cross-check", "--spec", spec_file, "--lambda", "2,1", "--mu", "1", "--n", "2")
        assert code == 1
        assert "converged = false" in text

    def test_singular_denominator_exits_one(self, spec_file, monkeypatch, capsys):
        from toeplitz_minors import cli
        from toeplitz_minors.exceptions import SingularDenominatorError

        def singular(*args, **kwargs):
            raise SingularDenominatorError(8, "forced")

        monkeypatch.setattr(cli, "ratio_sequence", singular)
        code, text = invoke("ratio-numeric", "--spec", spec_file)
        assert code == 1 and text == ""
        assert capsys.readouterr().err.startswith("error: ")


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["bd", "--lambda", "1,2"],
            ["bd", "--lambda", "a"],
            ["ratio-numeric", "--spec", "/nonexistent/spec.json"],
            ["cross-check", "--spec", "/nonexistent/spec.json"],
            ["identity-check", "--max-weight", "-1"],
            ["ratio-numeric", "--n", "8"],
        ],
    )
    def test_exit_code_two(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            invoke(*argv)
        assert exc.value.code == 2

    @pytest.mark.parametrize("tol", ["0", "-1e-3", "nan"])
    def test_nonpositive_tolerance(self, tol, spec_file, capsys):
        with pytest.raises(SystemExit) as exc:
            invoke("cross-check", "--spec", spec_file, "--tol", tol)
        assert exc.value.code == 2

    def test_bad_spec_contents(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"q": [1]}))
        with pytest.raises(SystemExit) as exc:
            invoke("ratio-numeric", "--spec", str(path))
        assert exc.value.code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["bd", "--lambda", "2,1", "--mu", "2", "--format", "json"],
            ["tw", "--lambda", "3", "--mu", "1,1"],
            ["identity-check", "--max-weight", "2", "--format", "json"],
        ],
    )
    def test_repeated_runs_identical(self, argv):
        assert invoke(*argv) == invoke(*argv)

    def test_module_entry_point(self, spec_file):
        cmd = [sys.executable, "-m", "toeplitz_minors", "bd", "--lambda", "2,1", "--mu", "1", "--format", "json"]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout.decode() == invoke("bd", "--lambda", "2,1", "--mu", "1", "--format", "json")[1]
