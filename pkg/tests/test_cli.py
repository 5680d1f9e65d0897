import io
import json
from pathlib import Path

import pytest

from desargues.cli import run

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


WORKED = ["--pencil", SAMPLES / "worked_pencil.json", "--line", SAMPLES / "xy_line.json"]
COMMON = ["--pencil", SAMPLES / "common_zero_pencil.json", "--line", SAMPLES / "xy_line.json"]


class TestCommands:
    def test_involution(self):
        code, out, _ = call("involution", *WORKED, "--allow-extension")
        doc = json.loads(out)
        assert code == 0
        assert doc["involution"] == {"a": "0", "b": "1", "c": "-1"}
        assert doc["map"] == "x -> -1/x"
        assert doc["fixed_points"]["field"]["type"] == "QuadExt"
        assert len(doc["fixed_points"]["points"]) == 2

    def test_diagnose_common_zero(self):
        code, out, _ = call("diagnose", *COMMON)
        assert code == 0
        assert json.loads(out) == {"verdict": "CommonZero", "point": ["1", "0"]}

    def test_involution_not_regular(self):
        code, out, _ = call("involution", *COMMON)
        assert code == 1
        assert json.loads(out)["verdict"] == "CommonZero"

    def test_restrict(self):
        code, out, _ = call("restrict", *WORKED)
        doc = json.loads(out)
        assert code == 0
        assert doc["R"] == {"a": "1", "b": "0", "c": "-1"}
        assert doc["gram"]["det"] == "1" and doc["resultant"] == "-4"

    def test_classify(self, tmp_path):
        form = write(tmp_path, "f.json", {"a": "1", "b": "0", "c": "1"})
        code, out, _ = call("classify", "--form", form)
        assert code == 0 and json.loads(out)["type"] == "Anisotropic"
        code, out, _ = call("classify", "--form", form, "--field", "gfp:5")
        assert json.loads(out)["type"] == "Hyperbolic"

    def test_fixed_points(self):
        code, out, _ = call("fixed-points", "--involution", SAMPLES / "rotation.json")
        assert code == 0 and json.loads(out)["fixed_points"]["points"] == []

    @pytest.mark.parametrize("argv", [
        ["verify", "--scenario", "prop1", "--field", "gfp:5"],
        ["verify", "--scenario", "main", *WORKED],
        ["verify", "--scenario", "main", *COMMON],
        ["verify", "--scenario", "prop3", *WORKED],
        ["verify", "--scenario", "butterfly", "--config", SAMPLES / "butterfly.json"],
        ["verify", "--scenario", "butterfly"],
        ["verify", "--scenario", "desargues-classic"],
        ["fuzz", "--field", "gfp:7", "--dim", "2", "--trials", "50", "--seed", "1"],
    ])
    def test_scenarios_pass(self, argv):
        code, out, _ = call(*argv)
        assert code == 0
        assert json.loads(out)["pass"] is True

    def test_failed_verification_exits_one(self, monkeypatch):
        import desargues.cli as cli
        from desargues.harness import ScenarioReport

        def broken(field, trials, seed):
            report = ScenarioReport("prop1", field, seed=seed)
            report.check("always_fails", False, note="injected")
            return report

        monkeypatch.setattr(cli, "verify_prop1", broken)
        code, out, _ = call("verify", "--scenario", "prop1")
        doc = json.loads(out)
        assert code == 1 and doc["pass"] is False
        assert doc["checks"][0]["witness"] == {"note": "injected"}

    def test_butterfly_hypothesis_violation(self, tmp_path):
        cfg = json.loads((SAMPLES / "butterfly.json").read_text())
        cfg["marked"] = ["1", "0"]
        code, out, err = call("verify", "--scenario", "butterfly", "--config", write(tmp_path, "c.json", cfg))
        assert code == 2 and out == "" and "symmetric" in err


class TestContract:
    def test_deterministic(self):
        argv = ["fuzz", "--field", "gfp:7", "--trials", "40", "--seed", "3"]
        assert call(*argv)[1] == call(*argv)[1]

    def test_timestamp_opt_in(self):
        _, plain, _ = call("diagnose", *COMMON)
        _, stamped, _ = call("diagnose", *COMMON, "--timestamp")
        assert "timestamp" not in json.loads(plain)
        assert "timestamp" in json.loads(stamped)

    def test_verbose_goes_to_stderr(self):
        code, out, err = call("verify", "--scenario", "prop1", "--field", "gfp:3", "--verbose")
        assert code == 0 and "PASS" in err
        json.loads(out)

    def test_asymmetric_matrix(self, tmp_path):
        pencil = write(tmp_path, "p.json", {"R": {"dim": 2, "m": [["1", "2"], ["3", "1"]]},
                                            "S": {"dim": 2, "m": [["1", "0"], ["0", "1"]]}})
        line = write(tmp_path, "l.json", {"e1": ["1", "0"], "e2": ["0", "1"]})
        code, out, err = call("diagnose", "--pencil", pencil, "--line", line)
        assert code == 2 and out == ""
        assert "R.m" in err and "not symmetric at [0][1] vs [1][0]" in err

    def test_characteristic_two(self, tmp_path):
        pencil = json.loads((SAMPLES / "worked_pencil.json").read_text())
        pencil["field"] = {"type": "GFp", "p": 2}
        code, _, err = call("diagnose", "--pencil", write(tmp_path, "p.json", pencil),
                            "--line", SAMPLES / "xy_line.json")
        assert code == 2 and "characteristic 2 excluded" in err

    def test_dependent_line(self, tmp_path):
        line = write(tmp_path, "l.json", {"e1": ["1", "1", "0"], "e2": ["1", "1", "0"]})
        code, _, err = call("diagnose", "--pencil", SAMPLES / "worked_pencil.json", "--line", line)
        assert code == 2 and "line vectors dependent" in err

    def test_float_rejected(self, tmp_path):
        line = write(tmp_path, "l.json", {"e1": [1.5, "0", "0"], "e2": ["0", "1", "0"]})
        code, _, err = call("diagnose", "--pencil", SAMPLES / "worked_pencil.json", "--line", line)
        assert code == 2 and "line.e1[0]" in err

    @pytest.mark.parametrize("argv,needle", [
        (["diagnose"], "--pencil"),
        (["verify"], "--scenario"),
        (["fuzz", "--field", "gfp:9"], "--field"),
        (["fuzz", "--dim", "1"], "--dim"),
        (["nonsense"], "invalid choice"),
        (["diagnose", "--pencil", "/does/not/exist.json", "--line", "x"], "--pencil"),
    ])
    def test_usage_errors(self, argv, needle):
        code, out, err = call(*argv)
        assert code == 2 and out == ""
        assert needle in err

    def test_collinear_points(self, tmp_path):
        pts = write(tmp_path, "pts.json", [["0", "0"], ["1", "1"], ["2", "2"], ["0", "1"]])
        code, _, err = call("verify", "--scenario", "desargues-classic", "--points", pts)
        assert code == 2 and "points:" in err and "collinear" in err

    def test_bad_json(self, tmp_path):
        path = tmp_path / "p.json"
        path.write_text("{not json")
        code, _, err = call("diagnose", "--pencil", path, "--line", path)
        assert code == 2 and "not JSON" in err
