"""End-to-end tests for the `legch` command-line front end."""

import json

import pytest

from legch.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestBuild:
    def test_torus_3(self, capsys):
        status, out, _ = run_cli(capsys, "build", "torus", "--n", "3")
        assert status == 0
        doc = json.loads(out)
        assert doc["schema"] == "dga.v1"
        assert doc["differential"]["a1"] == "1 + b1 + b3 + b1 b2 b3"
        assert doc["differential"]["a2"] == "b2 + b1 b2 + b2 b3 + b2 b3 b1 b2"

    def test_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "build", "torus", "--n", "5")
        _, second, _ = run_cli(capsys, "build", "torus", "--n", "5")
        assert first == second

    def test_even_n_fails(self, capsys):
        status, _, err = run_cli(capsys, "build", "torus", "--n", "4")
        assert status == 1
        assert "error" in err

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["build", "torus"])  # missing --n
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2


class TestPipeline:
    def make_tangle(self, capsys, tmp_path, n, prefix):
        dga_path = tmp_path / f"{prefix}dga.json"
        tangle_path = tmp_path / f"{prefix}tangle.json"
        status, _, _ = run_cli(
            capsys, "build", "torus", "--n", str(n), "--emit", str(dga_path)
        )
        assert status == 0
        status, _, _ = run_cli(
            capsys,
            "tangle",
            str(dga_path),
            "--prefix",
            prefix,
            "--emit",
            str(tangle_path),
        )
        assert status == 0
        return tangle_path

    def test_tangle_word(self, capsys, tmp_path):
        tangle = self.make_tangle(capsys, tmp_path, 3, "k1")
        status, out, _ = run_cli(capsys, "word", str(tangle))
        assert status == 0
        doc = json.loads(out)
        assert doc["length"] == 5
        assert doc["word"].startswith("1 + k1.b2")

    def test_sum_and_classify(self, capsys, tmp_path):
        t1 = self.make_tangle(capsys, tmp_path, 3, "k1")
        t2 = self.make_tangle(capsys, tmp_path, 3, "k2")
        sum_path = tmp_path / "sum.json"
        status, _, _ = run_cli(
            capsys, "sum", str(t1), str(t2), "--emit", str(sum_path)
        )
        assert status == 0
        doc = json.loads(sum_path.read_text())
        assert doc["schema"] == "dga.v1"
        status, out, _ = run_cli(capsys, "classify", str(sum_path), "--strict")
        assert status == 0
        assert json.loads(out)["even_delta_class"] is True

    def test_classify_strict_failure(self, capsys, tmp_path):
        dga_path = tmp_path / "dga.json"
        run_cli(capsys, "build", "torus", "--n", "5", "--emit", str(dga_path))
        status, out, _ = run_cli(capsys, "classify", str(dga_path), "--strict")
        assert status == 1
        assert json.loads(out)["even_delta_class"] is False

    def test_manifest(self, capsys, tmp_path):
        dga_path = tmp_path / "dga.json"
        manifest_path = tmp_path / "manifest.json"
        run_cli(
            capsys,
            "build",
            "torus",
            "--n",
            "3",
            "--emit",
            str(dga_path),
            "--manifest",
            str(manifest_path),
        )
        manifest = json.loads(manifest_path.read_text())
        assert manifest["schema"] == "manifest.v1"
        assert str(dga_path) in manifest["outputs"]
        assert len(manifest["outputs"][str(dga_path)]) == 64

    def test_stdin(self, capsys, tmp_path, monkeypatch):
        import io

        dga_path = tmp_path / "dga.json"
        run_cli(capsys, "build", "torus", "--n", "3", "--emit", str(dga_path))
        monkeypatch.setattr("sys.stdin", io.StringIO(dga_path.read_text()))
        status, out, _ = run_cli(capsys, "tangle", "-")
        assert status == 0
        assert json.loads(out)["schema"] == "tangle.v1"


class TestScript:
    def test_run(self, capsys, tmp_path):
        doc = {
            "schema": "script.v1",
            "initial": {
                "schema": "dga.v1",
                "generators": [
                    {"name": "x", "degree": 0},
                    {"name": "y", "degree": 0},
                    {"name": "z", "degree": 0},
                ],
                "differential": {},
                "rotation_zero": True,
            },
            "events": [
                {"type": "RIIIa"},
                {"type": "RIIIb", "x": "x", "y": "y", "z": "z"},
            ],
            "mode": "verified",
        }
        path = tmp_path / "script.json"
        path.write_text(json.dumps(doc))
        status, out, _ = run_cli(capsys, "script", "run", str(path))
        assert status == 0
        assert json.loads(out)["map"] == {"x": "x + z y"}

    def test_malformed_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{ not json")
        status, _, err = run_cli(capsys, "script", "run", str(path))
        assert status == 1
        assert "error" in err


class TestVerdict:
    def test_trefoil_fly(self, capsys):
        status, out, _ = run_cli(
            capsys, "verdict", "--fly", "3", "--power", "1", "--power", "2"
        )
        assert status == 0
        doc = json.loads(out)
        assert doc["schema"] == "verdict.v1"
        assert [e["power"] for e in doc["entries"]] == [1, 2]
        assert all(e["conclusion"] == "nontrivial" for e in doc["entries"])
        assert doc["entries"][0]["tau_value"] % 2 == 1
        assert doc["entries"][0]["mu_witness"]["poly"] is not None

    def test_bad_fly_exits_1(self, capsys):
        status, _, err = run_cli(capsys, "verdict", "--fly", "5")
        assert status == 1
        assert "error" in err


class TestVerify:
    def test_fibonacci(self, capsys):
        status, out, _ = run_cli(capsys, "verify", "fibonacci", "--max-n", "8")
        assert status == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["rows"][2]["lengths"] == [3, 2, 2, 1]

    def test_single_criterion(self, capsys):
        status, out, _ = run_cli(capsys, "verify", "trefoil")
        assert status == 0
        assert out.startswith("PASS")
