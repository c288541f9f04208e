import json
import subprocess
import sys

import pytest

from modclifford.cli import main


def run(*args):
    return subprocess.run([sys.executable, "-m", "modclifford", *args], capture_output=True, text=True)


def test_usage_errors():
    assert run().returncode == 64
    assert run("table").returncode == 64
    assert run("verify").returncode == 64
    assert run("frobnicate").returncode == 64


def test_input_errors(tmp_path):
    assert main(["table", "--group", "SL2", "--p", "4"]) == 1
    assert main(["table", "--group", "Q8", "--p", "3"]) == 1
    assert main(["clifford", "--group", "S4", "--normal", "S3", "--p", "3"]) == 1
    assert main(["table", "--group", "S4", "--p", "2", "--expect", "paper"]) == 1
    assert main(["verify-section2", "--p", "3", "--k", "3"]) == 1


def test_mismatch_exit_code():
    assert main(["verify-section2", "--p", "3", "--k", "3", "--allow-reducible"]) == 2


def test_table_text(capsys):
    assert main(["table", "--group", "SL2", "--p", "3", "--expect", "paper"]) == 0
    out = capsys.readouterr().out
    assert "c4(z)" in out


def test_table_csv(capsys):
    assert main(["table", "--group", "A4", "--p", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) >= 3


def test_json_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["clifford", "--group", "S4", "--normal", "A4", "--p", "2", "--seed", "3", "--json", str(path)]) == 0
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    ja["run_config"].pop("out"), jb["run_config"].pop("out")
    assert ja == jb
    assert ja["schema"] == "clifford-report/1"
    for path in (a, b):
        main(["table", "--group", "GL2", "--p", "3", "--format", "json", "--out", str(path)])
    assert a.read_bytes() != b"" and json.loads(a.read_text())["rows"] == json.loads(b.read_text())["rows"]


def test_group_from_file(tmp_path, capsys):
    f = tmp_path / "c3.json"
    f.write_text(json.dumps({"name": "C3", "generators": [[[1, 1], [0, 1]]]}))
    assert main(["table", "--group", f"file:{f}", "--p", "3"]) == 0
    assert "1" in capsys.readouterr().out


def test_verify_quick(capsys):
    assert main(["verify", "--suite", "quick", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["passed"] and obj["count"] > 100


@pytest.mark.parametrize("sigma", ["trivial", "irr:1", "polk:2"])
def test_clifford_sigma_descriptors(sigma, capsys):
    assert main(["clifford", "--group", "GL2", "--normal", "SL2", "--p", "3", "--sigma", sigma]) == 0
    assert "[PASS]" in capsys.readouterr().out


def test_emit_tables(capsys):
    assert main(["emit-tables"]) == 0
    assert "theta" in capsys.readouterr().out


def test_stdout_json_byte_identical():
    args = ("clifford", "--group", "D8", "--normal", "C4", "--p", "2", "--format", "json", "--seed", "7")
    a, b = run(*args), run(*args)
    assert a.returncode == 0 and a.stdout.encode() == b.stdout.encode()
