import json
import subprocess
import sys

import pytest

from roundsleek import __version__
from roundsleek.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_two_lines_round_exits_one(capsys):
    code, out, _ = run(["--space", "gallery:two-lines", "--check", "round", "--seed", "7"], capsys)
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "Violated"
    x, y = doc["witness"]["points"]["x"], doc["witness"]["points"]["y"]
    assert x[0] == y[0] and {x[1], y[1]} == {"0", "1"}


def test_open_interval_sleek_exits_zero(capsys):
    code, out, _ = run(["--space", "gallery:open-interval", "--check", "sleek"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "HoldsExact"


def test_quadrant_with_svg(tmp_path, capsys):
    svg = tmp_path / "out.svg"
    code, out, _ = run(["--space", "gallery:quadrant", "--check", "sleek", "--svg", str(svg)], capsys)
    assert code == 1
    assert json.loads(out)["witness"]["points"]["y"] == ["0", "0"]
    text = svg.read_text()
    assert text.startswith("<?xml") and "clipPath" in text


def test_report_keys(capsys):
    _, out, _ = run(["--space", "gallery:closed-interval", "--check", "round", "--seed", "3"], capsys)
    doc = json.loads(out)
    assert {"schema", "space", "check", "verdict", "witness", "effort", "seed", "config", "toolkit_version"} <= set(doc)
    assert doc["toolkit_version"] == __version__ and doc["seed"] == 3
    assert doc["space"] == {"schema": 1, "type": "gallery", "name": "closed-interval"}


def test_same_inputs_same_bytes(capsys):
    argv = ["--space", "gallery:closed-disk", "--check", "sleek", "--seed", "2", "--budget", "50"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


@pytest.mark.parametrize("argv", [
    [],
    ["--check", "round"],
    ["--space", "gallery:nope", "--check", "round"],
    ["--space", "gallery:R2", "--check", "nope"],
    ["--space", "gallery:R2", "--check", "round", "--budget", "zero"],
    ["--space", "gallery:R2", "--check", "round", "--resolution", "0.1"],
    ["--space", "/no/such/file.json", "--check", "round"],
    ["--space", "gallery:R2", "--check", "strict-ball-convexity"],
    ["--space", "gallery:R2", "--check", "round", "--budget", "0"],
])
def test_usage_errors_exit_64(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 64 and err.startswith("roundsleek:")


def test_malformed_space_names_json_path(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "interval_union", "intervals": [{"lo": "0", "hi": "1"}, {"lo": "x"}]}))
    code, _, err = run(["--space", str(bad), "--check", "round"], capsys)
    assert code == 64 and "$.intervals[1].lo" in err


def test_space_file(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"type": "interval_union", "intervals": [
        {"lo": "0", "hi": "1", "lo_closed": False, "hi_closed": False}]}))
    code, out, _ = run(["--space", str(f), "--check", "round"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "HoldsExact"


@pytest.mark.parametrize("argv,code", [
    (["--space", "gallery:R2", "--check", "convexity:lambda:1/2", "--budget", "40"], 0),
    (["--space", "gallery:R2", "--check", "strict-convexity", "--budget", "40"], 0),
    (["--space", "gallery:R2", "--check", "strict-ball-convexity", "--radius", "1", "--budget", "40"], 0),
    (["--space", "gallery:closed-disk", "--check", "axioms", "--budget", "100"], 0),
    (["--space", "gallery:arcs-Z", "--check", "union-sleek", "--budget", "40"], 1),
    (["--space", "gallery:gap-union", "--check", "union-sleek"], 1),
])
def test_other_checks(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_replay_recertifies(tmp_path, capsys):
    report = tmp_path / "r.json"
    assert run(["--space", "gallery:two-lines", "--check", "round", "--json", str(report)], capsys)[0] == 1
    code, out, _ = run(["--replay", str(report)], capsys)
    summary = json.loads(out)
    assert code == 0 and summary["identical"] and summary["witness_certified"]


def test_replay_detects_tampering(tmp_path, capsys):
    report = tmp_path / "r.json"
    run(["--space", "gallery:quadrant", "--check", "sleek", "--json", str(report)], capsys)
    doc = json.loads(report.read_text())
    doc["witness"]["points"]["y"] = ["1/2", "0"]
    report.write_text(json.dumps(doc))
    code, out, _ = run(["--replay", str(report)], capsys)
    assert code == 1 and not json.loads(out)["identical"]


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "roundsleek.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and __version__ in out.stdout
