import json

import pytest

from qtbrauer.cli import main
from qtbrauer.fileformat import load
from qtbrauer.library import data_text
from qtbrauer.report import parse_machine


@pytest.fixture
def sweedler_file(tmp_path):
    p = tmp_path / "sweedler.qtb"
    p.write_text(data_text("sweedler"))
    return p


def _machine(capsys, argv):
    code = main(argv + ["--format", "machine"])
    return code, parse_machine(capsys.readouterr().out)


def test_verify_passes(sweedler_file, capsys):
    code, data = _machine(capsys, ["verify", str(sweedler_file)])
    assert code == 0
    assert data["passed"]
    assert data["summary"]["fail"] == 0


def test_verify_reports_broken_comultiplication(sweedler_file, tmp_path, capsys):
    text = sweedler_file.read_text()
    lines = text.splitlines()
    # flip the sign of one Delta(x) term
    i = next(k for k, l in enumerate(lines) if l.startswith("comul 2 "))
    parts = lines[i].split()
    parts[-1] = "-" + parts[-1] if not parts[-1].startswith("-") else parts[-1][1:]
    lines[i] = " ".join(parts)
    bad = tmp_path / "bad.qtb"
    bad.write_text("\n".join(lines) + "\n")
    code, data = _machine(capsys, ["verify", str(bad)])
    assert code == 1
    fails = [e for e in data["entries"] if e["status"] == "fail"]
    assert fails and fails[0]["witness"] is not None


def test_transmute_writes_braided_document(sweedler_file, tmp_path, capsys):
    out = tmp_path / "rh.qtb"
    assert main(["transmute", str(sweedler_file), "--r", "t1", "--out", str(out)]) == 0
    doc = load(out)
    assert doc.kind == "braided-hopf"
    assert "action" in doc.maps
    assert main(["transmute", str(sweedler_file)]) == 2


def test_check_galois(sweedler_file, capsys):
    code, data = _machine(capsys, ["check-galois", str(sweedler_file), "RH"])
    assert code == 0
    code, data = _machine(capsys, ["check-galois", str(sweedler_file), "ground"])
    assert code == 1
    assert any(e["name"].startswith("can+") and e["status"] == "fail" for e in data["entries"])


def test_brauer(sweedler_file, tmp_path, capsys):
    out = tmp_path / "rep.json"
    timings = tmp_path / "t.txt"
    code = main(["brauer", str(sweedler_file), "Q11", "k", "L1:V", "--format", "machine",
                 "--out", str(out), "--timings", str(timings)])
    assert code == 0
    assert parse_machine(out.read_text())["passed"]
    assert timings.read_text()
    code, data = _machine(capsys, ["brauer", str(sweedler_file), "kxk"])
    assert code == 1
    assert any(e["status"] == "skip" for e in data["entries"])


def test_usage_and_parse_errors(sweedler_file, tmp_path, capsys):
    assert main(["verify", str(tmp_path / "missing.qtb")]) == 2
    assert main(["verify", str(sweedler_file), "--field", "gf2"]) == 2
    assert main(["verify", str(sweedler_file), "--field", "gf 6"]) == 2
    assert "error" in capsys.readouterr().err


def test_field_override(sweedler_file, capsys):
    code, data = _machine(capsys, ["verify", str(sweedler_file), "--field", "gf7"])
    assert code == 0
    assert data["field"] == "gf 7"


def test_suite_over_gf2_is_quick(capsys):
    code, data = _machine(capsys, ["suite", "--field", "gf2"])
    assert code == 0
    assert json.dumps(data)
