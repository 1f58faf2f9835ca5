import pytest

from qtbrauer.checks import Check
from qtbrauer.report import SCHEMA, Report, parse_machine


def _report():
    rep = Report("verify", "rational")
    rep.add("axioms", "associativity", True, anchor="Hopf axioms")
    rep.add_check("axioms", Check("counit", False, anchor="Hopf axioms", witness={"basis": ("g",)}, detail="eps(g)"))
    rep.skip("brauer", "pi(A)", detail="not Azumaya")
    return rep


def test_counts_status_and_exit_code():
    rep = _report()
    assert rep.counts() == {"pass": 1, "fail": 1, "skip": 1}
    assert not rep.passed
    assert rep.exit_code == 1
    assert rep.group_status("axioms") == "fail"
    assert rep.group_status("brauer") == "skip"
    assert rep.group_status("missing") == "skip"
    assert [e.name for e in rep.failures()] == ["counit"]
    ok = Report("verify", "rational")
    ok.add("g", "x", True)
    assert ok.exit_code == 0


def test_machine_form_is_deterministic_and_parses():
    a, b = _report(), _report()
    with a.timed("stage"):
        pass
    assert a.to_machine() == b.to_machine()
    assert "stage" in a.timing_text()
    data = parse_machine(a.to_machine())
    assert data["schema"] == SCHEMA
    assert data["summary"] == {"pass": 1, "fail": 1, "skip": 1}
    assert data["entries"][1]["witness"] == {"basis": ["g"]}
    assert data["entries"][2]["status"] == "skip"


def test_unknown_schema_rejected():
    with pytest.raises(ValueError):
        parse_machine('{"schema": "other"}')


def test_text_form_shows_failures_with_witness():
    text = _report().to_text()
    assert "FAIL counit  anchor=Hopf axioms" in text
    assert 'witness: {"basis": ["g"]}' in text
    assert "associativity" not in text
    assert "associativity" in _report().to_text(verbose=True)
    assert text.rstrip().endswith("FAIL: 1 pass, 1 fail, 1 skip")
