"""Acceptance matrix: one test per criterion, each reporting a single pass/fail line."""
import pytest

from qtbrauer.linalg import QQ
from qtbrauer.report import Report
from qtbrauer.suite import CRITERIA, group_name, run_criteria, run_suite


@pytest.fixture(scope="module")
def suite():
    return run_suite(QQ)


def _assert_group(rep, k):
    g = group_name(k)
    es = [e for e in rep.entries if e.group == g]
    fails = [f"{e.name} [{e.anchor}] {e.witness}" for e in es if e.status == "fail"]
    print(f"{g}: {rep.group_status(g).upper()} ({len(es)} entries)")
    assert es, f"{g} produced no entries"
    assert not fails, "\n".join(fails)
    assert rep.group_status(g) == "pass"


def test_criterion_1_hopf_qt_soundness(suite):
    _assert_group(suite, 1)
    names = {e.name for e in suite.entries if e.group == group_name(1)}
    assert any("sweedler-qt4" in n for n in names)


def test_criterion_2_transmutation(suite):
    _assert_group(suite, 2)


def test_criterion_3_yd_dictionary(suite):
    _assert_group(suite, 3)


def test_criterion_4_galois_suite(suite):
    _assert_group(suite, 4)


def test_criterion_5_cotensor_laws(suite):
    _assert_group(suite, 5)


def test_criterion_6_brauer_pipeline(suite):
    _assert_group(suite, 6)


def test_criterion_7_invariants_equal_cotensor(suite):
    _assert_group(suite, 7)


def test_criterion_8_trivialization(suite):
    _assert_group(suite, 8)


def test_criterion_9_round_trips_and_determinism(suite):
    _assert_group(suite, 9)
    again = run_criteria(QQ, Report("suite", QQ.name))
    groups = {group_name(k) for k in range(1, 10)}
    first = [e.as_dict() for e in suite.entries if e.group in groups]
    assert first == [e.as_dict() for e in again.entries]


def test_criterion_10_field_robustness(suite):
    _assert_group(suite, 10)
    g = group_name(10)
    assert any(e.name.startswith("gf 7 |") and e.status == "pass" for e in suite.entries if e.group == g)
    assert any(e.name.startswith("gf 2 |") for e in suite.entries if e.group == g)


def test_all_criteria_named():
    assert sorted(CRITERIA) == list(range(1, 11))
