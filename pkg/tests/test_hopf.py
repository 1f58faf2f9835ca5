import pytest

from qtbrauer.examples import (bicharacter_r, group_algebra_description, is_primitive_root, r_vector,
                               sweedler_description, sweedler_r)
from qtbrauer.hopf import (AxiomFailure, RMatrix, build_hopf, check_qt, check_qybe, check_qybe_four_tensor,
                           dual_hopf, verify_description)
from qtbrauer.library import PERTURBATIONS
from qtbrauer.linalg import GF, QQ


def test_sweedler_axioms_and_r_matrices(sweedler):
    h = sweedler.hopf
    assert h.dim == 4
    assert h.labels == ["1", "g", "x", "gx"]
    assert verify_description(h.desc)
    for r in sweedler.r_matrices.values():
        qt = check_qt(h, r.element)
        assert qt.names() == ["QT1", "QT2", "QT3", "QT4", "invertible"]
        assert qt
        assert check_qybe(r)
        assert check_qybe_four_tensor(r)


def test_sweedler_relations():
    h = build_hopf(sweedler_description(QQ))
    g, x = h.basis(1), h.basis(2)
    assert h.mult(g, g) == h.one
    assert h.mult(x, x) == {}
    assert h.mult(x, g) == {3: QQ(-1)}
    assert h.S(x) == {3: QQ(-1)}


def test_sweedler_rejected_in_characteristic_two():
    from qtbrauer.library import sweedler_h4
    with pytest.raises(ValueError, match="characteristic other than 2"):
        sweedler_h4(GF(2))


def test_bicharacter_examples():
    h2 = build_hopf(group_algebra_description(2, QQ))
    assert check_qt(h2, bicharacter_r(2, -1, QQ))
    h3 = build_hopf(group_algebra_description(3, GF(7)))
    assert is_primitive_root(GF(7)(2), 3)
    assert check_qt(h3, bicharacter_r(3, GF(7)(2), GF(7)))
    h1 = build_hopf(group_algebra_description(1, QQ))
    assert check_qt(h1, r_vector(QQ, 1, {(0, 0): 1}))


def test_r_matrix_constructor_rejects_bad_element():
    h = build_hopf(sweedler_description(QQ))
    with pytest.raises(AxiomFailure) as exc:
        RMatrix(h, r_vector(QQ, 4, {(0, 0): 1}))
    assert exc.value.check.name == "QT4"


@pytest.mark.parametrize("fld", [QQ, GF(7)], ids=["rational", "gf7"])
@pytest.mark.parametrize("p", PERTURBATIONS, ids=[p.name for p in PERTURBATIONS])
def test_perturbation_fails_its_target_first(p, fld):
    first = p.run(fld).first_failure()
    assert first is not None
    assert first.name == p.target
    assert first.witness is not None


def test_qt_perturbations_break_only_their_axiom():
    # both are Q-rational sign patterns on the x-part of the Sweedler R-matrix
    for name, target in (("sweedler-qt2", "QT2"), ("sweedler-qt3", "QT3"), ("sweedler-qt4", "QT4")):
        p = next(p for p in PERTURBATIONS if p.name == name)
        failed = [c.name for c in p.run(QQ).failed()]
        assert failed == [target]


def test_perturbation_witnesses_frozen():
    w = {p.name: p.run(QQ).first_failure().witness for p in PERTURBATIONS}
    assert w["sweedler-assoc"]["input"] == ["g", "g", "x"]
    assert w["sweedler-counit"]["input"] == ["g"]
    assert w["c2-bialgebra"]["input"] == ["g", "g"]
    assert w["sweedler-qt4"]["input"] == ["x"]


def test_dual_hopf_is_hopf():
    h = build_hopf(sweedler_description(QQ))
    d = dual_hopf(h)
    assert d.dim == 4
    assert d.labels == ["1*", "g*", "x*", "gx*"]
    assert verify_description(d.desc)
