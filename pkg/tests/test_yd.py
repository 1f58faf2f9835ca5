import pytest

from qtbrauer.hopf import AxiomFailure
from qtbrauer.linalg import GF, QQ, Matrix
from qtbrauer.yd import (YDModule, braiding_phi, comodule_checks, is_yd_map, lift_lambda1, lift_lambda2,
                         regular_yd, same_yd_structure, with_trivial_coaction, yd_checks, yd_tensor)


def test_lifts_are_yetter_drinfeld(sweedler):
    for r in sweedler.r_matrices.values():
        for m in sweedler.modules.values():
            for lift in (lift_lambda1, lift_lambda2):
                y = lift(m, r)
                assert yd_checks(y)


def test_regular_yd_and_tensor(sweedler_q):
    h = sweedler_q.hopf
    r = sweedler_q.r_matrices["t1"]
    reg = regular_yd(h)
    assert yd_checks(reg)
    t = yd_tensor(reg, lift_lambda1(sweedler_q.modules["V"], r))
    assert t.dim == 8
    assert yd_checks(t)


def test_trivial_coaction_needs_trivial_like_action(sweedler_q):
    k = sweedler_q.modules["k"]
    assert yd_checks(with_trivial_coaction(k))
    with pytest.raises(AxiomFailure):
        with_trivial_coaction(sweedler_q.modules["V"])


def test_phi_is_yd_iso(sweedler_q):
    r = sweedler_q.r_matrices["t1"]
    x = lift_lambda1(sweedler_q.modules["V"], r)
    y = lift_lambda2(sweedler_q.modules["V"], r)
    fwd, bwd = braiding_phi(x, y)
    assert (fwd @ bwd).is_identity()
    assert is_yd_map(fwd, yd_tensor(x, y), yd_tensor(y, x))


def test_lambda1_equals_lambda2_for_triangular_r(sweedler_q):
    # every R_t of Sweedler's algebra satisfies R21 R = 1
    for r in sweedler_q.r_matrices.values():
        for m in sweedler_q.modules.values():
            assert same_yd_structure(lift_lambda1(m, r), lift_lambda2(m, r))


def test_lambda1_and_lambda2_differ_for_non_triangular_r():
    from qtbrauer.library import group_algebra_bicharacter
    b = group_algebra_bicharacter(3, 2, GF(7))
    r = b.r_matrices["bichar"]
    reg = b.modules["regular"]
    same = same_yd_structure(lift_lambda1(reg, r), lift_lambda2(reg, r))
    assert same["same action"]
    assert not same["same coaction"]


def test_broken_coaction_fails_comodule_law(sweedler_q):
    h = sweedler_q.hopf
    k = sweedler_q.modules["k"]
    # lambda(m) = x (x) m is neither coassociative nor counital
    co = Matrix.from_sparse(QQ, 4, 1, [(2, 0, QQ(1))])
    with pytest.raises(AxiomFailure) as exc:
        YDModule(k, co)
    assert exc.value.check.name == "comodule coassociativity"
    checks = comodule_checks(h, 1, lambda m: {(2, 0): QQ(1)}, ["k"])
    assert [c.name for c in checks.failed()] == ["comodule coassociativity", "comodule counit"]


def test_grouplike_coaction_is_comodule_but_not_yd(sweedler_q):
    k = sweedler_q.modules["k"]
    co = Matrix.from_sparse(QQ, 4, 1, [(1, 0, QQ(1))])
    with pytest.raises(AxiomFailure) as exc:
        YDModule(k, co)
    assert exc.value.check.name == "Yetter-Drinfeld compatibility"
