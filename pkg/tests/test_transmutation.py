from qtbrauer.library import group_algebra_bicharacter
from qtbrauer.linalg import GF, QQ
from qtbrauer.transmutation import (TransmutedHopf, bicomodule_to_yd, is_cocommutative_bicomodule,
                                    rh_comodule_checks, sigma_checks, transferred_phi, transmutation_checks,
                                    trivial_bicomodule, yd_to_bicomodule)
from qtbrauer.yd import braiding_phi, lift_lambda1, lift_lambda2, regular_yd


def test_all_coproduct_forms_agree(transmuted_q):
    t = transmuted_q
    assert len(t.comul_forms) == 5
    assert all(f == t.braided_comul for f in t.comul_forms)
    assert transmutation_checks(t)


def test_cocommutative_with_trivial_r_keeps_structure():
    for fld in (QQ, GF(7)):
        b = group_algebra_bicharacter(2, -1, fld)
        t = TransmutedHopf(b.hopf, b.r_matrices["trivial"])
        assert t.braided_comul == b.hopf.desc.comul
        assert t.braided_antipode == b.hopf.desc.antipode


def test_bicharacter_r_changes_the_coproduct():
    b = group_algebra_bicharacter(2, -1, QQ)
    t = TransmutedHopf(b.hopf, b.r_matrices["bichar"])
    # the adjoint action of a commutative algebra is trivial, so the coproduct is unchanged
    assert t.braided_comul == b.hopf.desc.comul


def test_sweedler_braided_coproduct_is_not_the_coproduct(sweedler_q):
    t = TransmutedHopf(sweedler_q.hopf, sweedler_q.r_matrices["t1"])
    assert t.braided_comul != sweedler_q.hopf.desc.comul


def test_half_braiding_is_linear_and_invertible(transmuted_q, sweedler_q):
    for m in sweedler_q.modules.values():
        assert sigma_checks(transmuted_q, m)


def test_dictionary_round_trip(transmuted_q, sweedler_q):
    t = transmuted_q
    r = t.r
    corpus = [lift_lambda1(sweedler_q.modules["V"], r), lift_lambda2(sweedler_q.modules["V"], r),
              lift_lambda1(sweedler_q.modules["regular"], r), regular_yd(t.host)]
    bis = []
    for z in corpus:
        b = yd_to_bicomodule(z, t)
        assert rh_comodule_checks(b)
        assert is_cocommutative_bicomodule(b)
        back = bicomodule_to_yd(b)
        assert back.action == z.action and back.coaction == z.coaction
        bis.append(b)
    for x, bx in zip(corpus, bis):
        for y, by in zip(corpus, bis):
            assert transferred_phi(bx, by) == braiding_phi(x, y)[0]


def test_trivial_bicomodule_of_trivial_module_is_cocommutative(transmuted_q, sweedler_q):
    b = trivial_bicomodule(transmuted_q, sweedler_q.modules["k"])
    assert is_cocommutative_bicomodule(b)
