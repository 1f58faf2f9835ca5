import pytest

from qtbrauer.brauer import (NotAzumaya, check_azumaya, check_hstar_galois, coinvariants_A0, compute_pi,
                             invariants_cotensor_check, invariants_functor, mu_action, pi_bigalois_checks,
                             trivialization_check)
from qtbrauer.linalg import GF, QQ
from qtbrauer.library import sweedler_h4
from qtbrauer.transmutation import TransmutedHopf
from qtbrauer.yd import YDModule, lift_lambda1, lift_lambda2, regular_yd, with_trivial_coaction


def test_end_v_is_azumaya_but_not_hstar_galois(sweedler):
    a = sweedler.algebras["EndV"]
    for r in sweedler.r_matrices.values():
        az = check_azumaya(a, r)
        assert az.checks.names() == ["F bijective", "G bijective", "F multiplicative"]
        assert az.checks
    gal = check_hstar_galois(a)
    assert not gal.ok
    assert gal.witness["rank"] == 12
    assert gal.witness["target_dim"] == 16
    assert coinvariants_A0(a).cols == 1


def test_split_algebra_fails_with_rank_witness(sweedler):
    for r in sweedler.r_matrices.values():
        with pytest.raises(NotAzumaya) as exc:
            check_azumaya(sweedler.algebras["kxk"], r)
        assert (exc.value.which, exc.value.rank, exc.value.size) == ("F", 2, 4)


@pytest.fixture(scope="module", params=["t0", "t1"])
def q11(request):
    b = sweedler_h4(QQ)
    r = b.r_matrices[request.param]
    a = b.algebras["Q11"]
    az = check_azumaya(a, r)
    gal = check_hstar_galois(a)
    return b, r, az, gal, compute_pi(a, gal), TransmutedHopf(b.hopf, r)


def test_quaternion_fixture_pipeline(q11):
    b, r, az, gal, pi, t = q11
    assert az.checks
    assert gal.ok
    assert coinvariants_A0(b.algebras["Q11"]).cols == 1
    assert pi.dim == 4
    assert pi.checks
    assert pi_bigalois_checks(pi, t)


def test_mu_action_of_counit_is_identity(q11):
    b, r, az, gal, pi, t = q11
    a = b.algebras["Q11"]
    # e*_0 + e*_1 is the counit of H*: 1 and g have counit 1
    for c in range(a.dim):
        total = {}
        for k in (0, 1):
            for i, v in mu_action(a, gal, a.basis(c), k).items():
                total[i] = total.get(i, 0) + v
        assert {i: v for i, v in total.items() if v} == a.basis(c)


def test_invariants_match_cotensor(q11):
    b, r, az, gal, pi, t = q11
    zs = {"k": with_trivial_coaction(b.modules["k"]), "L1(V)": lift_lambda1(b.modules["V"], r),
          "L2(V)": lift_lambda2(b.modules["V"], r), "RH": regular_yd(b.hopf)}
    dims = {"k": 1, "L1(V)": 2, "L2(V)": 2, "RH": 4}
    for name, z in zs.items():
        inv = invariants_functor(az, z)
        assert inv.dim == dims[name]
        assert invariants_cotensor_check(az, pi, z, t, inv=inv, multiplicative=(name == "RH"))


def test_wrong_pi_coaction_is_detected(q11):
    b, r, az, gal, pi, t = q11
    fake = lift_lambda1(pi.yd.module, r)
    assert fake.coaction != pi.yd.coaction
    pi.yd, saved = fake, pi.yd
    try:
        res = invariants_cotensor_check(az, pi, regular_yd(b.hopf), t)
        assert not res["equal echelon bases"]
    finally:
        pi.yd = saved


def test_trivialization_on_lambda1_lifts(q11):
    b, r, az, gal, pi, t = q11
    for m in b.modules.values():
        z = lift_lambda1(m, r)
        res = trivialization_check(az, z)
        assert res
        assert res["twist is trivial"]
