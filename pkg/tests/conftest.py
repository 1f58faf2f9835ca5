import pytest

from qtbrauer.library import group_algebra_bicharacter, sweedler_h4
from qtbrauer.linalg import GF, QQ
from qtbrauer.transmutation import TransmutedHopf

FIELDS = [QQ, GF(7)]


@pytest.fixture(scope="session", params=FIELDS, ids=lambda f: f.name.replace(" ", ""))
def sweedler(request):
    return sweedler_h4(request.param)


@pytest.fixture(scope="session")
def sweedler_q():
    return sweedler_h4(QQ)


@pytest.fixture(scope="session")
def c2_q():
    return group_algebra_bicharacter(2, -1, QQ)


@pytest.fixture(scope="session", params=["t0", "t1"])
def transmuted_q(request, sweedler_q):
    return TransmutedHopf(sweedler_q.hopf, sweedler_q.r_matrices[request.param])
