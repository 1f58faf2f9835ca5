from qtbrauer.examples import matrix_algebra_module, sweedler_rep2
from qtbrauer.linalg import QQ, Matrix
from qtbrauer.modules import (braiding_psi, is_module_map, module_algebra_checks, module_checks,
                              module_from_representation, regular_module, tensor_module, trivial_module)


def test_bundled_modules_verify(sweedler):
    for m in sweedler.modules.values():
        assert module_checks(m)
    for a in sweedler.algebras.values():
        assert module_algebra_checks(a)


def test_tensor_module_dimension_and_action(sweedler_q):
    h = sweedler_q.hopf
    v = sweedler_q.modules["V"]
    vv = tensor_module(v, v)
    assert vv.dim == 4
    assert module_checks(vv)
    # x acts on V(x)V through Delta x = x(x)1 + g(x)x
    x = h.basis(2)
    assert vv.act(x, {0: QQ(1)}) == {}


def test_psi_is_module_iso_with_exact_inverse(sweedler_q):
    v = sweedler_q.modules["V"]
    reg = sweedler_q.modules["regular"]
    for r in sweedler_q.r_matrices.values():
        fwd, bwd = braiding_psi(r, v, reg)
        assert (fwd @ bwd).is_identity()
        assert is_module_map(fwd, tensor_module(v, reg), tensor_module(reg, v))


def test_psi_for_triangular_r_squares_to_identity_on_trivial(sweedler_q):
    k = trivial_module(sweedler_q.hopf, 1, "k")
    r = sweedler_q.r_matrices["t0"]
    fwd, _ = braiding_psi(r, k, k)
    assert fwd == Matrix.identity(QQ, 1)


def test_end_v_inner_action(sweedler_q):
    h = sweedler_q.hopf
    v = module_from_representation(h, sweedler_rep2(QQ), name="V")
    end = matrix_algebra_module(v)
    assert end.dim == 4
    assert end.labels == ["E11", "E12", "E21", "E22"]
    # g conjugates by diag(1,-1)
    assert end.act(h.basis(1), {1: QQ(1)}) == {1: QQ(-1)}
    assert end.act(h.basis(1), {0: QQ(1)}) == {0: QQ(1)}


def test_regular_module_is_left_multiplication(sweedler_q):
    h = sweedler_q.hopf
    reg = regular_module(h)
    for i in range(4):
        for j in range(4):
            assert reg.act_basis(i, j) == h.mult(h.basis(i), h.basis(j))
