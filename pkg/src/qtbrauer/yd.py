"""Left-left Yetter-Drinfeld modules and their braiding."""
from __future__ import annotations

from typing import Mapping, Sequence

from .checks import CheckList, compare_maps, compare_matrices
from .hopf import AxiomFailure, FinDimHopfAlgebra, RMatrix
from .linalg import DimensionMismatch, Matrix
from .modules import HModule, adjoint_module, tensor_module
from .tensor import add_into, flatten


class YDModule:
    """H-module M with a left coaction ``coaction``: (H.dim * dim) x dim, row h*dim + m."""

    def __init__(self, module: HModule, coaction: Matrix, name: str = "", verify: bool = True):
        h = module.host
        if coaction.shape != (h.dim * module.dim, module.dim):
            raise DimensionMismatch(f"coaction has shape {coaction.shape}")
        self.module = module
        self.host = h
        self.field = module.field
        self.dim = module.dim
        self.action = module.action
        self.coaction = coaction
        self.labels = module.labels
        self.name = name or module.name
        d = self.dim
        self._co = [{divmod(k, d): v for k, v in c.items()} for c in coaction.sparse_columns()]
        self.checks = None
        if verify:
            self.checks = yd_checks(self)
            bad = self.checks.first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def __repr__(self):
        return f"<YD module {self.name} dim {self.dim}>"

    def act(self, h: Mapping, m: Mapping) -> dict:
        return self.module.act(h, m)

    def act_basis(self, i: int, m: int) -> dict:
        return self.module.act_basis(i, m)

    def coact(self, m: Mapping) -> dict:
        """m -> m_{-1} (x) m_0 keyed by (h, m')."""
        acc: dict = {}
        for j, c in m.items():
            for k, v in self._co[j].items():
                add_into(acc, k, c * v)
        return acc

    def coact_basis(self, m: int) -> dict:
        return self._co[m]

    def basis(self, i: int) -> dict:
        return {i: self.field.one}


def coaction_from_rule(host: FinDimHopfAlgebra, dim: int, rule) -> Matrix:
    """``rule(m) -> {(h, m'): c}``."""
    return Matrix.from_function(host.field, host.dim * dim, dim,
                                lambda m: flatten(rule(m), [host.dim, dim]))


def comodule_checks(h: FinDimHopfAlgebra, dim: int, coact, labels, prefix: str = "") -> CheckList:
    """Coassociativity and counit for a left H-coaction ``coact(m) -> {(h, m'): c}``."""
    f = h.field
    checks = CheckList()

    def lhs(t):
        acc: dict = {}
        for (p, q), c in coact({t[0]: f.one}).items():
            for (s, u), d in h.delta_basis(p).items():
                add_into(acc, (s, u, q), c * d)
        return flatten(acc, [h.dim, h.dim, dim])

    def rhs(t):
        acc: dict = {}
        for (p, q), c in coact({t[0]: f.one}).items():
            for (s, u), d in coact({q: c}).items():
                add_into(acc, (p, s, u), d)
        return flatten(acc, [h.dim, h.dim, dim])

    checks.add(compare_maps(prefix + "comodule coassociativity", f, [dim], lhs, rhs, [labels]))

    def counit(t):
        acc: dict = {}
        for (p, q), c in coact({t[0]: f.one}).items():
            add_into(acc, q, c * h._eps[p])
        return acc

    checks.add(compare_maps(prefix + "comodule counit", f, [dim], counit, lambda t: {t[0]: f.one}, [labels]))
    return checks.anchored("comodule")


def yd_checks(y: YDModule) -> CheckList:
    from .modules import module_checks
    h = y.host
    f = y.field
    checks = module_checks(y.module)
    checks.extend(comodule_checks(h, y.dim, y.coact, y.labels))

    def lhs(t):
        return flatten(y.coact(y.act_basis(t[0], t[1])), [h.dim, y.dim])

    def rhs(t):
        # h1 m_{-1} S(h3) (x) h2.m_0
        acc: dict = {}
        co = y.coact_basis(t[1])
        for (a, b, c), u in h.delta2(h.basis(t[0])).items():
            sc = h.S(h.basis(c))
            for (p, q), v in co.items():
                left = h.mult(h.mult({a: u * v}, h.basis(p)), sc)
                right = y.act_basis(b, q)
                for k, w in left.items():
                    for l, z in right.items():
                        add_into(acc, (k, l), w * z)
        return flatten(acc, [h.dim, y.dim])

    checks.add(compare_maps("Yetter-Drinfeld compatibility", f, [h.dim, y.dim], lhs, rhs,
                            [h.labels, y.labels], anchor="YD"))
    return checks.anchored("YD")


def phi_element(x: YDModule, y: YDModule, el: Mapping) -> dict:
    """phi(m(x)n) = m_{-1}.n (x) m_0."""
    acc: dict = {}
    for (a, b), c in el.items():
        for (p, q), v in x.coact_basis(a).items():
            for k, w in y.act_basis(p, b).items():
                add_into(acc, (k, q), c * v * w)
    return acc


def phi_inverse_element(x: YDModule, y: YDModule, el: Mapping) -> dict:
    """phi^-1(n(x)m) = m_0 (x) S^-1(m_{-1}).n."""
    h = x.host
    acc: dict = {}
    for (b, a), c in el.items():
        for (p, q), v in x.coact_basis(a).items():
            for k, w in y.act(h.Sinv(h.basis(p)), {b: h.field.one}).items():
                add_into(acc, (q, k), c * v * w)
    return acc


def braiding_phi(x: YDModule, y: YDModule) -> tuple[Matrix, Matrix]:
    """Matrices of phi_{X,Y} and of its inverse from the S^-1 formula (cross-checked)."""
    f = x.field
    dx, dy = x.dim, y.dim
    fwd = Matrix.from_function(f, dy * dx, dx * dy, lambda k: flatten(
        phi_element(x, y, {divmod(k, dy): f.one}), [dy, dx]))
    bwd = Matrix.from_function(f, dx * dy, dy * dx, lambda k: flatten(
        phi_inverse_element(x, y, {divmod(k, dx): f.one}), [dx, dy]))
    if not (bwd @ fwd).is_identity() or not (fwd @ bwd).is_identity():
        raise ArithmeticError("phi^-1 built from S^-1 does not invert phi")
    return fwd, bwd


def trivial_coaction(host: FinDimHopfAlgebra, dim: int) -> Matrix:
    return coaction_from_rule(host, dim, lambda m: {(k, m): c for k, c in host.one.items()})


def with_trivial_coaction(m: HModule, name: str = "") -> YDModule:
    """m -> 1 (x) m; a YD module exactly when the action factors through eps up to adjoints."""
    return YDModule(m, trivial_coaction(m.host, m.dim), name or f"{m.name}^t")


def lift_lambda1(m: HModule, r: RMatrix, name: str = "") -> YDModule:
    """lambda_1(m) = R2 (x) R1.m."""
    def rule(j):
        acc: dict = {}
        for i, k, c in r.terms:
            for q, v in m.act_basis(i, j).items():
                add_into(acc, (k, q), c * v)
        return acc

    return YDModule(m, coaction_from_rule(m.host, m.dim, rule), name or f"L1({m.name})")


def lift_lambda2(m: HModule, r: RMatrix, name: str = "") -> YDModule:
    """lambda_2(m) = S(R1) (x) R2.m."""
    h = m.host

    def rule(j):
        acc: dict = {}
        for i, k, c in r.terms:
            for q, v in m.act_basis(k, j).items():
                for p, u in h.S(h.basis(i)).items():
                    add_into(acc, (p, q), c * u * v)
        return acc

    return YDModule(m, coaction_from_rule(h, m.dim, rule), name or f"L2({m.name})")


def yd_tensor(x: YDModule, y: YDModule, name: str = "", verify: bool = True) -> YDModule:
    """Diagonal action, coaction x_{-1}y_{-1} (x) x_0 (x) y_0."""
    h = x.host
    dy = y.dim
    mod = tensor_module(x.module, y.module)

    def rule(k):
        a, b = divmod(k, dy)
        acc: dict = {}
        for (p, q), u in x.coact_basis(a).items():
            for (s, t), v in y.coact_basis(b).items():
                for l, w in h.mult(h.basis(p), h.basis(s)).items():
                    add_into(acc, (l, q * dy + t), u * v * w)
        return acc

    return YDModule(mod, coaction_from_rule(h, x.dim * dy, rule),
                    name or f"{x.name}(x){y.name}", verify)


def regular_yd(h: FinDimHopfAlgebra) -> YDModule:
    """H with the adjoint action and the coaction Delta."""
    mod = adjoint_module(h)
    return YDModule(mod, coaction_from_rule(h, h.dim, lambda m: dict(h.delta_basis(m))), "H_ad")


def is_yd_map(f: Matrix, x: YDModule, y: YDModule) -> CheckList:
    """H-linearity and H-colinearity of f: X -> Y."""
    h = x.host
    fld = x.field
    checks = CheckList()
    checks.add(compare_maps("H-linear", fld, [h.dim, x.dim],
                            lambda t: f.apply(x.act_basis(t[0], t[1])),
                            lambda t: y.act(h.basis(t[0]), f.apply(x.basis(t[1])))))

    def lhs(t):
        acc: dict = {}
        for (p, q), c in x.coact_basis(t[0]).items():
            for k, v in f.column_sparse(q).items():
                add_into(acc, (p, k), c * v)
        return flatten(acc, [h.dim, y.dim])

    checks.add(compare_maps("H-colinear", fld, [x.dim], lhs,
                            lambda t: flatten(y.coact(f.column_sparse(t[0])), [h.dim, y.dim])))
    return checks.anchored("YD map")


def same_yd_structure(x: YDModule, y: YDModule) -> CheckList:
    checks = CheckList()
    checks.add(compare_matrices("same action", x.action, y.action))
    checks.add(compare_matrices("same coaction", x.coaction, y.coaction))
    return checks.anchored("YD")
