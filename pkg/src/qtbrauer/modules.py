"""Modules and module algebras over a Hopf algebra, and the braiding they carry."""
from __future__ import annotations

from typing import Mapping, Sequence

from .checks import Check, CheckList, compare_maps, compare_matrices
from .hopf import AxiomFailure, FinDimHopfAlgebra, RMatrix
from .linalg import DimensionMismatch, Matrix, inverse
from .tensor import add_into, flatten


class HModule:
    """Left H-module; ``action`` is dim x (H.dim * dim), column h*dim + m."""

    def __init__(self, host: FinDimHopfAlgebra, dim: int, action: Matrix,
                 labels: Sequence[str] | None = None, name: str = "", verify: bool = True):
        if action.shape != (dim, host.dim * dim):
            raise DimensionMismatch(f"action has shape {action.shape}, expected {(dim, host.dim * dim)}")
        self.host = host
        self.field = host.field
        self.dim = dim
        self.action = action
        self.labels = list(labels) if labels else [f"m{i}" for i in range(dim)]
        self.name = name
        cols = action.sparse_columns()
        self._act = [[cols[i * dim + m] for m in range(dim)] for i in range(host.dim)]
        if verify:
            bad = module_checks(self).first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def __repr__(self):
        return f"<H-module {self.name or ''} dim {self.dim}>"

    def act(self, h: Mapping, m: Mapping) -> dict:
        acc: dict = {}
        for i, a in h.items():
            row = self._act[i]
            for j, b in m.items():
                ab = a * b
                for k, c in row[j].items():
                    add_into(acc, k, ab * c)
        return acc

    def act_basis(self, i: int, m: int) -> dict:
        return self._act[i][m]

    def operator(self, h: Mapping) -> Matrix:
        """The matrix of m -> h.m."""
        return Matrix.from_function(self.field, self.dim, self.dim,
                                    lambda m: self.act(h, {m: self.field.one}))

    def basis(self, i: int) -> dict:
        return {i: self.field.one}


def module_checks(m: HModule) -> CheckList:
    h = m.host
    f = m.field
    B = h.basis
    checks = CheckList()
    checks.add(compare_maps(
        "module associativity", f, [h.dim, h.dim, m.dim],
        lambda t: m.act(h.mult(B(t[0]), B(t[1])), m.basis(t[2])),
        lambda t: m.act(B(t[0]), m.act(B(t[1]), m.basis(t[2]))),
        [h.labels, h.labels, m.labels]))
    checks.add(compare_maps("module unit", f, [m.dim],
                            lambda t: m.act(h.one, m.basis(t[0])), lambda t: m.basis(t[0]),
                            [m.labels]))
    return checks.anchored("H-module")


def module_from_rule(host: FinDimHopfAlgebra, dim: int, rule, labels=None, name="",
                     verify: bool = True) -> HModule:
    """Build from ``rule(i, m) -> {m': c}`` giving e_i . m."""
    act = Matrix.from_function(host.field, dim, host.dim * dim,
                               lambda c: rule(*divmod(c, dim)))
    return HModule(host, dim, act, labels, name, verify)


def trivial_module(host: FinDimHopfAlgebra, dim: int = 1, name: str = "") -> HModule:
    """h.m = eps(h) m."""
    return module_from_rule(host, dim, lambda i, m: {m: host._eps[i]} if host._eps[i] else {},
                            name=name or f"trivial{dim}")


def regular_module(host: FinDimHopfAlgebra) -> HModule:
    return module_from_rule(host, host.dim, lambda i, m: host.mult(host.basis(i), host.basis(m)),
                            labels=host.labels, name="regular")


def adjoint_module(host: FinDimHopfAlgebra) -> HModule:
    """H with h > x = h1 x S(h2)."""
    return module_from_rule(host, host.dim, lambda i, m: host.adjoint(host.basis(i), host.basis(m)),
                            labels=host.labels, name="adjoint")


def module_from_representation(host: FinDimHopfAlgebra, mats: Sequence[Matrix], name: str = "") -> HModule:
    """``mats[i]`` is the matrix by which basis element i acts."""
    dim = mats[0].shape[0]
    return module_from_rule(host, dim, lambda i, m: mats[i].column_sparse(m), name=name)


def tensor_module(m: HModule, n: HModule, name: str = "") -> HModule:
    """M(x)N with h.(m(x)n) = h1.m (x) h2.n; index m*dimN + n."""
    h = m.host
    dn = n.dim

    def rule(i, k):
        a, b = divmod(k, dn)
        acc: dict = {}
        for (p, q), c in h.delta_basis(i).items():
            for x, u in m.act_basis(p, a).items():
                for y, v in n.act_basis(q, b).items():
                    add_into(acc, x * dn + y, c * u * v)
        return acc

    labels = [f"{a}(x){b}" for a in m.labels for b in n.labels]
    return module_from_rule(h, m.dim * dn, rule, labels, name or f"{m.name}(x){n.name}")


def is_module_map(f: Matrix, m: HModule, n: HModule) -> Check:
    h = m.host
    return compare_maps("H-linear", m.field, [h.dim, m.dim],
                        lambda t: f.apply(m.act_basis(t[0], t[1])),
                        lambda t: n.act(h.basis(t[0]), f.apply(m.basis(t[1]))), anchor="H-linear")


# ---------------------------------------------------------------------------
# braiding


def psi_element(r: RMatrix, m: HModule, n: HModule, x: Mapping) -> dict:
    """psi(m(x)n) = R2.n (x) R1.m on a tuple-keyed element of M(x)N."""
    acc: dict = {}
    for (a, b), c in x.items():
        for i, j, rc in r.terms:
            for q, v in n.act_basis(j, b).items():
                for p, u in m.act_basis(i, a).items():
                    add_into(acc, (q, p), c * rc * u * v)
    return acc


def psi_inverse_element(r: RMatrix, m: HModule, n: HModule, x: Mapping) -> dict:
    """psi^-1(n(x)m) = S(R1).m (x) R2.n on a tuple-keyed element of N(x)M."""
    h = r.host
    acc: dict = {}
    for (b, a), c in x.items():
        for i, j, rc in r.terms:
            for p, u in m.act(h.S(h.basis(i)), {a: h.field.one}).items():
                for q, v in n.act_basis(j, b).items():
                    add_into(acc, (p, q), c * rc * u * v)
    return acc


def braiding_psi(r: RMatrix, m: HModule, n: HModule) -> tuple[Matrix, Matrix]:
    """Matrices of psi_{M,N}: M(x)N -> N(x)M and its inverse."""
    if m.host is not r.host or n.host is not r.host:
        raise ValueError("modules and R-matrix live over different Hopf algebras")
    f = m.field
    dm, dn = m.dim, n.dim
    fwd = Matrix.from_function(f, dn * dm, dm * dn, lambda k: flatten(
        psi_element(r, m, n, {divmod(k, dn): f.one}), [dn, dm]))
    bwd = Matrix.from_function(f, dm * dn, dn * dm, lambda k: flatten(
        psi_inverse_element(r, m, n, {divmod(k, dm): f.one}), [dm, dn]))
    return fwd, bwd


def flip_matrix(f, dm: int, dn: int) -> Matrix:
    return Matrix.from_function(f, dn * dm, dm * dn, lambda k: {(k % dn) * dm + k // dn: f.one})


# ---------------------------------------------------------------------------
# algebras


class Algebra:
    """Associative unital algebra; ``mul`` is dim x dim^2."""

    def __init__(self, field, dim: int, mul: Matrix, unit: Matrix,
                 labels: Sequence[str] | None = None, name: str = "", verify: bool = True):
        if mul.shape != (dim, dim * dim) or unit.shape != (dim, 1):
            raise DimensionMismatch("algebra structure maps have the wrong shape")
        self.field = field
        self.dim = dim
        self.mul = mul
        self.unit = unit
        self.labels = list(labels) if labels else [f"a{i}" for i in range(dim)]
        self.name = name
        cols = mul.sparse_columns()
        self._mt = [[cols[i * dim + j] for j in range(dim)] for i in range(dim)]
        self.one = dict(unit.column_sparse(0))
        if verify:
            bad = algebra_checks(self).first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def mult(self, x: Mapping, y: Mapping) -> dict:
        acc: dict = {}
        mt = self._mt
        for i, a in x.items():
            row = mt[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    add_into(acc, k, ab * c)
        return acc

    def prod(self, *xs: Mapping) -> dict:
        out = self.one
        for x in xs:
            out = self.mult(out, x)
        return out

    def basis(self, i: int) -> dict:
        return {i: self.field.one}

    def left_mult_matrix(self, x: Mapping) -> Matrix:
        return Matrix.from_function(self.field, self.dim, self.dim, lambda j: self.mult(x, {j: self.field.one}))

    def __repr__(self):
        return f"<algebra {self.name} dim {self.dim}>"


def algebra_checks(a: Algebra) -> CheckList:
    f = a.field
    B = a.basis
    checks = CheckList()
    checks.add(compare_maps("associativity", f, [a.dim] * 3,
                            lambda t: a.mult(a.mult(B(t[0]), B(t[1])), B(t[2])),
                            lambda t: a.mult(B(t[0]), a.mult(B(t[1]), B(t[2]))),
                            [a.labels] * 3))
    c = compare_maps("unit", f, [a.dim], lambda t: a.mult(a.one, B(t[0])), lambda t: B(t[0]), [a.labels])
    if c:
        c = compare_maps("unit", f, [a.dim], lambda t: a.mult(B(t[0]), a.one), lambda t: B(t[0]), [a.labels])
    checks.add(c)
    return checks.anchored("algebra")


def algebra_from_rule(field, dim: int, rule, unit: Mapping, labels=None, name="", verify=True) -> Algebra:
    mul = Matrix.from_function(field, dim, dim * dim, lambda c: rule(*divmod(c, dim)))
    return Algebra(field, dim, mul, Matrix.from_columns(field, dim, [unit]), labels, name, verify)


class ModuleAlgebra(Algebra):
    """An algebra in the category of H-modules."""

    def __init__(self, module: HModule, mul: Matrix, unit: Matrix, name: str = "", verify: bool = True):
        self.module = module
        self.host = module.host
        Algebra.__init__(self, module.field, module.dim, mul, unit, module.labels,
                         name or module.name, verify=False)
        if verify:
            bad = module_algebra_checks(self).first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def act(self, h: Mapping, x: Mapping) -> dict:
        return self.module.act(h, x)

    def act_basis(self, i: int, m: int) -> dict:
        return self.module.act_basis(i, m)

    def __repr__(self):
        return f"<H-module algebra {self.name} dim {self.dim}>"


def module_algebra_checks(a: ModuleAlgebra) -> CheckList:
    h = a.host
    f = a.field
    B = a.basis
    checks = algebra_checks(a)

    def lhs(t):
        return a.act(h.basis(t[0]), a.mult(B(t[1]), B(t[2])))

    def rhs(t):
        acc: dict = {}
        for (p, q), c in h.delta_basis(t[0]).items():
            for k, v in a.mult(a.act_basis(p, t[1]), a.act_basis(q, t[2])).items():
                add_into(acc, k, c * v)
        return acc

    checks.add(compare_maps("H-linear multiplication", f, [h.dim, a.dim, a.dim], lhs, rhs,
                            [h.labels, a.labels, a.labels]))
    checks.add(compare_maps("H-linear unit", f, [h.dim],
                            lambda t: a.act(h.basis(t[0]), a.one),
                            lambda t: {k: v * h._eps[t[0]] for k, v in a.one.items() if v * h._eps[t[0]]},
                            [h.labels]))
    return checks.anchored("module algebra")


def module_algebra_from_rule(module: HModule, rule, unit: Mapping, name: str = "",
                             verify: bool = True) -> ModuleAlgebra:
    f = module.field
    d = module.dim
    mul = Matrix.from_function(f, d, d * d, lambda c: rule(*divmod(c, d)))
    return ModuleAlgebra(module, mul, Matrix.from_columns(f, d, [unit]), name, verify)


def opposite_algebra(a: ModuleAlgebra, r: RMatrix, verify: bool = True) -> ModuleAlgebra:
    """Braided opposite: a.b = (R2.b)(R1.a)."""
    m = a.module

    def rule(i, j):
        acc: dict = {}
        for (q, p), c in psi_element(r, m, m, {(i, j): a.field.one}).items():
            for k, v in a.mult({q: c}, {p: a.field.one}).items():
                add_into(acc, k, v)
        return acc

    return module_algebra_from_rule(m, rule, a.one, name=f"{a.name}^op", verify=verify)


def braided_product_algebra(a: ModuleAlgebra, b: ModuleAlgebra, r: RMatrix,
                            verify: bool = True) -> ModuleAlgebra:
    """(a(x)b)(c(x)d) = a(R2.c) (x) (R1.b)d on A(x)B, index a*dimB + b."""
    db = b.dim
    mod = tensor_module(a.module, b.module)
    f = a.field

    def rule(x, y):
        ai, bi = divmod(x, db)
        ci, di = divmod(y, db)
        acc: dict = {}
        for i, j, rc in r.terms:
            left = a.mult({ai: rc}, a.act_basis(j, ci))
            if not left:
                continue
            right = b.mult(b.act_basis(i, bi), {di: f.one})
            for p, u in left.items():
                for q, v in right.items():
                    add_into(acc, p * db + q, u * v)
        return acc

    unit = flatten({(p, q): u * v for p, u in a.one.items() for q, v in b.one.items()}, [a.dim, db])
    return module_algebra_from_rule(mod, rule, unit, name=f"{a.name}#{b.name}", verify=verify)


def enveloping_direct(a: ModuleAlgebra, r: RMatrix) -> Matrix:
    """Multiplication of A(x)A-bar straight from (a(x)b)(c(x)d) = a(R2.c) (x) (r2.d)(r1R1.b)."""
    d = a.dim
    h = a.host
    f = a.field

    def col(k):
        x, y = divmod(k, d * d)
        ai, bi = divmod(x, d)
        ci, di = divmod(y, d)
        acc: dict = {}
        for i, j, rc in r.terms:
            left = a.mult({ai: rc}, a.act_basis(j, ci))
            if not left:
                continue
            rb = a.act_basis(i, bi)
            for i2, j2, sc in r.terms:
                right = a.mult(a.act_basis(j2, di), a.act(h.basis(i2), rb))
                for p, u in left.items():
                    for q, v in right.items():
                        add_into(acc, p * d + q, sc * u * v)
        return acc

    return Matrix.from_function(f, d * d, d ** 4, col)


# ---------------------------------------------------------------------------
# smash product


class SmashProduct:
    """A#H with (a#h)(b#g) = a(h1.b)#h2 g and right coaction (a#h) -> (a#h1)(x)h2."""

    def __init__(self, a: ModuleAlgebra):
        h = a.host
        n = h.dim
        f = a.field
        self.base = a
        self.host = h

        def rule(x, y):
            ai, hi = divmod(x, n)
            bi, gi = divmod(y, n)
            acc: dict = {}
            for (p, q), c in h.delta_basis(hi).items():
                left = a.mult({ai: c}, a.act_basis(p, bi))
                if not left:
                    continue
                right = h.mult(h.basis(q), h.basis(gi))
                for s, u in left.items():
                    for t, v in right.items():
                        add_into(acc, s * n + t, u * v)
            return acc

        unit = flatten({(p, q): u * v for p, u in a.one.items() for q, v in h.one.items()}, [a.dim, n])
        labels = [f"{x}#{y}" for x in a.labels for y in h.labels]
        self.algebra = algebra_from_rule(f, a.dim * n, rule, unit, labels, f"{a.name}#H")

        def coact(k):
            ai, hi = divmod(k, n)
            return {(ai * n + p) * n + q: c for (p, q), c in h.delta_basis(hi).items()}

        self.coaction = Matrix.from_function(f, a.dim * n * n, a.dim * n, coact)
        self.checks = self._checks()
        bad = self.checks.first_failure()
        if bad is not None:
            raise AxiomFailure(bad)

    def coact(self, x: Mapping) -> dict:
        n = self.host.dim
        return {divmod(k, n): v for k, v in self.coaction.apply(x).items()}

    def _checks(self) -> CheckList:
        alg = self.algebra
        h = self.host
        n = h.dim
        f = alg.field
        checks = CheckList()

        def mult2(x, y):
            acc: dict = {}
            for (p, q), u in x.items():
                for (s, t), v in y.items():
                    for k, w in alg.mult({p: u}, {s: v}).items():
                        for l, z in h.mult(h.basis(q), h.basis(t)).items():
                            add_into(acc, (k, l), w * z)
            return acc

        checks.add(compare_maps(
            "comodule algebra", f, [alg.dim, alg.dim],
            lambda t: flatten(self.coact(alg.mult(alg.basis(t[0]), alg.basis(t[1]))), [alg.dim, n]),
            lambda t: flatten(mult2(self.coact(alg.basis(t[0])), self.coact(alg.basis(t[1]))), [alg.dim, n])))

        def coassoc_l(t):
            acc: dict = {}
            for (p, q), c in self.coact(alg.basis(t[0])).items():
                for (s, u), d in self.coact({p: c}).items():
                    add_into(acc, (s, u, q), d)
            return flatten(acc, [alg.dim, n, n])

        def coassoc_r(t):
            acc: dict = {}
            for (p, q), c in self.coact(alg.basis(t[0])).items():
                for (s, u), d in h.delta_basis(q).items():
                    add_into(acc, (p, s, u), c * d)
            return flatten(acc, [alg.dim, n, n])

        checks.add(compare_maps("coassociative coaction", f, [alg.dim], coassoc_l, coassoc_r))
        return checks


def smash_product(a: ModuleAlgebra) -> SmashProduct:
    return SmashProduct(a)


# ---------------------------------------------------------------------------
# H-modules as right H*-comodules


def comodule_from_dual_action(m: HModule) -> Matrix:
    """Right H*-coaction rho(m) = sum_i (e_i.m) (x) e*_i as a (dimM*dimH) x dimM matrix."""
    n = m.host.dim
    d = m.dim

    def col(j):
        acc: dict = {}
        for i in range(n):
            for k, c in m.act_basis(i, j).items():
                add_into(acc, k * n + i, c)
        return acc

    return Matrix.from_function(m.field, d * n, d, col)


def action_from_dual_coaction(host: FinDimHopfAlgebra, dim: int, coaction: Matrix) -> Matrix:
    """Inverse translation: e_i . m = sum_k <rho(m)_k, e_i>."""
    n = host.dim

    def col(c):
        i, j = divmod(c, dim)
        acc: dict = {}
        for k, v in coaction.column_sparse(j).items():
            mk, hi = divmod(k, n)
            if hi == i:
                add_into(acc, mk, v)
        return acc

    return Matrix.from_function(host.field, dim, n * dim, col)
