"""The transmuted braided Hopf algebra of a quasitriangular Hopf algebra.

``RH`` is H as an algebra, with the adjoint action h > x = h1 x S(h2),
braided coproduct x1 S(R2) (x) R1 > x2, counit eps and antipode
R2 S(R1 > x).  Comodules over it live in the category of H-modules; the
ones coming from Yetter-Drinfeld modules are exactly the cocommutative
bicomodules.
"""
from __future__ import annotations

from typing import Mapping

from .checks import Check, CheckList, compare_maps, compare_matrices, compare_vectors
from .hopf import AxiomFailure, FinDimHopfAlgebra, RMatrix
from .linalg import DimensionMismatch, Matrix, NotInvertible, inverse
from .modules import HModule, ModuleAlgebra, adjoint_module, is_module_map, tensor_module
from .tensor import add_into, flatten
from .yd import YDModule, coaction_from_rule, comodule_checks


class TransmutedHopf:
    def __init__(self, h: FinDimHopfAlgebra, r: RMatrix, verify: bool = True):
        if r.host is not h:
            raise ValueError("R-matrix belongs to a different Hopf algebra")
        self.host = h
        self.r = r
        self.field = h.field
        self.dim = n = h.dim
        self.labels = h.labels
        self.module = adjoint_module(h)
        self.algebra = ModuleAlgebra(self.module, h.mul, h.unit, name="RH", verify=verify)
        self.one = h.one
        self._eps = h._eps
        forms = [self._delta_form(k) for k in range(5)]
        self._dt = forms[0]
        self.comul_forms = [Matrix.from_function(self.field, n * n, n, lambda i, f=f: flatten(f[i], [n, n]))
                            for f in forms]
        self.braided_comul = self.comul_forms[0]
        self.braided_counit = h.counit
        self._st = [self._antipode_basis(i) for i in range(n)]
        self.braided_antipode = Matrix.from_columns(self.field, n, self._st)
        self._sigma_cache: dict = {}
        self.checks = None
        if verify:
            self.checks = transmutation_checks(self)
            bad = self.checks.first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def __repr__(self):
        return f"<transmuted Hopf algebra dim {self.dim}>"

    # structure ------------------------------------------------------------

    def _delta_form(self, which: int) -> list[dict]:
        """The braided coproduct on basis elements, by one of five equal expressions."""
        h = self.host
        f = self.field
        B = h.basis
        S = h.S
        terms = self.r.terms
        out = []
        for x in range(self.dim):
            acc: dict = {}
            for (a, b), c in h.delta_basis(x).items():
                for i, j, u in terms:
                    if which == 0:
                        # x1 S(R2) (x) R1 > x2
                        left = h.mult(B(a), S(B(j)))
                        right = h.adjoint(B(i), B(b))
                        _acc_tensor(acc, left, right, c * u)
                        continue
                    for p, q, v in terms:
                        if which == 1:
                            # x1 S(r2) S(R2) (x) R1 x2 S(r1)
                            left = h.prod(B(a), S(B(q)), S(B(j)))
                            right = h.prod(B(i), B(b), S(B(p)))
                        elif which == 2:
                            # x1 r2 S(R2) (x) R1 x2 r1
                            left = h.prod(B(a), B(q), S(B(j)))
                            right = h.prod(B(i), B(b), B(p))
                        elif which == 3:
                            # r2 x2 S(R2) (x) R1 r1 x1
                            left = h.prod(B(q), B(b), S(B(j)))
                            right = h.prod(B(i), B(p), B(a))
                        else:
                            break
                        _acc_tensor(acc, left, right, c * u * v)
                    if which == 4:
                        # R2 > x2 (x) R1 x1
                        left = h.adjoint(B(j), B(b))
                        right = h.mult(B(i), B(a))
                        _acc_tensor(acc, left, right, c * u)
            out.append(acc)
        return out

    def _antipode_basis(self, x: int) -> dict:
        h = self.host
        acc: dict = {}
        for i, j, c in self.r.terms:
            for k, v in h.mult(h.basis(j), h.S(h.adjoint(h.basis(i), h.basis(x)))).items():
                add_into(acc, k, c * v)
        return acc

    def delta(self, x: Mapping) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for k, c in self._dt[i].items():
                add_into(acc, k, a * c)
        return acc

    def delta_basis(self, i: int) -> dict:
        return self._dt[i]

    def S(self, x: Mapping) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for k, c in self._st[i].items():
                add_into(acc, k, a * c)
        return acc

    def eps(self, x: Mapping):
        return self.host.eps(x)

    def mult(self, x: Mapping, y: Mapping) -> dict:
        return self.host.mult(x, y)

    def act(self, h: Mapping, x: Mapping) -> dict:
        return self.module.act(h, x)

    def act_basis(self, i: int, x: int) -> dict:
        return self.module.act_basis(i, x)

    def psi(self, el: Mapping) -> dict:
        """Braiding of the adjoint module with itself: a(x)b -> R2>b (x) R1>a."""
        acc: dict = {}
        for (a, b), c in el.items():
            for i, j, u in self.r.terms:
                _acc_tensor(acc, self.act_basis(j, b), self.act_basis(i, a), c * u)
        return acc

    def psi_inverse_with(self, el: Mapping, m: HModule) -> dict:
        """psi^{-1}_{RH,M}: M(x)RH -> RH(x)M, (a(x)b) -> S(R1)>b (x) R2.a."""
        h = self.host
        acc: dict = {}
        for (a, b), c in el.items():
            for i, j, u in self.r.terms:
                _acc_tensor(acc, self.act(h.S(h.basis(i)), {b: self.field.one}), m.act_basis(j, a), c * u)
        return acc

    # half-braiding ------------------------------------------------------

    def sigma_element(self, m: HModule, el: Mapping) -> dict:
        """sigma(x(x)m) = r2 R1.m (x) r1 x R2 on RH(x)M."""
        h = self.host
        acc: dict = {}
        for (x, a), c in el.items():
            for i, j, u in self.r.terms:
                xr = h.mult(h.basis(x), h.basis(j))
                ra = m.act_basis(i, a)
                for p, q, v in self.r.terms:
                    left = m.act(h.basis(q), ra)
                    if not left:
                        continue
                    right = h.mult(h.basis(p), xr)
                    _acc_tensor(acc, left, right, c * u * v)
        return acc

    def half_braiding_sigma(self, m: HModule) -> Matrix:
        key = id(m)
        hit = self._sigma_cache.get(key)
        if hit is not None and hit[0] is m:
            return hit[1]
        n, d = self.dim, m.dim
        f = self.field
        mat = Matrix.from_function(f, d * n, n * d, lambda k: flatten(
            self.sigma_element(m, {divmod(k, d): f.one}), [d, n]))
        self._sigma_cache[key] = (m, mat)
        return mat


def _acc_tensor(acc: dict, left: Mapping, right: Mapping, c):
    for p, u in left.items():
        for q, v in right.items():
            add_into(acc, (p, q), c * u * v)


def transmutation_checks(t: TransmutedHopf) -> CheckList:
    h = t.host
    f = t.field
    n = t.dim
    B = h.basis
    lab = h.labels
    checks = CheckList()
    for k in range(1, 5):
        checks.add(compare_matrices(f"braided coproduct form {k + 1}", t.comul_forms[0],
                                    t.comul_forms[k], anchor="transmutation"))
    had = t.module
    had2 = tensor_module(had, had)
    checks.add(_renamed(is_module_map(t.braided_comul, had, had2), "H-linear braided coproduct"))
    triv = _trivial_1(h)
    checks.add(_renamed(is_module_map(t.braided_counit, had, triv), "H-linear braided counit"))
    checks.add(_renamed(is_module_map(t.braided_antipode, had, had), "H-linear braided antipode"))

    def coassoc_l(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            for (p, q), d in t.delta_basis(a).items():
                add_into(acc, (p, q, b), c * d)
        return flatten(acc, [n] * 3)

    def coassoc_r(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            for (p, q), d in t.delta_basis(b).items():
                add_into(acc, (a, p, q), c * d)
        return flatten(acc, [n] * 3)

    checks.add(compare_maps("braided coassociativity", f, [n], coassoc_l, coassoc_r, [lab]))

    def counit_l(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            add_into(acc, b, c * h._eps[a])
        return acc

    def counit_r(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            add_into(acc, a, c * h._eps[b])
        return acc

    c = compare_maps("braided counit", f, [n], counit_l, lambda tt: B(tt[0]), [lab])
    if c:
        c = compare_maps("braided counit", f, [n], counit_r, lambda tt: B(tt[0]), [lab])
    checks.add(c)

    def bialg_l(tt):
        return flatten(t.delta(h.mult(B(tt[0]), B(tt[1]))), [n, n])

    def bialg_r(tt):
        # (mul (x) mul)(id (x) psi (x) id)(Delta x (x) Delta y)
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            for (p, q), d in t.delta_basis(tt[1]).items():
                for (u, v), e in t.psi({(b, p): c * d}).items():
                    _acc_tensor(acc, h.mult(B(a), B(u)), h.mult(B(v), B(q)), e)
        return flatten(acc, [n, n])

    c = compare_maps("braided bialgebra", f, [n, n], bialg_l, bialg_r, [lab, lab], anchor="transmutation")
    if c:
        c = compare_vectors("braided bialgebra", f, flatten(t.delta(h.one), [n, n]),
                            flatten(h.embed(2, {}), [n, n]), anchor="transmutation")
    checks.add(c)

    def unit_counit(tt):
        e = h._eps[tt[0]]
        return {k: e * v for k, v in h.one.items() if e * v}

    def anti_l(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            for k, v in h.mult(t.S(B(a)), B(b)).items():
                add_into(acc, k, c * v)
        return acc

    def anti_r(tt):
        acc: dict = {}
        for (a, b), c in t.delta_basis(tt[0]).items():
            for k, v in h.mult(B(a), t.S(B(b))).items():
                add_into(acc, k, c * v)
        return acc

    c = compare_maps("braided antipode", f, [n], anti_l, unit_counit, [lab])
    if c:
        c = compare_maps("braided antipode", f, [n], anti_r, unit_counit, [lab])
    checks.add(c)
    return checks.anchored("transmutation")


def _renamed(c: Check, name: str) -> Check:
    c.name = name
    return c


def _trivial_1(h: FinDimHopfAlgebra) -> HModule:
    from .modules import trivial_module
    return trivial_module(h, 1, "k")


def transmute(h: FinDimHopfAlgebra, r: RMatrix) -> TransmutedHopf:
    return TransmutedHopf(h, r)


def half_braiding_sigma(t: TransmutedHopf, m: HModule) -> Matrix:
    return t.half_braiding_sigma(m)


def sigma_checks(t: TransmutedHopf, m: HModule) -> CheckList:
    """sigma_{RH,M} is H-linear and invertible."""
    checks = CheckList()
    s = t.half_braiding_sigma(m)
    checks.add(_renamed(is_module_map(s, tensor_module(t.module, m), tensor_module(m, t.module)),
                        "H-linear half-braiding"))
    try:
        inverse(s)
        checks.add(Check("invertible half-braiding", True))
    except NotInvertible as exc:
        checks.add(Check("invertible half-braiding", False, {"rank": exc.rank, "size": exc.size}))
    return checks.anchored("half-braiding")


# ---------------------------------------------------------------------------
# comodules over RH inside H-modules


class RHComodule:
    """An H-module with a left coaction ``left`` (n*d x d, rows h*d+m), a right
    coaction ``right`` (d*n x d, rows m*n+h), or both."""

    def __init__(self, t: TransmutedHopf, module: HModule, left: Matrix | None = None,
                 right: Matrix | None = None, name: str = "", verify: bool = True):
        n, d = t.dim, module.dim
        if left is None and right is None:
            raise ValueError("a comodule needs at least one coaction")
        if left is not None and left.shape != (n * d, d):
            raise DimensionMismatch(f"left coaction has shape {left.shape}")
        if right is not None and right.shape != (d * n, d):
            raise DimensionMismatch(f"right coaction has shape {right.shape}")
        self.t = t
        self.host = t.host
        self.field = t.field
        self.module = module
        self.dim = d
        self.labels = module.labels
        self.name = name or module.name
        self.left = left
        self.right = right
        self._l = [{divmod(k, d): v for k, v in c.items()} for c in left.sparse_columns()] if left else None
        self._r = [{divmod(k, n): v for k, v in c.items()} for c in right.sparse_columns()] if right else None
        self.checks = None
        if verify:
            self.checks = rh_comodule_checks(self)
            bad = self.checks.first_failure()
            if bad is not None:
                raise AxiomFailure(bad)

    def __repr__(self):
        sides = ("left " if self.left else "") + ("right" if self.right else "")
        return f"<RH-comodule {self.name} dim {self.dim} ({sides.strip()})>"

    @property
    def is_bicomodule(self) -> bool:
        return self.left is not None and self.right is not None

    def act(self, h: Mapping, m: Mapping) -> dict:
        return self.module.act(h, m)

    def act_basis(self, i: int, m: int) -> dict:
        return self.module.act_basis(i, m)

    def chi_minus(self, m: Mapping) -> dict:
        acc: dict = {}
        for j, c in m.items():
            for k, v in self._l[j].items():
                add_into(acc, k, c * v)
        return acc

    def chi_plus(self, m: Mapping) -> dict:
        acc: dict = {}
        for j, c in m.items():
            for k, v in self._r[j].items():
                add_into(acc, k, c * v)
        return acc

    def chi_minus_basis(self, m: int) -> dict:
        return self._l[m]

    def chi_plus_basis(self, m: int) -> dict:
        return self._r[m]

    def left_only(self) -> "RHComodule":
        return RHComodule(self.t, self.module, left=self.left, name=self.name, verify=False)

    def right_only(self) -> "RHComodule":
        return RHComodule(self.t, self.module, right=self.right, name=self.name, verify=False)


def rh_comodule_checks(c: RHComodule) -> CheckList:
    t = c.t
    f = c.field
    n, d = t.dim, c.dim
    checks = CheckList()
    if c.left is not None:
        checks.add(_renamed(is_module_map(c.left, c.module, tensor_module(t.module, c.module)),
                            "H-linear left coaction"))
        checks.extend(comodule_checks(t, d, c.chi_minus, c.labels, prefix="left "))
    if c.right is not None:
        checks.add(_renamed(is_module_map(c.right, c.module, tensor_module(c.module, t.module)),
                            "H-linear right coaction"))

        def lhs(tt):
            acc: dict = {}
            for (m, x), u in c.chi_plus_basis(tt[0]).items():
                for (p, q), v in c.chi_plus_basis(m).items():
                    add_into(acc, (p, q, x), u * v)
            return flatten(acc, [d, n, n])

        def rhs(tt):
            acc: dict = {}
            for (m, x), u in c.chi_plus_basis(tt[0]).items():
                for (p, q), v in t.delta_basis(x).items():
                    add_into(acc, (m, p, q), u * v)
            return flatten(acc, [d, n, n])

        checks.add(compare_maps("right comodule coassociativity", f, [d], lhs, rhs, [c.labels]))

        def counit(tt):
            acc: dict = {}
            for (m, x), u in c.chi_plus_basis(tt[0]).items():
                add_into(acc, m, u * t.host._eps[x])
            return acc

        checks.add(compare_maps("right comodule counit", f, [d], counit,
                                lambda tt: {tt[0]: f.one}, [c.labels]))
    if c.left is not None and c.right is not None:
        def lr(tt):
            acc: dict = {}
            for (x, m), u in c.chi_minus_basis(tt[0]).items():
                for (p, y), v in c.chi_plus_basis(m).items():
                    add_into(acc, (x, p, y), u * v)
            return flatten(acc, [n, d, n])

        def rl(tt):
            acc: dict = {}
            for (m, y), u in c.chi_plus_basis(tt[0]).items():
                for (x, p), v in c.chi_minus_basis(m).items():
                    add_into(acc, (x, p, y), u * v)
            return flatten(acc, [n, d, n])

        checks.add(compare_maps("bicomodule", f, [d], lr, rl, [c.labels]))
    return checks.anchored("RH-comodule")


def is_cocommutative_bicomodule(c: RHComodule) -> Check:
    """chi+ = sigma o chi-."""
    t = c.t
    f = c.field
    n, d = t.dim, c.dim
    return compare_maps(
        "cocommutative bicomodule", f, [d],
        lambda tt: flatten(t.sigma_element(c.module, c.chi_minus_basis(tt[0])), [d, n]),
        lambda tt: flatten(c.chi_plus_basis(tt[0]), [d, n]), [c.labels], anchor="cocommutativity")


def trivial_bicomodule(t: TransmutedHopf, m: HModule) -> RHComodule:
    n, d = t.dim, m.dim
    one = t.one
    left = Matrix.from_function(t.field, n * d, d, lambda j: {k * d + j: c for k, c in one.items()})
    right = Matrix.from_function(t.field, d * n, d, lambda j: {j * n + k: c for k, c in one.items()})
    return RHComodule(t, m, left, right, name=f"{m.name}^t")


# ---------------------------------------------------------------------------
# Yetter-Drinfeld modules <-> cocommutative bicomodules


def yd_to_bicomodule(z: YDModule, t: TransmutedHopf, verify: bool = True) -> RHComodule:
    """chi-(m) = m_{-1} S(R2) (x) R1.m_0 and chi+(m) = R2.m_0 (x) R1 m_{-1}."""
    h = t.host
    n, d = t.dim, z.dim
    B = h.basis

    def left(j):
        acc: dict = {}
        for (p, q), u in z.coact_basis(j).items():
            for i, k, c in t.r.terms:
                _acc_tensor(acc, h.mult(B(p), h.S(B(k))), z.act_basis(i, q), u * c)
        return flatten(acc, [n, d])

    def right(j):
        acc: dict = {}
        for (p, q), u in z.coact_basis(j).items():
            for i, k, c in t.r.terms:
                _acc_tensor(acc, z.act_basis(k, q), h.mult(B(i), B(p)), u * c)
        return flatten(acc, [d, n])

    f = t.field
    b = RHComodule(t, z.module, Matrix.from_function(f, n * d, d, left),
                   Matrix.from_function(f, d * n, d, right), name=z.name, verify=verify)
    if verify:
        c = is_cocommutative_bicomodule(b)
        if not c:
            raise AxiomFailure(c)
    return b


def bicomodule_to_yd(b: RHComodule, verify: bool = True) -> YDModule:
    """lambda(n) = n_(-1) R2 (x) R1.n_(0); the chi+ form S(R1) n_(1) (x) R2.n_(0) must agree."""
    t = b.t
    h = t.host
    B = h.basis
    d = b.dim

    def from_left(j):
        acc: dict = {}
        for (p, q), u in b.chi_minus_basis(j).items():
            for i, k, c in t.r.terms:
                _acc_tensor(acc, h.mult(B(p), B(k)), b.act_basis(i, q), u * c)
        return acc

    def from_right(j):
        acc: dict = {}
        for (q, p), u in b.chi_plus_basis(j).items():
            for i, k, c in t.r.terms:
                _acc_tensor(acc, h.mult(h.S(B(i)), B(p)), b.act_basis(k, q), u * c)
        return acc

    co = coaction_from_rule(h, d, from_left)
    if b.right is not None:
        other = coaction_from_rule(h, d, from_right)
        c = compare_matrices("both coaction formulas agree", co, other, anchor="YD dictionary")
        if not c:
            raise AxiomFailure(c)
    return YDModule(b.module, co, b.name, verify)


def transferred_phi(m: RHComodule, n: RHComodule) -> Matrix:
    """phi(m(x)n) = m_(-1) R2 . n (x) R1 . m_(0) on M(x)N -> N(x)M."""
    for b in (m, n):
        if not b.is_bicomodule or not is_cocommutative_bicomodule(b):
            raise ValueError(f"{b.name} is not a cocommutative bicomodule")
    t = m.t
    h = t.host
    f = t.field
    dm, dn = m.dim, n.dim

    def col(k):
        a, b = divmod(k, dn)
        acc: dict = {}
        for (p, q), u in m.chi_minus_basis(a).items():
            for i, j, c in t.r.terms:
                left = n.act(h.mult(h.basis(p), h.basis(j)), {b: f.one})
                if left:
                    _acc_tensor(acc, left, m.act_basis(i, q), u * c)
        return flatten(acc, [dn, dm])

    return Matrix.from_function(f, dn * dm, dm * dn, col)
