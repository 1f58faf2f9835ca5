"""Azumaya algebras in the category of H-modules, the centralizer pi(A) with
its Miyashita-Ulbrich structure, and the invariants functor Z -> (A(x)Z)^A.

Conventions: A-bar is A as an H-module; the enveloping algebra A(x)A-bar has
(a(x)b)(c(x)d) = a(R2.c) (x) (r2.d)(r1R1.b).  End(A) matrices are stored
row-major, entry (out, in) at index out*d + in.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping

from .checks import Check, CheckList, compare_maps, compare_matrices, compare_vectors
from .galois import BiGaloisObject, Cotensor, RHComoduleAlgebra, check_quantum_commutative
from .hopf import AxiomFailure, RMatrix
from .linalg import Matrix, Subspace, kernel_basis, rank, solve, vstack_all
from .modules import (HModule, ModuleAlgebra, enveloping_direct, module_algebra_checks,
                      module_algebra_from_rule, module_from_rule, tensor_module)
from .tensor import add_into, flatten
from .transmutation import TransmutedHopf, yd_to_bicomodule
from .yd import YDModule, coaction_from_rule, lift_lambda2, yd_checks, yd_tensor


class NotAzumaya(ValueError):
    def __init__(self, which: str, rank_: int, size: int):
        super().__init__(f"{which} has rank {rank_} < {size}")
        self.which = which
        self.rank = rank_
        self.size = size


class NotHStarGalois(ValueError):
    def __init__(self, reason: str, witness: dict):
        super().__init__(reason)
        self.witness = witness


# ---------------------------------------------------------------------------
# Azumaya certification


def enveloping_algebra(a: ModuleAlgebra, r: RMatrix, verify: bool = True) -> ModuleAlgebra:
    mod = tensor_module(a.module, a.module, name=f"{a.name}e")
    mul = enveloping_direct(a, r)
    d = a.dim
    unit = flatten({(p, q): u * v for p, u in a.one.items() for q, v in a.one.items()}, [d, d])
    return ModuleAlgebra(mod, mul, Matrix.from_columns(a.field, d * d, [unit]), mod.name, verify)


def f_map(a: ModuleAlgebra, r: RMatrix) -> Matrix:
    """F(a(x)b-bar)(c) = a (R2.c)(R1.b), as a d^2 x d^2 matrix into End(A)."""
    d = a.dim

    def col(k):
        ai, bi = divmod(k, d)
        acc: dict = {}
        for c in range(d):
            for i, j, rc in r.terms:
                left = a.mult(a.basis(ai), a.act_basis(j, c))
                if not left:
                    continue
                for p, v in a.mult(left, a.act_basis(i, bi)).items():
                    add_into(acc, p * d + c, rc * v)
        return acc

    return Matrix.from_function(a.field, d * d, d * d, col)


def g_map(a: ModuleAlgebra, r: RMatrix) -> Matrix:
    """G(a-bar(x)b)(c) = (R2.a)(R1.c) b, the mirror image of F."""
    d = a.dim

    def col(k):
        ai, bi = divmod(k, d)
        acc: dict = {}
        for c in range(d):
            for i, j, rc in r.terms:
                left = a.mult(a.act_basis(j, ai), a.act_basis(i, c))
                if not left:
                    continue
                for p, v in a.mult(left, a.basis(bi)).items():
                    add_into(acc, p * d + c, rc * v)
        return acc

    return Matrix.from_function(a.field, d * d, d * d, col)


@dataclass
class AzumayaCandidate:
    algebra: ModuleAlgebra
    r: RMatrix
    enveloping: ModuleAlgebra
    F_map: Matrix
    G_map: Matrix
    checks: CheckList

    @property
    def host(self):
        return self.algebra.host

    @property
    def dim(self) -> int:
        return self.algebra.dim


def check_azumaya(a: ModuleAlgebra, r: RMatrix) -> AzumayaCandidate:
    """Certify A as Azumaya: F and G bijective, F an algebra map. Raises NotAzumaya."""
    if r.host is not a.host:
        raise ValueError("R-matrix and algebra have different hosts")
    d = a.dim
    env = enveloping_algebra(a, r)
    fm = f_map(a, r)
    gm = g_map(a, r)
    checks = CheckList()
    for which, m in (("F", fm), ("G", gm)):
        rk = rank(m)
        ok = rk == d * d
        checks.add(Check(f"{which} bijective", ok, None if ok else {"rank": rk, "size": d * d},
                         anchor="Azumaya"))
        if not ok:
            raise NotAzumaya(which, rk, d * d)

    def op(k):
        return Matrix.from_function(a.field, d, d, lambda c: {
            p // d: v for p, v in fm.column_sparse(k).items() if p % d == c})

    ops = [op(k) for k in range(d * d)]

    def lhs(tt):
        prod = env.mult(env.basis(tt[0]), env.basis(tt[1]))
        return fm.apply(prod)

    def rhs(tt):
        m = ops[tt[0]] @ ops[tt[1]]
        return {p * d + c: m[p, c] for p in range(d) for c in range(d) if m[p, c]}

    checks.add(compare_maps("F multiplicative", a.field, [d * d, d * d], lhs, rhs, anchor="Azumaya"))
    bad = checks.first_failure()
    if bad is not None:
        raise AxiomFailure(bad)
    return AzumayaCandidate(a, r, env, fm, gm, checks)


# ---------------------------------------------------------------------------
# coinvariants and the H*-Galois condition


def coinvariants_A0(a: ModuleAlgebra) -> Matrix:
    """Echelon basis of {x | h.x = eps(h) x}; checked to be a subalgebra."""
    h = a.host
    d = a.dim
    f = a.field
    blocks = []
    for i in range(h.dim):
        e = h._eps[i]
        blocks.append(Matrix.from_function(f, d, d, lambda m, i=i, e=e: _sub_scaled(a.act_basis(i, m), m, e)))
    basis = kernel_basis(vstack_all(f, d, blocks))
    sub = Subspace(basis)
    for p in range(sub.dim):
        for q in range(sub.dim):
            if not sub.contains(a.mult(sub.vector(p), sub.vector(q))):
                raise AxiomFailure(Check("coinvariants closed under product", False, {"pair": [p, q]},
                                         anchor="coinvariants"))
    return basis


def _sub_scaled(v: Mapping, m: int, e) -> dict:
    acc = dict(v)
    if e:
        add_into(acc, m, -e)
    return acc


@dataclass
class HStarGalois:
    ok: bool
    a0: Subspace
    can: Matrix                  # d^2 -> d*n, a(x)b -> a (e_i.b) (x) e*_i
    relations_dim: int
    witness: dict | None = None
    x_y: list[dict] = dc_field(default_factory=list)   # can^-1(1 (x) e*_k) in A(x)A, keys (x, y)


def check_hstar_galois(a: ModuleAlgebra) -> HStarGalois:
    """Is A(x)_{A0} A -> A(x)H*, a(x)b -> a b_(0) (x) b_(1), bijective?"""
    h = a.host
    n, d = h.dim, a.dim
    f = a.field
    a0 = Subspace(coinvariants_A0(a))
    if a0.dim == d and n > 1:
        return HStarGalois(False, a0, Matrix.zeros(f, d * n, d * d), 0,
                           {"reason": "trivial action", "dim_A": d, "dim_H": n})

    def can_col(k):
        xi, yi = divmod(k, d)
        acc: dict = {}
        for i in range(n):
            for p, v in a.mult(a.basis(xi), a.act_basis(i, yi)).items():
                add_into(acc, p * n + i, v)
        return acc

    can = Matrix.from_function(f, d * n, d * d, can_col)
    rel_cols = []
    for b in range(a0.dim):
        b0 = a0.vector(b)
        for xi in range(d):
            xb = a.mult(a.basis(xi), b0)
            for yi in range(d):
                acc: dict = {}
                for p, v in xb.items():
                    add_into(acc, p * d + yi, v)
                for p, v in a.mult(b0, a.basis(yi)).items():
                    add_into(acc, xi * d + p, -v)
                rel_cols.append(acc)
    rel_dim = rank(Matrix.from_columns(f, d * d, rel_cols)) if rel_cols else 0
    rk = rank(can)
    ok = rk == d * n and d * d - rel_dim == d * n
    if not ok:
        return HStarGalois(False, a0, can, rel_dim, {"rank": rk, "quotient_dim": d * d - rel_dim,
                                                      "target_dim": d * n})
    x_y = []
    for k in range(n):
        target = Matrix.from_columns(f, d * n, [{p * n + k: v for p, v in a.one.items()}])
        sol = solve(can, target)
        x_y.append({divmod(i, d): v for i, v in sol.column_sparse(0).items()})
    return HStarGalois(True, a0, can, rel_dim, None, x_y)


def mu_action(a: ModuleAlgebra, gal: HStarGalois, c: Mapping, k: int) -> dict:
    """c <- e*_k = x_i c y_i with x_i (x) y_i = can^-1(1 (x) e*_k)."""
    acc: dict = {}
    for (x, y), v in gal.x_y[k].items():
        for p, w in a.mult(a.mult(a.basis(x), c), a.basis(y)).items():
            add_into(acc, p, v * w)
    return acc


# ---------------------------------------------------------------------------
# pi(A)


@dataclass
class PiA:
    source: ModuleAlgebra
    galois: HStarGalois
    sub: Subspace                 # C_A(A0) inside A
    algebra: ModuleAlgebra        # pi(A) on its own basis
    yd: YDModule
    checks: CheckList

    @property
    def basis(self) -> Matrix:
        return self.sub.basis

    @property
    def dim(self) -> int:
        return self.sub.dim

    def bicomodule_algebra(self, t: TransmutedHopf) -> RHComoduleAlgebra:
        b = yd_to_bicomodule(self.yd, t)
        return RHComoduleAlgebra(self.algebra, b, name=f"pi({self.source.name})")


def compute_pi(a: ModuleAlgebra, gal: HStarGalois | None = None) -> PiA:
    """Centralizer of A0 with the restricted action and the coaction dual to the MU action."""
    gal = gal or check_hstar_galois(a)
    if not gal.ok:
        raise NotHStarGalois("A is not H*-Galois over A0", gal.witness or {})
    h = a.host
    f = a.field
    d = a.dim
    a0 = gal.a0
    blocks = []
    for b in range(a0.dim):
        b0 = a0.vector(b)
        blocks.append(Matrix.from_function(f, d, d, lambda m, b0=b0: _comm(a, a.basis(m), b0)))
    sub = Subspace(kernel_basis(vstack_all(f, d, blocks)) if blocks else Matrix.identity(f, d))
    checks = CheckList()

    def act_rule(i, k):
        co = sub.coords(a.act(h.basis(i), sub.vector(k)))
        if co is None:
            raise AxiomFailure(Check("centralizer is an H-submodule", False, {"basis": k}, anchor="pi(A)"))
        return co

    mod = module_from_rule(h, sub.dim, act_rule, name=f"pi({a.name})")

    def mul_rule(i, j):
        co = sub.coords(a.mult(sub.vector(i), sub.vector(j)))
        if co is None:
            raise AxiomFailure(Check("centralizer is a subalgebra", False, {"pair": [i, j]}, anchor="pi(A)"))
        return co

    alg = module_algebra_from_rule(mod, mul_rule, sub.coords(a.one), name=mod.name)

    def coact_rule(k):
        acc: dict = {}
        c = sub.vector(k)
        for i in range(h.dim):
            co = sub.coords(mu_action(a, gal, c, i))
            if co is None:
                raise AxiomFailure(Check("MU action preserves the centralizer", False,
                                         {"basis": k, "dual": i}, anchor="pi(A)"))
            for p, v in co.items():
                add_into(acc, (i, p), v)
        return acc

    yd = YDModule(mod, coaction_from_rule(h, sub.dim, coact_rule), name=mod.name, verify=False)
    yc = yd_checks(yd)
    checks.extend(yc)
    bad = checks.first_failure()
    if bad is not None:
        raise AxiomFailure(bad)
    yd.checks = yc
    return PiA(a, gal, sub, alg, yd, checks)


def _comm(a: ModuleAlgebra, x: Mapping, y: Mapping) -> dict:
    acc = a.mult(x, y)
    for k, v in a.mult(y, x).items():
        add_into(acc, k, -v)
    return acc


def pi_bigalois_checks(pi: PiA, t: TransmutedHopf) -> CheckList:
    """pi(A) through the YD dictionary: a bi-Galois object that is quantum commutative."""
    checks = CheckList()
    try:
        ca = pi.bicomodule_algebra(t)
        g = BiGaloisObject(ca)
        checks.extend(g.checks)
        checks.add(check_quantum_commutative(g))
    except AxiomFailure as exc:
        checks.add(exc.check)
    return checks


# ---------------------------------------------------------------------------
# A^e-modules and YD structure on A(x)Z


def _aemod_element(az: AzumayaCandidate, z: YDModule, ai: int, bi: int, ci: int, zi: int) -> dict:
    """(a(x)b-bar).(c(x)z) = a(R2.c)(r2 S^-1(z_{-1}) R1.b) (x) r1.z_0, keys (a', z')."""
    a = az.algebra
    h = a.host
    r = az.r
    acc: dict = {}
    for i, j, rc in r.terms:
        left = a.mult(a.basis(ai), a.act_basis(j, ci))
        if not left:
            continue
        rb = a.act_basis(i, bi)
        for (p, q), u in z.coact_basis(zi).items():
            sp = h.Sinv(h.basis(p))
            for i2, j2, sc in r.terms:
                right = a.act(h.mult(h.basis(j2), sp), rb)
                if not right:
                    continue
                full = a.mult(left, right)
                for s, w in z.act_basis(i2, q).items():
                    for k, v in full.items():
                        add_into(acc, (k, s), rc * u * sc * v * w)
    return acc


@dataclass
class AeModule:
    az: AzumayaCandidate
    z: YDModule
    action: Matrix        # (dA dZ) x (dA^2 dA dZ), column x*(dA dZ) + m
    operators: list[Matrix]
    checks: CheckList

    def act(self, x: int, v: Mapping) -> dict:
        return self.operators[x].apply(v)


def build_az_aemod(az: AzumayaCandidate, z: YDModule, verify: bool = True) -> AeModule:
    a = az.algebra
    d, dz = a.dim, z.dim
    dm = d * dz
    f = a.field

    def col(k):
        x, m = divmod(k, dm)
        ai, bi = divmod(x, d)
        ci, zi = divmod(m, dz)
        return flatten(_aemod_element(az, z, ai, bi, ci, zi), [d, dz])

    action = Matrix.from_function(f, dm, d * d * dm, col)
    ops = [Matrix.from_function(f, dm, dm, lambda m, x=x: action.column_sparse(x * dm + m))
           for x in range(d * d)]
    checks = CheckList()
    if verify:
        env = az.enveloping
        checks.extend(aemod_checks(env, ops, dm))
        bad = checks.first_failure()
        if bad is not None:
            raise AxiomFailure(bad)
    return AeModule(az, z, action, ops, checks)


def aemod_checks(env: ModuleAlgebra, ops: list[Matrix], dm: int) -> CheckList:
    """(xy).m = x.(y.m) on all basis pairs (x, y) as operator identities, and 1.m = m."""
    f = env.field
    checks = CheckList()
    n = env.dim
    ok = True
    witness = None
    for x in range(n):
        for y in range(n):
            prod = env.mult(env.basis(x), env.basis(y))
            lhs = Matrix.zeros(f, dm, dm)
            for k, v in prod.items():
                lhs = lhs + ops[k].scale(v)
            rhs = ops[x] @ ops[y]
            diff = lhs.first_difference(rhs)
            if diff is not None:
                ok = False
                witness = {"pair": [env.labels[x], env.labels[y]], "entry": list(diff)}
                break
        if not ok:
            break
    checks.add(Check("A^e module associativity", ok, witness, anchor="A^e-module"))
    unit = Matrix.zeros(f, dm, dm)
    for k, v in env.one.items():
        unit = unit + ops[k].scale(v)
    checks.add(Check("A^e module unit", unit.is_identity(), None, anchor="A^e-module"))
    return checks.anchored("A^e-module")


def az_lambda2(az: AzumayaCandidate) -> YDModule:
    return lift_lambda2(az.algebra.module, az.r, name=f"L2({az.algebra.name})")


def enveloping_yd(az: AzumayaCandidate) -> YDModule:
    """A(x)A-bar with lambda(a(x)b) = S(R1)S(r1) (x) R2.a (x) r2.b."""
    l2 = az_lambda2(az)
    return yd_tensor(l2, l2, name=f"{az.algebra.name}e", verify=False)


def build_az_yd(az: AzumayaCandidate, z: YDModule, aemod: AeModule | None = None) -> YDModule:
    """lambda(a(x)z) = S(R1) z_{-1} (x) R2.a (x) z_0, with the three compatibility checks."""
    a = az.algebra
    h = a.host
    f = a.field
    l2 = az_lambda2(az)
    yd = yd_tensor(l2, z, name=f"{a.name}(x){z.name}", verify=False)
    checks = CheckList()
    checks.extend(yd_checks(yd))
    aemod = aemod or build_az_aemod(az, z)
    env_yd = enveloping_yd(az)
    env = az.enveloping
    de, dm = env.dim, yd.dim

    # A^e as an algebra in YD
    checks.extend(yd_checks(env_yd))

    def col_l(tt):
        return flatten(env_yd.coact(env.mult(env.basis(tt[0]), env.basis(tt[1]))), [h.dim, de])

    def col_r(tt):
        acc: dict = {}
        for (p, q), u in env_yd.coact_basis(tt[0]).items():
            for (s, w), v in env_yd.coact_basis(tt[1]).items():
                hh = h.mult(h.basis(p), h.basis(s))
                for k, x in env.mult(env.basis(q), env.basis(w)).items():
                    for l, y in hh.items():
                        add_into(acc, (l, k), u * v * x * y)
        return flatten(acc, [h.dim, de])

    checks.add(compare_maps("enveloping multiplication colinear", f, [de, de], col_l, col_r,
                            anchor="A^e in YD"))
    checks.add(compare_vectors("enveloping unit colinear", f,
                               flatten(env_yd.coact(env.one), [h.dim, de]),
                               flatten({(k, p): u * v for k, u in h.one.items() for p, v in env.one.items()},
                                       [h.dim, de]), anchor="A^e in YD"))

    # the action A^e (x) (A(x)Z) -> A(x)Z is H-linear and H-colinear
    def lin_l(tt):
        acc: dict = {}
        for (p, q), c in h.delta_basis(tt[0]).items():
            for x, u in env.act_basis(p, tt[1]).items():
                for m, v in yd.act_basis(q, tt[2]).items():
                    for k, w in aemod.operators[x].column_sparse(m).items():
                        add_into(acc, k, c * u * v * w)
        return acc

    def lin_r(tt):
        return yd.act(h.basis(tt[0]), aemod.operators[tt[1]].column_sparse(tt[2]))

    checks.add(compare_maps("A^e action H-linear", f, [h.dim, de, dm], lin_l, lin_r, anchor="A^e-module"))

    def colin_l(tt):
        return flatten(yd.coact(aemod.operators[tt[0]].column_sparse(tt[1])), [h.dim, dm])

    def colin_r(tt):
        acc: dict = {}
        for (p, x), u in env_yd.coact_basis(tt[0]).items():
            for (s, m), v in yd.coact_basis(tt[1]).items():
                hh = h.mult(h.basis(p), h.basis(s))
                for k, w in aemod.operators[x].column_sparse(m).items():
                    for l, y in hh.items():
                        add_into(acc, (l, k), u * v * w * y)
        return flatten(acc, [h.dim, dm])

    checks.add(compare_maps("A^e action H-colinear", f, [de, dm], colin_l, colin_r, anchor="A^e-module"))
    bad = checks.first_failure()
    if bad is not None:
        raise AxiomFailure(bad)
    yd.checks = checks
    return yd


# ---------------------------------------------------------------------------
# the invariants functor


@dataclass
class Invariants:
    az: AzumayaCandidate
    z: YDModule
    sub: Subspace            # inside A(x)Z, index a*dZ + z
    yd: YDModule             # restricted structure
    ambient: YDModule
    checks: CheckList

    @property
    def dim(self) -> int:
        return self.sub.dim


def _restrict_yd(sub: Subspace, y: YDModule, name: str) -> YDModule:
    h = y.host

    def act_rule(i, k):
        co = sub.coords(y.act(h.basis(i), sub.vector(k)))
        if co is None:
            raise AxiomFailure(Check("invariants are an H-submodule", False, {"basis": k}))
        return co

    mod = module_from_rule(h, sub.dim, act_rule, name=name, verify=False)

    def coact_rule(k):
        by_h: dict = {}
        for (p, q), c in y.coact(sub.vector(k)).items():
            by_h.setdefault(p, {})[q] = c
        acc: dict = {}
        for p, vec in by_h.items():
            co = sub.coords(vec)
            if co is None:
                raise AxiomFailure(Check("invariants are an H-subcomodule", False, {"basis": k}))
            for q, c in co.items():
                add_into(acc, (p, q), c)
        return acc

    return YDModule(mod, coaction_from_rule(h, sub.dim, coact_rule), name=name, verify=False)


def _invariant_system(az: AzumayaCandidate, dz: int, op) -> Matrix:
    """Stack, over a in the basis of A, the maps v -> op(a, v)."""
    a = az.algebra
    d = a.dim
    f = a.field
    dm = d * dz
    return vstack_all(f, dm, [Matrix.from_function(f, dm, dm, lambda m, ai=ai: op(ai, m)) for ai in range(d)])


def invariants_functor(az: AzumayaCandidate, z: YDModule, aemod: AeModule | None = None,
                       yd: YDModule | None = None) -> Invariants:
    """(A(x)Z)^A = {v | (a(x)1).v = (1(x)a-bar).v for all a}."""
    a = az.algebra
    d, dz = a.dim, z.dim
    aemod = aemod or build_az_aemod(az, z)
    yd = yd or build_az_yd(az, z, aemod)
    one = a.one

    def env_index(x: Mapping, y: Mapping) -> dict:
        return {p * d + q: u * v for p, u in x.items() for q, v in y.items()}

    def op(ai, m):
        acc: dict = {}
        for k, c in env_index(a.basis(ai), one).items():
            for p, v in aemod.operators[k].column_sparse(m).items():
                add_into(acc, p, c * v)
        for k, c in env_index(one, a.basis(ai)).items():
            for p, v in aemod.operators[k].column_sparse(m).items():
                add_into(acc, p, -c * v)
        return acc

    sub = Subspace.kernel(_invariant_system(az, dz, op))
    checks = CheckList()

    # the same subspace from ac (x) z = (R2.c)(r2 S^-1(z_{-1}) R1.a) (x) r1.z_0 written out directly
    def op_direct(ai, m):
        ci, zi = divmod(m, dz)
        acc: dict = {}
        for p, v in a.mult(a.basis(ai), a.basis(ci)).items():
            add_into(acc, p * dz + zi, v)
        for p, v in _one_bar_action(az, z, ai, ci, zi).items():
            add_into(acc, p[0] * dz + p[1], -v)
        return acc

    alt = Subspace.kernel(_invariant_system(az, dz, op_direct))
    checks.add(Check("invariants: two characterizations agree", alt == sub,
                     None if alt == sub else {"dims": [sub.dim, alt.dim]}, anchor="invariants functor"))
    restricted = _restrict_yd(sub, yd, f"({a.name}(x){z.name})^A")
    yc = yd_checks(restricted)
    checks.extend(yc)
    return Invariants(az, z, sub, restricted, yd, checks)


def _one_bar_action(az: AzumayaCandidate, z: YDModule, ai: int, ci: int, zi: int) -> dict:
    """(R2.c)(r2 S^-1(z_{-1}) R1.a) (x) r1.z_0, i.e. the action of 1(x)a-bar."""
    a = az.algebra
    h = a.host
    acc: dict = {}
    for i, j, rc in az.r.terms:
        rc_ = a.act_basis(j, ci)
        ra = a.act_basis(i, ai)
        for (p, q), u in z.coact_basis(zi).items():
            sp = h.Sinv(h.basis(p))
            for i2, j2, sc in az.r.terms:
                right = a.act(h.mult(h.basis(j2), sp), ra)
                if not right:
                    continue
                full = a.mult(rc_, right)
                for s, w in z.act_basis(i2, q).items():
                    for k, v in full.items():
                        add_into(acc, (k, s), rc * u * sc * v * w)
    return acc


# ---------------------------------------------------------------------------
# comparison with the cotensor product


def invariants_cotensor_check(az: AzumayaCandidate, pi: PiA, z: YDModule, t: TransmutedHopf,
                              inv: Invariants | None = None, multiplicative: bool = False) -> CheckList:
    """(A(x)Z)^A = pi(A) box Z inside A(x)Z: same echelon basis, same YD matrices."""
    a = az.algebra
    d, dz = a.dim, z.dim
    f = a.field
    anchor = "invariants = cotensor"
    inv = inv or invariants_functor(az, z)
    checks = CheckList()
    checks.extend(inv.checks)
    pb = yd_to_bicomodule(pi.yd, t)
    zb = yd_to_bicomodule(z, t)
    ct = Cotensor(pb, zb)
    # pi(A) box Z sits in pi(A)(x)Z; push it into A(x)Z through the centralizer basis
    cols = []
    for k in range(ct.dim):
        acc: dict = {}
        for (ci, zi), v in ct.element(k).items():
            for p, w in pi.sub.vector(ci).items():
                add_into(acc, p * dz + zi, v * w)
        cols.append(acc)
    embedded = Subspace.span(Matrix.from_columns(f, d * dz, cols)) if cols else Subspace(Matrix.zeros(f, d * dz, 0))
    same = embedded == inv.sub
    checks.add(Check("equal echelon bases", same, None if same else {"dims": [inv.dim, embedded.dim]},
                     anchor=anchor))
    checks.add(Check("R-form cotensor agrees", ct.r_form_subspace() == ct.basis, anchor=anchor))
    if same:
        cyd = ct.yd_structure()
        checks.extend(ct.checks)
        # express the cotensor YD structure on the common echelon basis of A(x)Z
        emb = Matrix.from_columns(f, d * dz, cols)
        to_common = Matrix.from_columns(f, inv.dim, [inv.sub.coords(c) for c in cols])
        from .linalg import inverse
        back = inverse(to_common)
        h = a.host
        act = Matrix.from_function(f, inv.dim, h.dim * inv.dim, lambda c: _conj_action(cyd, to_common, back, c, inv.dim))
        co = Matrix.from_function(f, h.dim * inv.dim, inv.dim, lambda c: _conj_coaction(cyd, to_common, back, c, h.dim, inv.dim))
        checks.add(compare_matrices("equal action matrices", act, inv.yd.action, anchor=anchor))
        checks.add(compare_matrices("equal coaction matrices", co, inv.yd.coaction, anchor=anchor))
    if multiplicative:
        checks.extend(rh_invariants_multiplicative_check(az, pi, t, inv))
    return checks


def _conj_action(cyd: YDModule, to_common: Matrix, back: Matrix, c: int, n: int) -> dict:
    i, k = divmod(c, n)
    h = cyd.host
    src = back.column_sparse(k)
    return to_common.apply(cyd.act(h.basis(i), src))


def _conj_coaction(cyd: YDModule, to_common: Matrix, back: Matrix, k: int, hd: int, n: int) -> dict:
    src = back.column_sparse(k)
    acc: dict = {}
    for (p, q), c in cyd.coact(src).items():
        for s, v in to_common.column_sparse(q).items():
            add_into(acc, p * n + s, c * v)
    return acc


def rh_invariants_multiplicative_check(az: AzumayaCandidate, pi: PiA, t: TransmutedHopf, inv: Invariants) -> CheckList:
    """For Z = RH: c -> chi+(c) maps pi(A) onto (A(x)RH)^A as algebras (braided product A#RH)."""
    from .modules import braided_product_algebra
    a = az.algebra
    d, n = a.dim, t.dim
    f = a.field
    anchor = "pi(A) = (A(x)RH)^A"
    checks = CheckList()
    pb = yd_to_bicomodule(pi.yd, t)
    amb = braided_product_algebra(a, t.algebra, t.r, verify=False)

    def image(k):
        acc: dict = {}
        for (ci, x), v in pb.chi_plus_basis(k).items():
            for p, w in pi.sub.vector(ci).items():
                add_into(acc, p * n + x, v * w)
        return acc

    imgs = [image(k) for k in range(pi.dim)]
    inside = all(inv.sub.contains(v) for v in imgs)
    checks.add(Check("comparison lands in the invariants", inside, anchor=anchor))
    m = Matrix.from_columns(f, d * n, imgs)
    rk = rank(m)
    ok = rk == pi.dim == inv.dim
    checks.add(Check("comparison bijective", ok, None if ok else {"rank": rk, "dims": [pi.dim, inv.dim]},
                     anchor=anchor))
    pa = pi.algebra

    def lhs(tt):
        return m.apply(pa.mult(pa.basis(tt[0]), pa.basis(tt[1])))

    def rhs(tt):
        return amb.mult(imgs[tt[0]], imgs[tt[1]])

    checks.add(compare_maps("comparison multiplicative", f, [pi.dim, pi.dim], lhs, rhs, anchor=anchor))
    checks.add(compare_vectors("comparison unital", f, m.apply(pa.one), amb.one, anchor=anchor))
    return checks


def trivialization_check(az: AzumayaCandidate, z: YDModule, inv: Invariants | None = None) -> CheckList:
    """For Z a lambda1-lift: the twisted A^e-action equals the untwisted one, and z -> 1(x)z is a
    YD isomorphism Z -> (A(x)Z)^A, so F_A acts trivially."""
    a = az.algebra
    d, dz = a.dim, z.dim
    f = a.field
    anchor = "F_A trivialization"
    inv = inv or invariants_functor(az, z)
    checks = CheckList()
    aemod = build_az_aemod(az, z, verify=False)

    def untwisted_col(k):
        x, m = divmod(k, d * dz)
        ci, zi = divmod(m, dz)
        acc: dict = {}
        for p, v in az.F_map.column_sparse(x).items():
            out, inn = divmod(p, d)
            if inn == ci:
                add_into(acc, out * dz + zi, v)
        return acc

    plain = Matrix.from_function(f, d * dz, d * d * d * dz, untwisted_col)
    checks.add(compare_matrices("twist is trivial", aemod.action, plain, anchor=anchor))
    checks.add(Check("dimension equals dim Z", inv.dim == dz, None if inv.dim == dz else
                     {"dims": [inv.dim, dz]}, anchor=anchor))
    cols = [{p * dz + j: v for p, v in a.one.items()} for j in range(dz)]
    co = [inv.sub.coords(c) for c in cols]
    if any(c is None for c in co):
        checks.add(Check("z -> 1(x)z lands in the invariants", False, anchor=anchor))
        return checks
    m = Matrix.from_columns(f, inv.dim, co)
    ok = rank(m) == dz == inv.dim
    checks.add(Check("z -> 1(x)z bijective", ok, anchor=anchor))
    if ok:
        from .yd import is_yd_map
        yc = is_yd_map(m, z, inv.yd)
        for c in yc:
            c.anchor = anchor
        checks.extend(yc)
    return checks
