"""Bundled example Hopf algebras, R-matrices, modules and algebras."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping

from .hopf import FinDimHopfAlgebra, HopfDescription, RMatrix
from .linalg import Field, Matrix, QQ
from .modules import HModule, ModuleAlgebra, module_algebra_from_rule, module_from_rule, trivial_module
from .tensor import add_into


def describe(fld: Field, labels: list[str],
             mul: Callable[[int, int], Mapping[int, object]],
             unit: Mapping[int, object],
             comul: Callable[[int], Mapping[tuple[int, int], object]],
             counit: Callable[[int], object],
             antipode: Callable[[int], Mapping[int, object]]) -> HopfDescription:
    """Assemble structure matrices from basis-level rules."""
    n = len(labels)
    return HopfDescription(
        field=fld, dim=n, labels=list(labels),
        mul=Matrix.from_function(fld, n, n * n, lambda c: mul(*divmod(c, n))),
        unit=Matrix.from_columns(fld, n, [unit]),
        comul=Matrix.from_function(fld, n * n, n,
                                   lambda i: {a * n + b: v for (a, b), v in comul(i).items()}),
        counit=Matrix.from_function(fld, 1, n, lambda i: {0: counit(i)}),
        antipode=Matrix.from_function(fld, n, n, antipode))


def r_vector(fld: Field, n: int, terms: Mapping[tuple[int, int], object]) -> Matrix:
    col: dict = {}
    for (i, j), v in terms.items():
        col[i * n + j] = col.get(i * n + j, fld.zero) + fld(v)
    return Matrix.from_columns(fld, n * n, [col])


# ---------------------------------------------------------------------------
# Sweedler's four-dimensional Hopf algebra
#
# basis g^a x^b at index a + 2b: 1, g, x, gx


def _sw(a, b):
    return (a % 2) + 2 * b


def _sw_split(i):
    return i % 2, i // 2


def sweedler_description(fld: Field = QQ, *, flip_mul: tuple[int, int] | None = None,
                         coassoc_sign: int = 1, eps_g: int = 1,
                         unit_sign: int = 1) -> HopfDescription:
    """Sweedler's H4.  The keyword arguments only exist to build broken variants."""
    if fld.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic different from 2")

    def mul(i, j):
        a, b = _sw_split(i)
        c, d = _sw_split(j)
        if b + d > 1:
            return {}
        sign = -1 if (b and c) else 1
        if flip_mul == (i, j):
            sign = -sign
        return {_sw(a + c, b + d): sign}

    def comul(i):
        a, b = _sw_split(i)
        if b == 0:
            return {(i, i): 1}
        # g^a x -> g^a x (x) g^a + g^(a+1) (x) g^a x
        return {(_sw(a, 1), _sw(a, 0)): 1, (_sw(a + 1, 0), _sw(a, 1)): coassoc_sign}

    def counit(i):
        a, b = _sw_split(i)
        if b:
            return 0
        return eps_g if a else 1

    antipode = {0: {0: 1}, 1: {1: 1}, 2: {3: -1}, 3: {2: 1}}
    return describe(fld, ["1", "g", "x", "gx"], mul, {0: unit_sign}, comul, counit,
                    lambda i: antipode[i])


def sweedler_r(fld: Field, t) -> Matrix:
    """R_t = 1/2(1(x)1 + 1(x)g + g(x)1 - g(x)g) + t/2(x(x)x + x(x)xg + xg(x)xg - xg(x)x).

    Written in the basis 1, g, x, gx with xg = -gx this is
    t/2(x(x)x - x(x)gx + gx(x)x + gx(x)gx).
    """
    half = fld(1) / fld(2)
    t = fld(t)
    terms = {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half}
    if t:
        ht = half * t
        terms.update({(2, 2): ht, (2, 3): -ht, (3, 2): ht, (3, 3): ht})
    return r_vector(fld, 4, terms)


# ---------------------------------------------------------------------------
# cyclic group algebras


def group_algebra_description(n: int, fld: Field = QQ, *, square_sign: int = 1,
                              antipode_sign: int = 1) -> HopfDescription:
    """k C_n with basis g^0..g^(n-1).  ``square_sign``/``antipode_sign`` perturb g*g and S(g)."""

    def mul(i, j):
        c = square_sign if (i == 1 and j == 1) else 1
        return {(i + j) % n: c}

    def antipode(i):
        c = antipode_sign if i == 1 else 1
        return {(-i) % n: c}

    labels = ["1"] + (["g"] if n > 1 else []) + [f"g{i}" for i in range(2, n)]
    return describe(fld, labels, mul, {0: 1}, lambda i: {(i, i): 1}, lambda i: 1, antipode)


def bicharacter_r(n: int, q, fld: Field) -> Matrix:
    """R = 1/n sum q^(-ij) g^i (x) g^j for a primitive n-th root of unity q."""
    q = fld(q)
    if n > 1 and not is_primitive_root(q, n):
        raise ValueError(f"{fld.format(q)} is not a primitive {n}-th root of unity")
    if not fld(n):
        raise ValueError(f"{n} is not invertible in {fld.name}")
    qinv = fld.one / q
    inv_n = fld.one / fld(n)
    return r_vector(fld, n, {(i, j): inv_n * qinv ** ((i * j) % n)
                             for i in range(n) for j in range(n)})


def is_primitive_root(q, n: int) -> bool:
    p = q
    for k in range(1, n):
        if p == 1:
            return False
        p = p * q
    return p == 1


def bicharacter_cocycle_r(n: int, omega: Mapping[int, object], fld: Field) -> Matrix:
    """R = sum_{s,t} f(s,t) e_s (x) e_t in idempotent coordinates, with f(s,t) = omega[t]^s.

    Only a bicharacter when omega[t] = q^t for a fixed root q; other choices
    break QT2/QT3 on purpose.
    """
    # idempotents e_s = 1/n sum_i q^(-si) g^i need a primitive root in the field
    q = _find_primitive_root(n, fld)
    inv_n = fld.one / fld(n)
    qi = fld.one / q

    def e(s):
        return {i: inv_n * qi ** ((s * i) % n) for i in range(n)}

    terms: dict = {}
    for s in range(n):
        for t in range(n):
            f = fld(omega.get(t, 1)) ** s if t else fld.one
            for i, a in e(s).items():
                for j, b in e(t).items():
                    terms[(i, j)] = terms.get((i, j), fld.zero) + f * a * b
    return r_vector(fld, n, terms)


def _find_primitive_root(n: int, fld: Field):
    if n == 1:
        return fld.one
    if n == 2:
        return fld(-1)
    p = fld.characteristic
    for c in range(2, p):
        if is_primitive_root(fld(c), n):
            return fld(c)
    raise ValueError(f"no primitive {n}-th root of unity in {fld.name}")


# ---------------------------------------------------------------------------
# module algebras for the Brauer pipeline


def sweedler_rep2(fld: Field = QQ) -> list[Matrix]:
    """The 2-dim representation g -> diag(1,-1), x -> e12, listed on 1, g, x, gx."""
    one = Matrix.identity(fld, 2)
    g = Matrix.from_rows(fld, [[1, 0], [0, -1]])
    x = Matrix.from_rows(fld, [[0, 1], [0, 0]])
    return [one, g, x, g @ x]


def matrix_algebra_module(module: HModule, name: str = "", verify: bool = True) -> ModuleAlgebra:
    """End(V) with h.f = (h1.-) o f o (S(h2).-); basis E_ij at index i*n + j."""
    h = module.host
    n = module.dim
    f = module.field
    ops = [module.operator(h.basis(i)) for i in range(h.dim)]
    s_ops = [module.operator(h.S(h.basis(i))) for i in range(h.dim)]

    def unit_matrix(k):
        i, j = divmod(k, n)
        return Matrix.from_sparse(f, n, n, [(i, j, f.one)])

    def to_vec(m: Matrix) -> dict:
        return {r * n + c: m[r, c] for r in range(n) for c in range(n) if m[r, c]}

    def act(i, k):
        acc: dict = {}
        e = unit_matrix(k)
        for (p, q), c in h.delta_basis(i).items():
            for key, v in to_vec(ops[p] @ e @ s_ops[q]).items():
                add_into(acc, key, c * v)
        return acc

    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    mod = module_from_rule(h, n * n, act, labels, name or f"End({module.name})", verify=verify)

    def mul(a, b):
        (i, j), (k, l) = divmod(a, n), divmod(b, n)
        return {i * n + l: f.one} if j == k else {}

    unit = {i * n + i: f.one for i in range(n)}
    return module_algebra_from_rule(mod, mul, unit, name=mod.name, verify=verify)


def split_algebra(host: FinDimHopfAlgebra, copies: int = 2, name: str = "") -> ModuleAlgebra:
    """k x ... x k with the trivial action; commutative, so never Azumaya for copies > 1."""
    f = host.field
    mod = trivial_module(host, copies, name=name or "k" + "xk" * (copies - 1))
    return module_algebra_from_rule(mod, lambda i, j: {i: f.one} if i == j else {},
                                    {i: f.one for i in range(copies)}, name=mod.name)


def ground_algebra(host: FinDimHopfAlgebra) -> ModuleAlgebra:
    """k itself, the unit of the Brauer group."""
    f = host.field
    mod = trivial_module(host, 1, name="k")
    return module_algebra_from_rule(mod, lambda i, j: {0: f.one}, {0: f.one}, name="k")


def quaternion_galois_algebra(host: FinDimHopfAlgebra, alpha=1, beta=1, verify: bool = True) -> ModuleAlgebra:
    """k<C, D | C^2 = alpha, D^2 = beta, CD = -DC> on the basis 1, C, D, CD, with the H4-action
    g.C = -C, g.D = D, x.C = 0, x.D = C.  For alpha = beta = 1 this is M_2(k) with an action
    that is H*-Galois over k; alpha must be nonzero for that."""
    f = host.field
    al, be = f(alpha), f(beta)
    # monomials C^a D^b at index a + 2b
    def mul(i, j):
        a1, b1 = i % 2, i // 2
        a2, b2 = j % 2, j // 2
        c = f.one
        if b1 and a2:
            c = -c                      # D C = -C D
        a, b = a1 + a2, b1 + b2
        if a == 2:
            c, a = c * al, 0
        if b == 2:
            c, b = c * be, 0
        return {a + 2 * b: c} if c else {}

    g_sign = [1, -1, 1, -1]
    x_img = [{}, {}, {1: f.one}, {0: -al}]

    def act(i, m):
        if i == 0:
            return {m: f.one}
        if i == 1:
            return {m: f(g_sign[m])}
        img = x_img[m]
        if i == 2:
            return dict(img)
        return {k: v * g_sign[k] for k, v in img.items()}

    mod = module_from_rule(host, 4, act, ["1", "C", "D", "CD"], "Q(%s,%s)" % (f.format(al), f.format(be)),
                           verify=verify)
    return module_algebra_from_rule(mod, mul, {0: f.one}, name=mod.name, verify=verify)
