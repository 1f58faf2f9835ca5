"""Finite-dimensional Hopf algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .checks import Check, CheckList, compare_maps, compare_vectors
from .linalg import (DimensionMismatch, Field, Matrix, NotInvertible, TensorIndex,
                     inverse, matmul)
from .tensor import add_into, flatten


class AxiomFailure(ValueError):
    """Structure constants violate an axiom; carries the check with its witness."""

    def __init__(self, check: Check):
        super().__init__(f"axiom '{check.name}' fails: {check.witness}")
        self.check = check
        self.axiom = check.name
        self.witness = check.witness


class SingularAntipode(AxiomFailure):
    pass


@dataclass
class HopfDescription:
    """Raw, unverified structure maps of a Hopf algebra."""

    field: Field
    dim: int
    labels: list[str]
    mul: Matrix        # dim x dim^2
    unit: Matrix       # dim x 1
    comul: Matrix      # dim^2 x dim
    counit: Matrix     # 1 x dim
    antipode: Matrix   # dim x dim
    r_matrices: dict[str, Matrix] = dc_field(default_factory=dict)  # dim^2 x 1 each

    def check_shapes(self):
        n = self.dim
        want = {"mul": (n, n * n), "unit": (n, 1), "comul": (n * n, n),
                "counit": (1, n), "antipode": (n, n)}
        for name, shape in want.items():
            m = getattr(self, name)
            if m.shape != shape:
                raise DimensionMismatch(f"{name} has shape {m.shape}, expected {shape}")
            if m.field != self.field:
                raise DimensionMismatch(f"{name} is over {m.field.name}, not {self.field.name}")
        if len(self.labels) != n:
            raise DimensionMismatch(f"{len(self.labels)} basis labels for dimension {n}")
        for name, r in self.r_matrices.items():
            if r.shape != (n * n, 1):
                raise DimensionMismatch(f"r-matrix {name} has shape {r.shape}")


def _table(m: Matrix) -> list[dict[int, object]]:
    return [dict(c) for c in m.sparse_columns()]


class FinDimHopfAlgebra:
    """A verified finite-dimensional Hopf algebra.

    Elements are sparse dicts ``{basis index: coeff}``; elements of tensor
    powers are dicts keyed by index tuples.
    """

    def __init__(self, desc: HopfDescription, verify: bool = True):
        desc.check_shapes()
        self.desc = desc
        self.field = desc.field
        self.dim = desc.dim
        self.labels = list(desc.labels)
        self.mul = desc.mul
        self.unit = desc.unit
        self.comul = desc.comul
        self.counit = desc.counit
        self.antipode = desc.antipode
        n = self.dim
        cols = self.mul.sparse_columns()
        self._mt = [[cols[i * n + j] for j in range(n)] for i in range(n)]
        self._dt = []
        for c in self.comul.sparse_columns():
            self._dt.append({divmod(k, n): v for k, v in c.items()})
        self._st = _table(self.antipode)
        self._eps = [self.counit[0, i] for i in range(n)]
        self.one = dict(self.unit.column_sparse(0))
        if verify:
            checks = hopf_axiom_checks(self)
            bad = checks.first_failure()
            if bad is not None:
                raise AxiomFailure(bad)
        try:
            self.antipode_inverse = inverse(self.antipode)
        except NotInvertible as exc:
            raise SingularAntipode(Check("antipode bijective", False,
                                         {"rank": exc.rank, "dim": n})) from exc
        self._sit = _table(self.antipode_inverse)

    def __repr__(self):
        return f"<Hopf algebra dim {self.dim} over {self.field.name}: {' '.join(self.labels)}>"

    # element arithmetic ---------------------------------------------------

    def basis(self, i: int) -> dict:
        return {i: self.field.one}

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

    def S(self, x: Mapping) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for j, c in self._st[i].items():
                add_into(acc, j, a * c)
        return acc

    def Sinv(self, x: Mapping) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for j, c in self._sit[i].items():
                add_into(acc, j, a * c)
        return acc

    def eps(self, x: Mapping):
        s = self.field.zero
        for i, a in x.items():
            s = s + a * self._eps[i]
        return s

    def delta(self, x: Mapping) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for k, c in self._dt[i].items():
                add_into(acc, k, a * c)
        return acc

    def delta_basis(self, i: int) -> dict:
        return self._dt[i]

    def delta2(self, x: Mapping) -> dict:
        """``x1 (x) x2 (x) x3`` keyed by triples."""
        acc: dict = {}
        for (i, j), a in self.delta(x).items():
            for (k, l), c in self._dt[j].items():
                add_into(acc, (i, k, l), a * c)
        return acc

    def adjoint(self, h: Mapping, x: Mapping) -> dict:
        """Left adjoint action ``h1 x S(h2)``."""
        acc: dict = {}
        for (i, j), a in self.delta(h).items():
            for k, c in self.mult(self.mult({i: a}, x), self.S({j: self.field.one})).items():
                add_into(acc, k, c)
        return acc

    def tmult(self, x: Mapping, y: Mapping) -> dict:
        """Legwise product in a tensor power of H."""
        acc: dict = {}
        mt = self._mt
        for kx, a in x.items():
            for ky, b in y.items():
                partial = {(): a * b}
                for i, j in zip(kx, ky):
                    nxt: dict = {}
                    for key, c in partial.items():
                        for k, d in mt[i][j].items():
                            add_into(nxt, key + (k,), c * d)
                    partial = nxt
                    if not partial:
                        break
                for key, c in partial.items():
                    add_into(acc, key, c)
        return acc

    def tprod(self, *xs: Mapping) -> dict:
        out = xs[0]
        for x in xs[1:]:
            out = self.tmult(out, x)
        return out

    def embed(self, n: int, parts: Mapping[int, Mapping]) -> dict:
        """Element of H^(x)n with ``parts[leg]`` on given legs, unit elsewhere.

        ``parts`` values are single-leg elements, except that a key which is a
        tuple of legs takes a tuple-keyed element spanning those legs.
        """
        legs: list = [None] * n
        blocks = []
        for where, el in parts.items():
            if isinstance(where, tuple):
                blocks.append((where, el))
                for w in where:
                    legs[w] = "block"
            else:
                legs[where] = el
        out: dict = {(): self.field.one}
        # build leg-by-leg, expanding units; blocks are placed afterwards
        pos_map = []
        for leg in range(n):
            if legs[leg] == "block":
                continue
            el = legs[leg] if legs[leg] is not None else self.one
            nxt: dict = {}
            for k, c in out.items():
                for i, d in el.items():
                    add_into(nxt, k + (i,), c * d)
            out = nxt
            pos_map.append(leg)
        for where, el in blocks:
            nxt = {}
            for k, c in out.items():
                for kk, d in el.items():
                    add_into(nxt, k + tuple(kk), c * d)
            out = nxt
            pos_map.extend(where)
        order = [pos_map.index(leg) for leg in range(n)]
        return {tuple(k[o] for o in order): c for k, c in out.items()}


# ---------------------------------------------------------------------------
# axiom verification


def hopf_axiom_checks(h: FinDimHopfAlgebra) -> CheckList:
    """All Hopf axioms as basis-wise identities, in a fixed order."""
    n = h.dim
    f = h.field
    one = f.one
    lab = h.labels
    B = h.basis
    checks = CheckList()

    def fl(x, k):
        return flatten(x, [n] * k)

    checks.add(compare_maps(
        "associativity", f, [n, n, n],
        lambda t: h.mult(h.mult(B(t[0]), B(t[1])), B(t[2])),
        lambda t: h.mult(B(t[0]), h.mult(B(t[1]), B(t[2]))),
        [lab] * 3))

    def unit_ok():
        c = compare_maps("unit", f, [n], lambda t: h.mult(h.one, B(t[0])), lambda t: B(t[0]), [lab])
        if not c:
            return c
        c = compare_maps("unit", f, [n], lambda t: h.mult(B(t[0]), h.one), lambda t: B(t[0]), [lab])
        return c

    checks.add(unit_ok())

    def coassoc_lhs(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            for (k, l), c in h.delta_basis(i).items():
                add_into(acc, (k, l, j), a * c)
        return fl(acc, 3)

    def coassoc_rhs(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            for (k, l), c in h.delta_basis(j).items():
                add_into(acc, (i, k, l), a * c)
        return fl(acc, 3)

    checks.add(compare_maps("coassociativity", f, [n], coassoc_lhs, coassoc_rhs, [lab]))

    def counit_l(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            add_into(acc, j, a * h._eps[i])
        return acc

    def counit_r(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            add_into(acc, i, a * h._eps[j])
        return acc

    c = compare_maps("counit", f, [n], counit_l, lambda t: B(t[0]), [lab])
    if c:
        c = compare_maps("counit", f, [n], counit_r, lambda t: B(t[0]), [lab])
    checks.add(c)

    def bialg_lhs(t):
        return fl(h.delta(h.mult(B(t[0]), B(t[1]))), 2)

    def bialg_rhs(t):
        return fl(h.tmult(h.delta_basis(t[0]), h.delta_basis(t[1])), 2)

    c = compare_maps("bialgebra", f, [n, n], bialg_lhs, bialg_rhs, [lab, lab])
    if c:
        c = compare_maps("bialgebra", f, [n, n],
                         lambda t: {0: h.eps(h.mult(B(t[0]), B(t[1])))},
                         lambda t: {0: h._eps[t[0]] * h._eps[t[1]]}, [lab, lab])
    if c:
        c = compare_vectors("bialgebra", f, fl(h.delta(h.one), 2),
                            fl({(i, j): a * b for i, a in h.one.items() for j, b in h.one.items()}, 2))
    if c:
        c = compare_vectors("bialgebra", f, {0: h.eps(h.one)}, {0: one})
    checks.add(c)

    def antipode_l(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            for k, c in h.mult(h.S(B(i)), B(j)).items():
                add_into(acc, k, a * c)
        return acc

    def antipode_r(t):
        acc: dict = {}
        for (i, j), a in h.delta_basis(t[0]).items():
            for k, c in h.mult(B(i), h.S(B(j))).items():
                add_into(acc, k, a * c)
        return acc

    def unit_counit(t):
        e = h._eps[t[0]]
        return {k: e * v for k, v in h.one.items() if e * v}

    c = compare_maps("antipode", f, [n], antipode_l, unit_counit, [lab])
    if c:
        c = compare_maps("antipode", f, [n], antipode_r, unit_counit, [lab])
    checks.add(c)
    return checks.anchored("Hopf axioms")


def verify_description(desc: HopfDescription) -> CheckList:
    """Every axiom family plus bijectivity of the antipode, without raising."""
    h = FinDimHopfAlgebra.__new__(FinDimHopfAlgebra)
    try:
        FinDimHopfAlgebra.__init__(h, desc, verify=False)
        bij = Check("antipode bijective", True)
    except SingularAntipode as exc:
        bij = exc.check
    checks = hopf_axiom_checks(h)
    checks.add(bij)
    return checks.anchored("Hopf axioms")


def build_hopf(desc: HopfDescription) -> FinDimHopfAlgebra:
    """Verify raw structure constants; raises :class:`AxiomFailure` on the first bad axiom."""
    return FinDimHopfAlgebra(desc)


# ---------------------------------------------------------------------------
# quasitriangular structure


def element_to_dict(h: FinDimHopfAlgebra, r) -> dict:
    """Accept a flat ``dim^2`` vector (Matrix column or sequence) or a tuple-keyed dict."""
    n = h.dim
    if isinstance(r, Matrix):
        if r.shape != (n * n, 1):
            raise DimensionMismatch(f"element of H(x)H must have length {n * n}, got {r.shape}")
        return {divmod(k, n): v for k, v in r.column_sparse(0).items()}
    if isinstance(r, Mapping):
        return {k: h.field(v) for k, v in r.items() if v}
    r = list(r)
    if len(r) != n * n:
        raise DimensionMismatch(f"element of H(x)H must have length {n * n}, got {len(r)}")
    return {divmod(k, n): h.field(v) for k, v in enumerate(r) if v}


class RMatrix:
    """An R-matrix ``R = R1 (x) R2`` of a Hopf algebra, stored as an element."""

    def __init__(self, host: FinDimHopfAlgebra, element, verify: bool = True):
        self.host = host
        self.element = element_to_dict(host, element)
        self.terms = sorted((i, j, c) for (i, j), c in self.element.items())
        if verify:
            report = check_qt(host, self.element)
            bad = report.first_failure()
            if bad is not None:
                raise AxiomFailure(bad)
        self.inverse_element = _invert_in_hxh(host, self.element)
        self.inverse_terms = sorted((i, j, c) for (i, j), c in self.inverse_element.items())

    @property
    def vector(self) -> Matrix:
        n = self.host.dim
        return Matrix.from_columns(self.host.field, n * n, [flatten(self.element, [n, n])])

    def legs(self):
        """Iterate ``(R1, R2, coeff)`` with single-leg basis elements."""
        one = self.host.field.one
        for i, j, c in self.terms:
            yield {i: one}, {j: one}, c

    def __repr__(self):
        return f"<R-matrix with {len(self.terms)} terms>"


def _invert_in_hxh(h: FinDimHopfAlgebra, r: dict) -> dict:
    """Two-sided inverse of ``r`` in the algebra H(x)H (empty dict if none)."""
    n = h.dim
    dims = [n, n]
    unit2 = h.embed(2, {})
    left = Matrix.from_function(h.field, n * n, n * n,
                                lambda j: flatten(h.tmult(r, {divmod(j, n): h.field.one}), dims))
    try:
        inv = inverse(left)
    except NotInvertible:
        return {}
    x = inv.apply(flatten(unit2, dims))
    xd = {divmod(k, n): v for k, v in x.items()}
    if flatten(h.tmult(xd, r), dims) != flatten(unit2, dims):
        return {}
    return xd


def check_qt(h: FinDimHopfAlgebra, r) -> CheckList:
    """QT1-QT4 and invertibility of ``r`` in H(x)H, each with a witness on failure."""
    n = h.dim
    f = h.field
    r = element_to_dict(h, r)
    report = CheckList()
    unit = h.one

    left_eps: dict = {}
    right_eps: dict = {}
    for (i, j), c in r.items():
        add_into(left_eps, j, c * h._eps[i])
        add_into(right_eps, i, c * h._eps[j])
    c1 = compare_vectors("QT1", f, left_eps, unit, anchor="QT1")
    if c1:
        c1 = compare_vectors("QT1", f, right_eps, unit, anchor="QT1")
    report.add(c1)

    # QT2: (Delta (x) id)R = R13 R23
    lhs: dict = {}
    for (i, j), c in r.items():
        for (k, l), d in h.delta_basis(i).items():
            add_into(lhs, (k, l, j), c * d)
    rhs = h.tmult(h.embed(3, {(0, 2): r}), h.embed(3, {(1, 2): r}))
    report.add(compare_vectors("QT2", f, flatten(lhs, [n] * 3), flatten(rhs, [n] * 3), anchor="QT2"))

    # QT3: (id (x) Delta)R = R13 R12
    lhs = {}
    for (i, j), c in r.items():
        for (k, l), d in h.delta_basis(j).items():
            add_into(lhs, (i, k, l), c * d)
    rhs = h.tmult(h.embed(3, {(0, 2): r}), h.embed(3, {(0, 1): r}))
    report.add(compare_vectors("QT3", f, flatten(lhs, [n] * 3), flatten(rhs, [n] * 3), anchor="QT3"))

    # QT4: R Delta(h) = Delta^op(h) R on basis elements
    def qt4_l(t):
        return flatten(h.tmult(r, h.delta_basis(t[0])), [n, n])

    def qt4_r(t):
        dop = {(b, a): c for (a, b), c in h.delta_basis(t[0]).items()}
        return flatten(h.tmult(dop, r), [n, n])

    report.add(compare_maps("QT4", f, [n], qt4_l, qt4_r, [h.labels], anchor="QT4"))

    inv = _invert_in_hxh(h, r) if r else {}
    report.add(Check("invertible", bool(inv), None if inv else {"element": "R has no inverse in H(x)H"},
                     anchor="QT"))
    return report


def _as_rdict(h: FinDimHopfAlgebra, r) -> dict:
    return r.element if isinstance(r, RMatrix) else element_to_dict(h, r)


def qybe_sides(h: FinDimHopfAlgebra, r) -> tuple[dict, dict]:
    r = _as_rdict(h, r)
    r12 = h.embed(3, {(0, 1): r})
    r13 = h.embed(3, {(0, 2): r})
    r23 = h.embed(3, {(1, 2): r})
    return h.tprod(r12, r13, r23), h.tprod(r23, r13, r12)


def check_qybe(r: RMatrix, host: FinDimHopfAlgebra | None = None) -> bool:
    """``R12 R13 R23 = R23 R13 R12`` in H(x)H(x)H."""
    h = host or r.host
    a, b = qybe_sides(h, r)
    return a == b


def qybe_four_tensor_sides(h: FinDimHopfAlgebra, r) -> tuple[dict, dict]:
    """Both sides of the four-tensor identity built from five copies of ``R``.

    ``u1p1U1 (x) u2r1R1 (x) p2r2 (x) U2R2 = p1U1u1 (x) r1R1u2 (x) r2p2 (x) R2U2``,
    i.e. ``R12 R13 R14 R23 R24 = R23 R24 R13 R14 R12``.
    """
    r = _as_rdict(h, r)
    e = {legs: h.embed(4, {legs: r}) for legs in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]}
    lhs = h.tprod(e[0, 1], e[0, 2], e[0, 3], e[1, 2], e[1, 3])
    rhs = h.tprod(e[1, 2], e[1, 3], e[0, 2], e[0, 3], e[0, 1])
    return lhs, rhs


def check_qybe_four_tensor(r, host: FinDimHopfAlgebra | None = None) -> Check:
    h = host or r.host
    lhs, rhs = qybe_four_tensor_sides(h, r)
    n = h.dim
    return compare_vectors("QYBE four-tensor identity", h.field, flatten(lhs, [n] * 4),
                           flatten(rhs, [n] * 4), anchor="QYBE")


# ---------------------------------------------------------------------------
# duality


def dual_description(h: FinDimHopfAlgebra) -> HopfDescription:
    return HopfDescription(
        field=h.field, dim=h.dim,
        labels=[_dual_label(x) for x in h.labels],
        mul=h.comul.transpose(), unit=h.counit.transpose(),
        comul=h.mul.transpose(), counit=h.unit.transpose(),
        antipode=h.antipode.transpose())


def _dual_label(x: str) -> str:
    return x[:-1] if x.endswith("*") else x + "*"


def dual_hopf(h: FinDimHopfAlgebra) -> FinDimHopfAlgebra:
    """H* under the pairing <e*_i, e_j> = delta_ij; re-verified."""
    return FinDimHopfAlgebra(dual_description(h))


def description_of(h: FinDimHopfAlgebra) -> HopfDescription:
    return h.desc
