"""Bundled example data: Hopf algebras with their R-matrices, modules and
module algebras, plus the broken variants used to exercise every check.

Bundles re-verify from scratch when built or loaded.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from importlib import resources
from typing import Callable

from .checks import CheckList
from .examples import (_find_primitive_root, bicharacter_r, group_algebra_description, matrix_algebra_module,
                       quaternion_galois_algebra, r_vector, split_algebra, ground_algebra,
                       sweedler_description, sweedler_r, sweedler_rep2)
from .fileformat import Block, Document, from_description, parse, serialize, to_description
from .hopf import FinDimHopfAlgebra, RMatrix, build_hopf, check_qt, description_of, verify_description
from .linalg import Field, QQ
from .modules import HModule, ModuleAlgebra, module_from_representation, module_from_rule, regular_module, \
    trivial_module
from .yd import YDModule


@dataclass
class ExampleBundle:
    name: str
    hopf: FinDimHopfAlgebra
    r_matrices: dict[str, RMatrix]
    modules: dict[str, HModule] = dc_field(default_factory=dict)
    yds: dict[str, YDModule] = dc_field(default_factory=dict)
    algebras: dict[str, ModuleAlgebra] = dc_field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.hopf.field


def sweedler_h4(fld: Field = QQ) -> ExampleBundle:
    """H4 with R_0, R_1, its 2-dim representation and the Brauer test algebras."""
    if fld.characteristic == 2:
        raise ValueError("Sweedler's algebra needs a field of characteristic other than 2")
    h = build_hopf(sweedler_description(fld))
    rs = {f"t{t}": RMatrix(h, sweedler_r(fld, t)) for t in (0, 1)}
    v = module_from_representation(h, sweedler_rep2(fld), name="V")
    mods = {"V": v, "regular": regular_module(h), "k": trivial_module(h, 1, "k")}
    algs = {
        "EndV": matrix_algebra_module(v, name="EndV"),
        "Q11": quaternion_galois_algebra(h, 1, 1),
        "kxk": split_algebra(h),
        "ground": ground_algebra(h),
    }
    algs["Q11"].name = algs["Q11"].module.name = "Q11"
    return ExampleBundle("sweedler", h, rs, mods, {}, algs)


def group_algebra_bicharacter(n: int, q=None, fld: Field = QQ) -> ExampleBundle:
    """k C_n with R = 1/n sum q^(-ij) g^i (x) g^j."""
    h = build_hopf(group_algebra_description(n, fld))
    if q is None:
        q = _find_primitive_root(n, fld)
    rs = {"bichar": RMatrix(h, bicharacter_r(n, q, fld)),
          "trivial": RMatrix(h, r_vector(fld, n, {(0, 0): 1}))}
    mods = {"regular": regular_module(h), "k": trivial_module(h, 1, "k")}
    if n > 1:
        # g acts by q
        mods["chi"] = module_from_rule(h, 1, lambda i, m: {0: fld(q) ** i}, labels=["v"], name="chi")
    return ExampleBundle(f"C{n}", h, rs, mods, {}, {"ground": ground_algebra(h)})


def standard_bundles(fld: Field = QQ) -> list[ExampleBundle]:
    """Every bundled (H, R) family that exists over ``fld``."""
    out = []
    if fld.characteristic != 2:
        out.append(sweedler_h4(fld))
        out.append(group_algebra_bicharacter(2, -1, fld))
    out.append(group_algebra_bicharacter(1, 1, fld))
    if fld.characteristic and (fld.characteristic - 1) % 3 == 0:
        out.append(group_algebra_bicharacter(3, None, fld))
    return out


# ---------------------------------------------------------------------------
# broken variants: each targets one axiom family


@dataclass
class Perturbation:
    name: str
    target: str                      # name of the check expected to fail first
    kind: str                        # "hopf" or "qt"
    build: Callable[[Field], object]
    note: str = ""
    odd_only: bool = True            # needs 1/2 or -1 != 1

    def applies(self, fld: Field) -> bool:
        return not (self.odd_only and fld.characteristic == 2)

    def run(self, fld: Field) -> CheckList:
        if self.kind == "hopf":
            return verify_description(self.build(fld))
        h, r = self.build(fld)
        return check_qt(h, r)


def _h4_with(fld: Field, terms_x: dict, transpose: bool = False):
    h = build_hopf(sweedler_description(fld))
    half = fld(1) / fld(2)
    terms = {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half}
    for k, c in terms_x.items():
        terms[k] = half * fld(c)
    if transpose:
        terms = {(j, i): v for (i, j), v in terms.items()}
    return h, r_vector(fld, 4, terms)


PERTURBATIONS = [
    Perturbation("sweedler-assoc", "associativity", "hopf",
                 lambda f: sweedler_description(f, flip_mul=(1, 3)), "g*gx = -x"),
    Perturbation("sweedler-unit", "unit", "hopf",
                 lambda f: sweedler_description(f, unit_sign=-1), "unit = -1"),
    Perturbation("sweedler-coassoc", "coassociativity", "hopf",
                 lambda f: sweedler_description(f, coassoc_sign=-1), "Delta x = x(x)1 - g(x)x on gx"),
    Perturbation("sweedler-counit", "counit", "hopf",
                 lambda f: sweedler_description(f, eps_g=-1), "eps(g) = -1"),
    Perturbation("c2-bialgebra", "bialgebra", "hopf",
                 lambda f: group_algebra_description(2, f, square_sign=-1), "g*g = -1"),
    Perturbation("c2-antipode", "antipode", "hopf",
                 lambda f: group_algebra_description(2, f, antipode_sign=-1), "S(g) = -g"),
    Perturbation("c2-qt1", "QT1", "qt",
                 lambda f: (build_hopf(group_algebra_description(2, f)), r_vector(f, 2, {})), "R = 0",
                 odd_only=False),
    Perturbation("sweedler-qt2", "QT2", "qt",
                 lambda f: _h4_with(f, {(2, 2): -1, (2, 3): -1, (3, 2): -1, (3, 3): 1}),
                 "x-part -x(x)x - x(x)gx - gx(x)x + gx(x)gx"),
    Perturbation("sweedler-qt3", "QT3", "qt",
                 lambda f: _h4_with(f, {(2, 2): -1, (3, 2): 1}, transpose=True),
                 "x-part (-x(x)x + gx(x)x) with legs swapped"),
    Perturbation("sweedler-qt4", "QT4", "qt",
                 lambda f: (build_hopf(sweedler_description(f)), r_vector(f, 4, {(0, 0): 1})), "R = 1(x)1"),
]

# bundled files whose coefficients need 1/2
ODD_ONLY_FILES = ("sweedler", "c2")


# ---------------------------------------------------------------------------
# bundles <-> documents


def bundle_document(b: ExampleBundle) -> Document:
    from dataclasses import replace
    desc = replace(description_of(b.hopf), r_matrices={k: r.vector for k, r in b.r_matrices.items()})
    doc = from_description(desc)
    for name, m in b.modules.items():
        doc.blocks.append(Block("module", name, m.dim, list(m.labels), {"action": m.action}))
    for name, y in b.yds.items():
        doc.blocks.append(Block("yd", name, y.dim, list(y.labels), {"action": y.action, "coaction": y.coaction}))
    for name, a in b.algebras.items():
        doc.blocks.append(Block("algebra", name, a.dim, list(a.labels),
                                {"action": a.module.action, "mul": a.mul, "unit": a.unit}))
    return doc


def load_bundle(doc: Document, name: str = "bundle") -> ExampleBundle:
    """Build and verify every object a document describes."""
    h = build_hopf(to_description(doc))
    rs = {b.name: RMatrix(h, b.maps["r"]) for b in doc.blocks if b.kind == "rmatrix"}
    out = ExampleBundle(name, h, rs)
    for b in doc.blocks:
        if b.kind == "module":
            out.modules[b.name] = _module(h, b)
        elif b.kind == "yd":
            out.yds[b.name] = YDModule(_module(h, b), b.maps["coaction"], name=b.name)
        elif b.kind == "algebra":
            out.algebras[b.name] = ModuleAlgebra(_module(h, b), b.maps["mul"], b.maps["unit"], b.name)
    return out


def _module(h: FinDimHopfAlgebra, b: Block) -> HModule:
    return HModule(h, b.dim, b.maps["action"], b.labels, b.name)


def data_text(name: str) -> str:
    return resources.files("qtbrauer.data").joinpath(f"{name}.qtb").read_text()


def data_names() -> list[str]:
    return sorted(p.name[:-4] for p in resources.files("qtbrauer.data").iterdir() if p.name.endswith(".qtb"))


def bundled_document(name: str, fld: Field | None = None) -> Document:
    return parse(data_text(name), fld)


def regenerate_data(target) -> dict[str, str]:
    """Canonical text for every bundled file (over Q)."""
    texts = {
        "sweedler": serialize(bundle_document(sweedler_h4(QQ))),
        "c2": serialize(bundle_document(group_algebra_bicharacter(2, -1, QQ))),
        "trivial": serialize(bundle_document(group_algebra_bicharacter(1, 1, QQ))),
    }
    if target is not None:
        from pathlib import Path
        for k, v in texts.items():
            Path(target, f"{k}.qtb").write_text(v)
    return texts


def transmuted_document(t) -> Document:
    """RH as a braided Hopf algebra in H-modules: adjoint action, braided coproduct and antipode."""
    h = t.host
    maps = {"mul": h.desc.mul, "unit": h.desc.unit, "comul": t.braided_comul, "counit": h.desc.counit,
            "antipode": t.braided_antipode, "action": t.module.action}
    return Document(t.field, "braided-hopf", t.dim, list(t.labels), maps)
