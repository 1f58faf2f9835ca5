"""Command-line front end.

    qtbrauer verify FILE
    qtbrauer transmute FILE --out OUT [--r NAME]
    qtbrauer check-galois FILE OBJECT [--r NAME]
    qtbrauer brauer FILE ALGEBRA [Z ...] [--r NAME]
    qtbrauer suite

Flags (after the subcommand): --field {rational | gfP}, --format {text | machine},
--out PATH (report destination; the output file for transmute),
--timings PATH (timing side channel).

Exit status: 0 when every non-skipped entry passes, 1 when some entry
fails, 2 for usage, parse or missing-object errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .brauer import (NotAzumaya, check_azumaya, check_hstar_galois, coinvariants_A0, compute_pi,
                     invariants_cotensor_check, pi_bigalois_checks)
from .fileformat import Document, ParseError, documents_equal, load, parse, serialize, to_description
from .galois import (BiGaloisObject, RHComoduleAlgebra, can_minus_matrix, can_plus_matrix, check_gamma_identities,
                     check_quantum_commutative, comodule_algebra_checks, coinvariants,
                     regular_bigalois_algebra)
from .hopf import AxiomFailure, FinDimHopfAlgebra, RMatrix, check_qt, check_qybe, check_qybe_four_tensor, verify_description
from .library import ExampleBundle, load_bundle, transmuted_document
from .linalg import QQ, Field, field_from_spec, rank
from .modules import HModule, ModuleAlgebra, module_algebra_checks, module_checks, trivial_module
from .report import Report
from .suite import run_suite
from .transmutation import (RHComodule, TransmutedHopf, rh_comodule_checks, transmutation_checks,
                            trivial_bicomodule)
from .yd import YDModule, lift_lambda1, lift_lambda2, regular_yd, with_trivial_coaction, yd_checks


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# loading


def _read(path: str, fld: Field | None) -> Document:
    try:
        return load(path, fld)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _hopf_doc(doc: Document, path: str):
    if doc.kind != "hopf":
        raise UsageError(f"{path}: expected kind hopf, found {doc.kind}")


def _bundle_unverified(doc: Document) -> tuple[ExampleBundle, Report]:
    """Build the Hopf algebra and every block without raising; failures become entries."""
    rep = Report("verify", doc.field.name)
    desc = to_description(doc)
    with rep.timed("Hopf axioms"):
        rep.add_checks("Hopf axioms", verify_description(desc))
    if not rep.passed:
        return None, rep
    h = FinDimHopfAlgebra(desc)
    b = ExampleBundle("file", h, {})
    for blk in doc.blocks:
        if blk.kind == "rmatrix":
            g = f"R-matrix {blk.name}"
            with rep.timed(g):
                qt = check_qt(h, blk.maps["r"])
                rep.add_checks(g, qt)
                if qt:
                    r = RMatrix(h, blk.maps["r"], verify=False)
                    b.r_matrices[blk.name] = r
                    rep.add(g, "QYBE", check_qybe(r), "QYBE")
                    rep.add_check(g, check_qybe_four_tensor(r))
            continue
        m = HModule(h, blk.dim, blk.maps["action"], blk.labels, blk.name, verify=False)
        g = f"{blk.kind} {blk.name}"
        mc = module_checks(m)
        rep.add_checks(g, mc)
        if not mc:
            continue
        if blk.kind == "module":
            b.modules[blk.name] = m
        elif blk.kind == "yd":
            y = YDModule(m, blk.maps["coaction"], blk.name, verify=False)
            yc = yd_checks(y)
            rep.add_checks(g, yc)
            if yc:
                b.yds[blk.name] = y
        else:  # algebra or comodule_algebra: the coactions are checked by check-galois
            a = ModuleAlgebra(m, blk.maps["mul"], blk.maps["unit"], blk.name, verify=False)
            ac = module_algebra_checks(a)
            rep.add_checks(g, ac)
            if ac:
                b.algebras[blk.name] = a
    return b, rep


def _pick_r(b: ExampleBundle, name: str | None):
    if not b.r_matrices:
        raise UsageError("the file has no valid R-matrix")
    if name is None:
        return next(iter(b.r_matrices.items()))
    if name not in b.r_matrices:
        raise UsageError(f"no R-matrix named {name!r} (have {', '.join(b.r_matrices)})")
    return name, b.r_matrices[name]


def _load_verified(path: str, fld: Field | None) -> tuple[ExampleBundle, Document]:
    doc = _read(path, fld)
    _hopf_doc(doc, path)
    try:
        return load_bundle(doc, Path(path).stem), doc
    except AxiomFailure as exc:
        raise UsageError(f"{path}: fixture fails verification: {exc.check.name}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_verify(path: str, fld: Field | None = None) -> Report:
    doc = _read(path, fld)
    _hopf_doc(doc, path)
    _, rep = _bundle_unverified(doc)
    return rep


def cmd_transmute(path: str, out_path: str | None, fld: Field | None = None, r_name: str | None = None) -> Report:
    b, doc = _load_verified(path, fld)
    name, r = _pick_r(b, r_name)
    rep = Report("transmute", b.field.name)
    g = f"transmutation by {name}"
    with rep.timed("transmutation"):
        t = TransmutedHopf(b.hopf, r, verify=False)
        rep.add_checks(g, transmutation_checks(t))
    out = transmuted_document(t)
    text = serialize(out)
    if out_path:
        Path(out_path).write_text(text)
        again = parse(Path(out_path).read_text())
    else:
        again = parse(text)
    rep.add(g, "written file re-parses to identical matrices", documents_equal(out, again), "round trip")
    return rep


def _galois_object(b: ExampleBundle, doc: Document, t: TransmutedHopf, obj: str) -> RHComoduleAlgebra:
    if obj == "RH":
        return regular_bigalois_algebra(t)
    for blk in doc.blocks:
        if blk.name != obj:
            continue
        if blk.kind == "algebra":
            a = b.algebras[obj]
            return RHComoduleAlgebra(a, trivial_bicomodule(t, a.module), name=obj, verify=False)
        if blk.kind == "comodule_algebra":
            if obj not in b.algebras:
                raise UsageError(f"{obj} is not a valid H-module algebra")
            a = b.algebras[obj]
            m = a.module
            c = RHComodule(t, m, blk.maps.get("chi_minus"), blk.maps.get("chi_plus"), name=obj, verify=False)
            return RHComoduleAlgebra(a, c, name=obj, verify=False)
    raise UsageError(f"no algebra or comodule_algebra named {obj!r}")


def cmd_check_galois(path: str, obj: str, fld: Field | None = None, r_name: str | None = None) -> Report:
    doc = _read(path, fld)
    _hopf_doc(doc, path)
    b, _ = _bundle_unverified_or_fail(doc, path)
    name, r = _pick_r(b, r_name)
    t = TransmutedHopf(b.hopf, r, verify=False)
    rep = Report("check-galois", b.field.name)
    g = f"{obj} over RH ({name})"
    ca = _galois_object(b, doc, t, obj)
    cc = rh_comodule_checks(ca.comodule)
    rep.add_checks(g, cc)
    if not cc:
        return rep
    ac = comodule_algebra_checks(ca)
    rep.add_checks(g, ac)
    if not ac:
        return rep
    ok_all = True
    for side, sign in (("right", "+"), ("left", "-")):
        has = ca.comodule.right if side == "right" else ca.comodule.left
        if has is None:
            continue
        d0 = coinvariants(ca, side).cols
        rep.add(g, f"{side} coinvariants = k1", d0 == 1, "Galois object", {"dim": d0})
        with rep.timed(f"can{sign}"):
            m = can_plus_matrix(ca) if side == "right" else can_minus_matrix(ca)
            rk = rank(m)
        ok = m.rows == m.cols == rk
        ok_all = ok_all and ok and d0 == 1
        rep.add(g, f"can{sign} bijective", ok, "Galois object",
                None if ok else {"rank": rk, "shape": list(m.shape), "status": "NotGalois"})
    if ca.side != "bi":
        rep.skip(g, "gamma identities", "gamma identities", "needs both coactions")
        return rep
    if not ok_all:
        rep.skip(g, "gamma identities", "gamma identities", "NotGalois")
        rep.skip(g, "quantum commutativity", "quantum commutativity", "NotGalois")
        return rep
    go = BiGaloisObject(ca)
    rep.add_checks(g, check_gamma_identities(go))
    rep.add_check(g, check_quantum_commutative(go))
    return rep


def _bundle_unverified_or_fail(doc: Document, path: str):
    b, rep = _bundle_unverified(doc)
    if b is None:
        bad = rep.failures()[0]
        raise UsageError(f"{path}: Hopf axioms fail: {bad.name}")
    return b, rep


def _z_module(b: ExampleBundle, r, token: str) -> YDModule:
    h = b.hopf
    if token == "k":
        return with_trivial_coaction(trivial_module(h, 1, "k"), name="k")
    if token == "RH":
        return regular_yd(h)
    if token in b.yds:
        return b.yds[token]
    for prefix, lift in (("L1:", lift_lambda1), ("L2:", lift_lambda2)):
        if token.startswith(prefix):
            m = token[len(prefix):]
            if m not in b.modules:
                raise UsageError(f"no module named {m!r}")
            return lift(b.modules[m], r, name=token)
    raise UsageError(f"unknown z {token!r} (use k, RH, L1:MODULE, L2:MODULE or a yd block name)")


def cmd_brauer(path: str, algebra: str, zs: list[str], fld: Field | None = None,
               r_name: str | None = None) -> Report:
    b, doc = _load_verified(path, fld)
    if algebra not in b.algebras:
        raise UsageError(f"no algebra named {algebra!r}")
    name, r = _pick_r(b, r_name)
    z_mods = [(tok, _z_module(b, r, tok)) for tok in zs]
    if not any(tok == "RH" for tok in zs):
        z_mods.append(("RH", regular_yd(b.hopf)))
    rep = Report("brauer", b.field.name)
    a = b.algebras[algebra]
    g = f"{algebra} with R = {name}"
    try:
        with rep.timed("azumaya"):
            az = check_azumaya(a, r)
        rep.add_checks(g, az.checks)
    except NotAzumaya as exc:
        rep.add(g, f"{exc.which} bijective", False, "Azumaya",
                {"rank": exc.rank, "size": exc.size, "status": "NotAzumaya"})
        for what in ("A0", "H*-Galois", "pi(A)") + tuple(f"invariants = cotensor, z = {t}" for t, _ in z_mods):
            rep.skip(g, what, "Azumaya", "not Azumaya")
        return rep
    a0 = coinvariants_A0(a)
    rep.add(g, "A0 computed", True, "coinvariants", {"dim": a0.cols})
    with rep.timed("H*-Galois"):
        gal = check_hstar_galois(a)
    rep.add(g, "H*-Galois", gal.ok, "H*-Galois", gal.witness)
    if not gal.ok:
        for what in ("pi(A)",) + tuple(f"invariants = cotensor, z = {t}" for t, _ in z_mods):
            rep.skip(g, what, "H*-Galois", "not H*-Galois")
        return rep
    t = TransmutedHopf(b.hopf, r, verify=False)
    with rep.timed("pi(A)"):
        pi = compute_pi(a, gal)
    rep.add(g, "pi(A) computed", True, "pi(A)", {"dim": pi.dim})
    rep.add_checks(g, pi.checks)
    rep.add_checks(g, pi_bigalois_checks(pi, t))
    for tok, z in z_mods:
        with rep.timed(f"z = {tok}"):
            res = invariants_cotensor_check(az, pi, z, t, multiplicative=(tok == "RH"))
        for c in res:
            rep.add(g, f"z = {tok}: {c.name}", c.passed, c.anchor, c.witness, c.detail)
    return rep


def cmd_suite(fld: Field | None = None) -> Report:
    return run_suite(fld or QQ)


# ---------------------------------------------------------------------------
# entry point


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", metavar="SPEC",
                        help="rational, gfP or 'gf P' (rational files are reduced mod P)")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--out", help="write the report here (transmute: the output file)")
    common.add_argument("--timings", help="write per-stage timings to this file")
    common.add_argument("--verbose", "-v", action="store_true", help="list passing entries too")
    p = argparse.ArgumentParser(prog="qtbrauer", description="Exact checks for quasitriangular Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="Hopf axioms, QT, QYBE and every named block")
    v.add_argument("path")
    t = sub.add_parser("transmute", parents=[common], help="write the braided Hopf algebra RH")
    t.add_argument("path")
    t.add_argument("--r", dest="r_name")
    gcmd = sub.add_parser("check-galois", parents=[common], help="Galois checks for an RH-comodule algebra")
    gcmd.add_argument("path")
    gcmd.add_argument("object", help="RH, or an algebra/comodule_algebra block name")
    gcmd.add_argument("--r", dest="r_name")
    b = sub.add_parser("brauer", parents=[common], help="Azumaya, pi(A) and the invariants comparison")
    b.add_argument("path")
    b.add_argument("algebra")
    b.add_argument("z", nargs="*", help="k, RH, L1:MODULE, L2:MODULE or a yd block name")
    b.add_argument("--r", dest="r_name")
    sub.add_parser("suite", parents=[common], help="run the bundled acceptance matrix")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        fld = field_from_spec(args.field) if args.field else None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            rep = cmd_verify(args.path, fld)
        elif args.command == "transmute":
            if not args.out:
                raise UsageError("transmute needs --out")
            rep = cmd_transmute(args.path, args.out, fld, args.r_name)
        elif args.command == "check-galois":
            rep = cmd_check_galois(args.path, args.object, fld, args.r_name)
        elif args.command == "brauer":
            rep = cmd_brauer(args.path, args.algebra, args.z, fld, args.r_name)
        else:
            rep = cmd_suite(fld)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    body = rep.to_machine() if args.format == "machine" else rep.to_text(args.verbose)
    if args.out and args.command != "transmute":
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)
    if args.timings:
        Path(args.timings).write_text(rep.timing_text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
