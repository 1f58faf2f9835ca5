"""Regenerate the bundled fixture files.

    python3 scripts/generate_fixtures.py

Writes src/qtbrauer/data/{sweedler,c2,trivial}.qtb from the library builders
and src/qtbrauer/data/expected.json from the verification oracles (over Q).
Every bundle is fully re-verified while it is built.
"""
import json
from pathlib import Path

from qtbrauer.brauer import check_hstar_galois, coinvariants_A0, compute_pi, invariants_functor, check_azumaya
from qtbrauer.library import group_algebra_bicharacter, regenerate_data, sweedler_h4
from qtbrauer.linalg import QQ
from qtbrauer.suite import Context, _z_cases

DATA = Path(__file__).resolve().parent.parent / "src" / "qtbrauer" / "data"


def brauer_expected(ctx, bname, cert, info):
    b = ctx.bundles[bname]
    out = {"provenance": "check_hstar_galois / coinvariants_A0 / compute_pi / invariants_functor over Q"}
    for name in info:
        out[f"{name} H*-Galois"] = check_hstar_galois(b.algebras[name]).ok
    a = b.algebras[cert]
    out["A0 dim"] = coinvariants_A0(a).cols
    gal = check_hstar_galois(a)
    pi = compute_pi(a, gal)
    out["pi dim"] = pi.dim
    dims = {}
    for rname, r in b.r_matrices.items():
        az = check_azumaya(a, r)
        for zname, z in _z_cases(ctx, bname, rname).items():
            d = invariants_functor(az, z).dim
            if dims.setdefault(zname, d) != d:
                raise SystemExit(f"{bname}: invariant dim for {zname} depends on R")
    out["invariant dims"] = dims
    return out


def main():
    regenerate_data(DATA)
    ctx = Context.load(QQ)
    expected = {
        "sweedler": brauer_expected(ctx, "sweedler", "Q11", ("EndV",)),
        "trivial": brauer_expected(ctx, "trivial", "ground", ()),
    }
    (DATA / "expected.json").write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")
    print(json.dumps(expected, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
