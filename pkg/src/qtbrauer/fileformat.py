"""Line-based text format for Hopf algebras, R-matrices, modules and algebras.

    format qtbrauer 1
    field rational            # or: field gf 7
    kind hopf                 # or: braided-hopf
    dim 4
    basis 1 g x gx
    mul i j k c               # e_i e_j contains c e_k
    unit i c
    comul i j k c             # Delta(e_i) contains c e_j (x) e_k
    counit i c
    antipode i j c            # S(e_i) contains c e_j
    action h m n c            # top level only for braided-hopf: e_h > e_m contains c e_n

    rmatrix NAME
      r i j c                 # R contains c e_i (x) e_j
    module NAME dim N
      labels ...              # optional
      action h m n c
    yd NAME dim N
      action h m n c
      coaction m h n c        # lambda(m) contains c e_h (x) m_n
    algebra NAME dim N
      action h m n c
      mul i j k c
      unit i c
    comodule_algebra NAME dim N
      action / mul / unit as above
      chi_minus m h n c       # chi-(m) contains c e_h (x) m_n
      chi_plus m n h c        # chi+(m) contains c m_n (x) e_h

Blank lines and ``#`` comments are ignored.  Unlisted entries are zero.
The serializer writes entries sorted by index, so its output is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .hopf import HopfDescription
from .linalg import Field, Matrix, field_from_spec

HEADER = "format qtbrauer 1"
KINDS = ("hopf", "braided-hopf")
BLOCK_KINDS = ("rmatrix", "module", "yd", "algebra", "comodule_algebra")

# keyword -> number of indices
ARITY = {"mul": 3, "unit": 1, "comul": 3, "counit": 1, "antipode": 2, "action": 3,
         "r": 2, "coaction": 3, "chi_minus": 3, "chi_plus": 3}

TOP_KEYS = ("mul", "unit", "comul", "counit", "antipode", "action")
BLOCK_KEYS = {
    "rmatrix": ("r",),
    "module": ("action",),
    "yd": ("action", "coaction"),
    "algebra": ("action", "mul", "unit"),
    "comodule_algebra": ("action", "mul", "unit", "chi_minus", "chi_plus"),
}
REQUIRED = {
    "rmatrix": ("r",),
    "module": ("action",),
    "yd": ("action", "coaction"),
    "algebra": ("action", "mul", "unit"),
    "comodule_algebra": ("action", "mul", "unit"),
}


class ParseError(ValueError):
    def __init__(self, line: int, what: str, message: str):
        super().__init__(f"line {line}: {what}: {message}")
        self.line = line
        self.what = what


@dataclass
class Block:
    kind: str
    name: str
    dim: int
    labels: list[str] | None = None
    maps: dict[str, Matrix] = dc_field(default_factory=dict)


@dataclass
class Document:
    field: Field
    kind: str
    dim: int
    labels: list[str]
    maps: dict[str, Matrix]
    blocks: list[Block] = dc_field(default_factory=list)

    def block(self, name: str, kind: str | None = None) -> Block:
        for b in self.blocks:
            if b.name == name and (kind is None or b.kind == kind):
                return b
        raise KeyError(name)

    def names(self, kind: str) -> list[str]:
        return [b.name for b in self.blocks if b.kind == kind]


# ---------------------------------------------------------------------------
# index layout


def _shape(key: str, n: int, d: int) -> tuple[int, int]:
    return {
        "mul": (d, d * d), "unit": (d, 1), "comul": (n * n, n), "counit": (1, n),
        "antipode": (n, n), "action": (d, n * d), "r": (n * n, 1),
        "coaction": (n * d, d), "chi_minus": (n * d, d), "chi_plus": (d * n, d),
    }[key]


def _position(key: str, idx: tuple[int, ...], n: int, d: int) -> tuple[int, int]:
    if key == "mul":
        i, j, k = idx
        return k, i * d + j
    if key == "unit":
        return idx[0], 0
    if key == "comul":
        i, j, k = idx
        return j * n + k, i
    if key == "counit":
        return 0, idx[0]
    if key == "antipode":
        i, j = idx
        return j, i
    if key == "action":
        h, m, p = idx
        return p, h * d + m
    if key == "r":
        i, j = idx
        return i * n + j, 0
    if key in ("coaction", "chi_minus"):
        m, h, p = idx
        return h * d + p, m
    if key == "chi_plus":
        m, p, h = idx
        return p * n + h, m
    raise KeyError(key)


def _index(key: str, row: int, col: int, n: int, d: int) -> tuple[int, ...]:
    if key == "mul":
        return (*divmod(col, d), row)
    if key == "unit":
        return (row,)
    if key == "comul":
        return (col, *divmod(row, n))
    if key == "counit":
        return (col,)
    if key == "antipode":
        return (col, row)
    if key == "action":
        return (*divmod(col, d), row)
    if key == "r":
        return divmod(row, n)
    if key in ("coaction", "chi_minus"):
        h, p = divmod(row, d)
        return (col, h, p)
    if key == "chi_plus":
        p, h = divmod(row, n)
        return (col, p, h)
    raise KeyError(key)


def _bounds(key: str, n: int, d: int) -> tuple[int, ...]:
    return {
        "mul": (d, d, d), "unit": (d,), "comul": (n, n, n), "counit": (n,), "antipode": (n, n),
        "action": (n, d, d), "r": (n, n), "coaction": (d, n, d), "chi_minus": (d, n, d),
        "chi_plus": (d, d, n),
    }[key]


# ---------------------------------------------------------------------------
# parsing


def parse(text: str, field: Field | None = None) -> Document:
    """Parse a document.  ``field`` overrides the declared field: a rational
    document is reduced into GF(p); any other mismatch is an error."""
    lines = text.splitlines()
    fld = None
    kind = None
    dim = None
    labels = None
    top: dict[str, dict] = {}
    blocks: list[tuple[Block, dict[str, dict], int]] = []
    current = None
    seen_header = False

    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0] in " \t"
        words = line.split()
        head = words[0]
        if not seen_header:
            if line.strip() != HEADER:
                raise ParseError(no, "header", f"expected '{HEADER}'")
            seen_header = True
            continue
        if not indented:
            current = None
        if head == "field" and not indented:
            try:
                fld = field_from_spec(" ".join(words[1:]))
            except ValueError as exc:
                raise ParseError(no, "field", str(exc)) from None
            if field is not None and field != fld:
                if fld.characteristic != 0:
                    raise ParseError(no, "field", f"document is over {fld.name}, requested {field.name}")
                fld = field
        elif head == "kind" and not indented:
            if len(words) != 2 or words[1] not in KINDS:
                raise ParseError(no, "kind", f"expected one of {', '.join(KINDS)}")
            kind = words[1]
        elif head == "dim" and not indented:
            dim = _int(no, "dim", words[1:], 1)[0]
            if dim < 1:
                raise ParseError(no, "dim", "must be positive")
        elif head == "basis" and not indented:
            labels = words[1:]
        elif head in BLOCK_KINDS and not indented:
            if dim is None or fld is None:
                raise ParseError(no, head, "field and dim must come before named blocks")
            if len(words) < 2:
                raise ParseError(no, head, "missing name")
            name = words[1]
            if any(b.name == name for b, _, _ in blocks):
                raise ParseError(no, head, f"duplicate name {name!r}")
            bdim = dim
            if head != "rmatrix":
                if len(words) != 4 or words[2] != "dim":
                    raise ParseError(no, head, "expected '<kind> NAME dim N'")
                bdim = _int(no, "dim", words[3:], 1)[0]
            elif len(words) != 2:
                raise ParseError(no, head, "expected 'rmatrix NAME'")
            current = (Block(head, name, bdim), {}, no)
            blocks.append(current)
        elif indented:
            if current is None:
                raise ParseError(no, head, "indented line outside a named block")
            blk, entries, _ = current
            if head == "labels":
                blk.labels = words[1:]
                continue
            if head not in BLOCK_KEYS[blk.kind]:
                raise ParseError(no, head, f"not allowed in a {blk.kind} block")
            _entry(no, head, words, fld, entries, dim, blk.dim)
        elif head in TOP_KEYS:
            if dim is None or fld is None:
                raise ParseError(no, head, "field and dim must come first")
            if head == "action" and kind != "braided-hopf":
                raise ParseError(no, head, "top-level action only for kind braided-hopf")
            _entry(no, head, words, fld, top, dim, dim)
        else:
            raise ParseError(no, head, "unknown keyword")

    if not seen_header:
        raise ParseError(1, "header", f"expected '{HEADER}'")
    for what, val in (("field", fld), ("kind", kind), ("dim", dim)):
        if val is None:
            raise ParseError(len(lines), what, "missing")
    if labels is None:
        labels = [f"e{i}" for i in range(dim)]
    if len(labels) != dim:
        raise ParseError(len(lines), "basis", f"{len(labels)} labels for dim {dim}")
    needed = ["mul", "unit", "comul", "counit", "antipode"] + (["action"] if kind == "braided-hopf" else [])
    maps = {}
    for key in needed:
        maps[key] = _matrix(fld, key, top.get(key, {}), dim, dim)
    doc = Document(fld, kind, dim, labels, maps)
    for blk, entries, no in blocks:
        if blk.labels is not None and len(blk.labels) != blk.dim:
            raise ParseError(no, blk.name, f"{len(blk.labels)} labels for dim {blk.dim}")
        if blk.kind == "comodule_algebra" and not ("chi_minus" in entries or "chi_plus" in entries):
            raise ParseError(no, blk.name, "needs chi_minus or chi_plus")
        for key in BLOCK_KEYS[blk.kind]:
            if key in entries or key in REQUIRED[blk.kind]:
                blk.maps[key] = _matrix(fld, key, entries.get(key, {}), dim, blk.dim)
        doc.blocks.append(blk)
    return doc


def _int(no: int, what: str, words: list[str], count: int) -> list[int]:
    if len(words) != count:
        raise ParseError(no, what, f"expected {count} integer(s)")
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(no, what, "not an integer") from None


def _entry(no: int, key: str, words: list[str], fld: Field, store: dict, n: int, d: int):
    k = ARITY[key]
    if len(words) != k + 2:
        raise ParseError(no, key, f"expected {k} indices and a coefficient")
    idx = tuple(_int(no, key, words[1:k + 1], k))
    for i, b in zip(idx, _bounds(key, n, d)):
        if not 0 <= i < b:
            raise ParseError(no, key, f"index {i} out of range 0..{b - 1}")
    try:
        c = fld.parse(words[-1])
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(no, key, f"bad coefficient {words[-1]!r}: {exc}") from None
    entries = store.setdefault(key, {})
    if idx in entries:
        raise ParseError(no, key, f"duplicate entry {' '.join(map(str, idx))}")
    entries[idx] = c


def _matrix(fld: Field, key: str, entries: dict, n: int, d: int) -> Matrix:
    rows, cols = _shape(key, n, d)
    return Matrix.from_sparse(fld, rows, cols, [(*_position(key, idx, n, d), c) for idx, c in entries.items()])


# ---------------------------------------------------------------------------
# serializing


def _lines(key: str, m: Matrix, n: int, d: int, fld: Field, indent: str = "") -> list[str]:
    items = []
    for col, entries in enumerate(m.sparse_columns()):
        for row, c in entries.items():
            if c:
                items.append((_index(key, row, col, n, d), c))
    items.sort(key=lambda t: t[0])
    return [f"{indent}{key} {' '.join(map(str, idx))} {fld.format(c)}" for idx, c in items]


def serialize(doc: Document) -> str:
    fld = doc.field
    n = doc.dim
    out = [HEADER, f"field {fld.name}", f"kind {doc.kind}", f"dim {n}", "basis " + " ".join(doc.labels)]
    for key in TOP_KEYS:
        if key in doc.maps:
            out.extend(_lines(key, doc.maps[key], n, n, fld))
    for blk in doc.blocks:
        out.append("")
        out.append(f"rmatrix {blk.name}" if blk.kind == "rmatrix" else f"{blk.kind} {blk.name} dim {blk.dim}")
        if blk.labels is not None:
            out.append("  labels " + " ".join(blk.labels))
        for key in BLOCK_KEYS[blk.kind]:
            if key in blk.maps:
                out.extend(_lines(key, blk.maps[key], n, blk.dim, fld, "  "))
    return "\n".join(out) + "\n"


def load(path: str | Path, field: Field | None = None) -> Document:
    return parse(Path(path).read_text(), field)


def dump(doc: Document, path: str | Path):
    Path(path).write_text(serialize(doc))


def documents_equal(a: Document, b: Document) -> bool:
    if (a.field, a.kind, a.dim, a.labels) != (b.field, b.kind, b.dim, b.labels):
        return False
    if a.maps.keys() != b.maps.keys() or any(a.maps[k] != b.maps[k] for k in a.maps):
        return False
    if len(a.blocks) != len(b.blocks):
        return False
    for x, y in zip(a.blocks, b.blocks):
        if (x.kind, x.name, x.dim, x.labels) != (y.kind, y.name, y.dim, y.labels):
            return False
        if x.maps.keys() != y.maps.keys() or any(x.maps[k] != y.maps[k] for k in x.maps):
            return False
    return True


# ---------------------------------------------------------------------------
# conversion to and from the library objects


def to_description(doc: Document) -> HopfDescription:
    if doc.kind != "hopf":
        raise ValueError(f"document kind is {doc.kind}, not hopf")
    m = doc.maps
    rs = {b.name: b.maps["r"] for b in doc.blocks if b.kind == "rmatrix"}
    return HopfDescription(doc.field, doc.dim, list(doc.labels), m["mul"], m["unit"], m["comul"],
                           m["counit"], m["antipode"], rs)


def from_description(desc: HopfDescription, kind: str = "hopf", action: Matrix | None = None) -> Document:
    maps = {"mul": desc.mul, "unit": desc.unit, "comul": desc.comul, "counit": desc.counit,
            "antipode": desc.antipode}
    if action is not None:
        maps["action"] = action
    doc = Document(desc.field, kind, desc.dim, list(desc.labels), maps)
    for name, r in desc.r_matrices.items():
        doc.blocks.append(Block("rmatrix", name, desc.dim, None, {"r": r}))
    return doc
