"""Pass/fail records with counterexample witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .linalg import Field, TensorIndex


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None
    anchor: str = ""
    detail: str = ""

    def __bool__(self):
        return self.passed


@dataclass
class CheckList:
    """Ordered collection of checks; truthy iff all pass."""

    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    def __iter__(self):
        return iter(self.checks)

    def __bool__(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def anchored(self, anchor: str) -> "CheckList":
        """Give ``anchor`` to every check that has none."""
        for c in self.checks:
            if not c.anchor:
                c.anchor = anchor
        return self

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def _fmt_vec(fld: Field, vec: Mapping[int, Any], labels: Sequence[str] | None = None) -> str:
    if not vec:
        return "0"
    parts = []
    for k in sorted(vec):
        name = labels[k] if labels else str(k)
        parts.append(f"{fld.format(vec[k])}*{name}")
    return " + ".join(parts)


def compare_maps(name: str, fld: Field, in_dims: Sequence[int],
                 lhs: Callable[[tuple[int, ...]], Mapping[int, Any]],
                 rhs: Callable[[tuple[int, ...]], Mapping[int, Any]],
                 labels: Sequence[Sequence[str]] | None = None,
                 anchor: str = "") -> Check:
    """Compare two linear maps on every basis tensor of the source.

    ``lhs``/``rhs`` send a basis index tuple to a sparse image ``{flat: c}``.
    The witness names the first basis input where the images differ.
    """
    for idx in TensorIndex(in_dims):
        a = {k: v for k, v in lhs(idx).items() if v}
        b = {k: v for k, v in rhs(idx).items() if v}
        if a != b:
            keys = sorted(set(a) | set(b))
            k = next(k for k in keys if a.get(k, 0) != b.get(k, 0))
            inp = [labels[i][j] for i, j in enumerate(idx)] if labels else list(idx)
            return Check(name, False, {
                "input": inp,
                "output_index": k,
                "lhs": fld.format(a.get(k, fld.zero)),
                "rhs": fld.format(b.get(k, fld.zero)),
            }, anchor=anchor)
    return Check(name, True, anchor=anchor)


def compare_vectors(name: str, fld: Field, a: Mapping[int, Any], b: Mapping[int, Any],
                    anchor: str = "") -> Check:
    a = {k: v for k, v in a.items() if v}
    b = {k: v for k, v in b.items() if v}
    if a == b:
        return Check(name, True, anchor=anchor)
    keys = sorted(set(a) | set(b))
    k = next(k for k in keys if a.get(k, 0) != b.get(k, 0))
    return Check(name, False, {"output_index": k,
                               "lhs": fld.format(a.get(k, fld.zero)),
                               "rhs": fld.format(b.get(k, fld.zero))}, anchor=anchor)


def compare_matrices(name: str, a, b, anchor: str = "") -> Check:
    if a.shape != b.shape:
        return Check(name, False, {"shape": [list(a.shape), list(b.shape)]}, anchor=anchor)
    d = a.first_difference(b)
    if d is None:
        return Check(name, True, anchor=anchor)
    i, j = d
    f = a.field
    return Check(name, False, {"row": i, "col": j, "lhs": f.format(a[i, j]),
                               "rhs": f.format(b[i, j])}, anchor=anchor)
