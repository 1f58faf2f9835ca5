"""Reports: ordered entries with pass/fail/skip status, text and JSON renderings.

The machine form is deterministic: no timestamps or timings in the body.
Timings are kept in ``Report.timings`` and written separately.

Machine schema (``schema`` = "qtbrauer-report/1")::

    {"schema": str, "command": str, "field": str, "passed": bool,
     "summary": {"pass": int, "fail": int, "skip": int},
     "entries": [{"group": str, "name": str, "anchor": str,
                  "status": "pass" | "fail" | "skip",
                  "witness": object | null, "detail": str}]}
"""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterable

from .checks import Check

SCHEMA = "qtbrauer-report/1"


@dataclass
class Entry:
    group: str
    name: str
    anchor: str
    status: str
    witness: Any = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {"group": self.group, "name": self.name, "anchor": self.anchor, "status": self.status,
                "witness": _plain(self.witness), "detail": self.detail}


def _plain(x):
    """Witnesses may carry field elements and tuples; make them JSON-safe."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


@dataclass
class Report:
    command: str
    field: str
    entries: list[Entry] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def add(self, group: str, name: str, passed: bool, anchor: str = "", witness=None, detail: str = "") -> Entry:
        e = Entry(group, name, anchor, "pass" if passed else "fail", witness, detail)
        self.entries.append(e)
        return e

    def add_check(self, group: str, c: Check) -> Entry:
        return self.add(group, c.name, c.passed, c.anchor, c.witness, c.detail)

    def add_checks(self, group: str, checks: Iterable[Check]):
        for c in checks:
            self.add_check(group, c)

    def skip(self, group: str, name: str, anchor: str = "", detail: str = "") -> Entry:
        e = Entry(group, name, anchor, "skip", None, detail)
        self.entries.append(e)
        return e

    @contextmanager
    def timed(self, label: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = self.timings.get(label, 0.0) + time.perf_counter() - t0

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == "fail"]

    def group_status(self, group: str) -> str:
        st = [e.status for e in self.entries if e.group == group]
        if not st:
            return "skip"
        if "fail" in st:
            return "fail"
        return "pass" if "pass" in st else "skip"

    def groups(self) -> list[str]:
        seen: list[str] = []
        for e in self.entries:
            if e.group not in seen:
                seen.append(e.group)
        return seen

    def as_dict(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "field": self.field, "passed": self.passed,
                "summary": self.counts(), "entries": [e.as_dict() for e in self.entries]}

    def to_machine(self) -> str:
        return json.dumps(self.as_dict(), indent=1, sort_keys=True) + "\n"

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.command} over {self.field}"]
        for g in self.groups():
            es = [e for e in self.entries if e.group == g]
            c = {s: sum(e.status == s for e in es) for s in ("pass", "fail", "skip")}
            lines.append(f"[{self.group_status(g).upper():4}] {g}  ({c['pass']} pass, {c['fail']} fail, {c['skip']} skip)")
            for e in es:
                if verbose or e.status != "pass":
                    tag = e.status.upper()
                    extra = f"  anchor={e.anchor}" if e.anchor else ""
                    lines.append(f"    {tag:4} {e.name}{extra}")
                    if e.witness is not None:
                        lines.append(f"         witness: {json.dumps(_plain(e.witness), sort_keys=True)}")
                    if e.detail:
                        lines.append(f"         {e.detail}")
        c = self.counts()
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip")
        return "\n".join(lines) + "\n"

    def timing_text(self) -> str:
        return "".join(f"{k}\t{v:.3f}s\n" for k, v in self.timings.items())


def parse_machine(text: str) -> dict:
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unknown report schema {data.get('schema')!r}")
    return data
