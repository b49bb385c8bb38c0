"""Report records produced by the scenario runner.

Reports serialise to JSON with a fixed key order so that identical inputs
give byte-identical output (timing comes from an injectable clock).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
UNSUPPORTED = "unsupported"


@dataclass
class Check:
    id: str
    anchor: str
    verdict: str
    witness: str = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Table:
    name: str
    degrees: list
    dims: list
    predicted: list
    verdict: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "degrees": list(self.degrees),
            "dims": list(self.dims),
            "predicted": list(self.predicted),
            "verdict": self.verdict,
        }


@dataclass
class Report:
    version: str
    scenario: dict
    checks: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "scenario": self.scenario,
            "checks": [c.to_dict() for c in self.checks],
            "tables": [t.to_dict() for t in self.tables],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @property
    def failed(self) -> bool:
        return any(c.verdict == FAIL for c in self.checks) or \
            any(t.verdict == FAIL for t in self.tables)

    def summary_lines(self):
        for c in self.checks:
            mark = {"pass": "ok", "fail": "FAIL", "unsupported": "skip"}[c.verdict]
            line = f"[{mark:>4}] {c.id}  ({c.anchor})"
            if c.witness and c.verdict != PASS:
                line += f"\n       witness: {c.witness}"
            yield line
        for t in self.tables:
            mark = "ok" if t.verdict == PASS else "FAIL"
            yield (f"[{mark:>4}] table {t.name}: dims={t.dims} "
                   f"predicted={t.predicted}")


def passed(condition: bool) -> str:
    return PASS if condition else FAIL
