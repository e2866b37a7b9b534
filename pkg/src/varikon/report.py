"""Small pass/fail reporting structures shared by the verification ops."""

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    claim: str
    expected: object
    computed: object
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def row(self) -> dict:
        d = {"claim": self.claim, "expected": repr(self.expected),
             "computed": repr(self.computed), "pass": self.passed}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, claim, expected, computed, note=""):
        self.checks.append(Check(claim, expected, computed, note))

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        return json.dumps({"title": self.title, "pass": self.passed,
                           "checks": [c.row() for c in self.checks]},
                          indent=2)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.passed else "FAIL"
            line = f"[{status}] {c.claim}: expected {c.expected!r}, got {c.computed!r}"
            if c.note:
                line += f" ({c.note})"
            out.append(line)
        return out
