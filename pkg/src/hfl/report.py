"""Pass/fail bookkeeping shared by the verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    axiom: str
    passed: bool
    witness: str | None = None
    cases: int = 0

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "pass": self.passed, "witness": self.witness, "cases": self.cases}


@dataclass
class VerificationReport:
    """Ordered list of checks plus free-form notes.

    Notes carry findings that are not failures, e.g. a stated case list
    that disagrees with the trace oracle while the shipped rule does not.
    """

    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, axiom: str, passed: bool, witness=None, cases: int = 0) -> Check:
        check = Check(axiom, bool(passed), None if witness is None else str(witness), cases)
        self.checks.append(check)
        return check

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, axiom: str) -> Check:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "pass": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            tail = f"  witness={c.witness}" if c.witness else ""
            lines.append(f"  [{mark}] {c.axiom} ({c.cases} cases){tail}")
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


__all__ = ["Check", "VerificationReport"]
