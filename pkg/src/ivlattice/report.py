"""Structured pass/fail reports shared by the verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification suite: named boolean checks plus witnesses."""

    suite: str
    n: int
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, passed: bool, witness=None) -> bool:
        self.checks[name] = bool(passed)
        if witness is not None:
            self.witnesses[name] = witness
        return passed

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "ok": self.ok,
            "checks": dict(sorted(self.checks.items())),
            "witnesses": {k: self.witnesses[k] for k in sorted(self.witnesses)},
            "notes": self.notes,
        }
