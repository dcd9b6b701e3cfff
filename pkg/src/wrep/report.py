"""Machine-checkable verdict records shared by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class RepReport:
    check: str
    status: str = PASS
    verdicts: dict[str, Any] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    certificates: dict[str, Any] = field(default_factory=dict)
    counterexample: Any = None
    matched_candidate: Any = None
    fixtures_compared: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def fail(self, message: str | None = None) -> None:
        self.status = FAIL
        if message:
            self.violations.append(message)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"check": self.check, "status": self.status}
        for key in ("verdicts", "violations", "certificates", "details"):
            val = getattr(self, key)
            if val:
                out[key] = val
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.matched_candidate is not None:
            out["matched_candidate"] = self.matched_candidate
        out["fixtures_compared"] = list(self.fixtures_compared)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, default=str)
