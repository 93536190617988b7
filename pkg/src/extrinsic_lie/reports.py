"""Pass/fail/finding records shared by the verifiers and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
FINDING = "finding"


@dataclass
class CheckRecord:
    id: str
    status: str
    detail: str = ""
    witness: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"id": self.id, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def check(id: str, condition: bool, detail: str = "", witness: Optional[Dict[str, Any]] = None) -> CheckRecord:
    return CheckRecord(id, PASS if condition else FAIL, detail, None if condition else witness)


@dataclass
class VerifyReport:
    suite: str
    records: List[CheckRecord] = field(default_factory=list)

    def extend(self, records) -> None:
        self.records.extend(records)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, FINDING: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "summary": self.counts(), "records": [r.to_dict() for r in self.records]}
