from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
ENGINE_INCONSISTENCY = "engine-inconsistency"
PAPER_DISCREPANCY = "paper-discrepancy"
# theorem-4 explore mode: combinations outside the hypothesis, reported but never gating
UNCLAIMED_PASS = "unclaimed-pass"
UNCLAIMED_FAIL = "unclaimed-fail"

FAILING = {FAIL, ENGINE_INCONSISTENCY, PAPER_DISCREPANCY}


@dataclass
class VerificationReport:
    claim_id: str
    params: dict[str, int]
    order: int
    status: str
    instances_checked: int = 0
    first_violation: tuple[int, int] | None = None
    modulus: int | None = None
    progression: tuple[int, int] | None = None
    l1: int | None = None
    l2: int | None = None
    insufficient_coverage: bool = False
    runtime: float = 0.0
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status in FAILING | {UNCLAIMED_FAIL} and self.first_violation is None:
            raise ValueError(f"status {self.status!r} needs a first_violation")

    @property
    def passed(self) -> bool:
        return self.status not in FAILING

    def sort_key(self):
        return (self.claim_id, tuple(sorted(self.params.items())))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"claim_id": self.claim_id}
        out.update(self.params)
        out.update(
            l1=self.l1,
            l2=self.l2,
            modulus=self.modulus,
            progression_a=self.progression[0] if self.progression else None,
            progression_b=self.progression[1] if self.progression else None,
            order=self.order,
            instances_checked=self.instances_checked,
            status=self.status,
            first_violation_n=self.first_violation[0] if self.first_violation else None,
            first_violation_value=self.first_violation[1] if self.first_violation else None,
            insufficient_coverage=self.insufficient_coverage,
            runtime=round(self.runtime, 4),
            notes="; ".join(self.notes),
        )
        return out

    def describe(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{self.status.upper():<20} {self.claim_id:<22} {params:<28} N={self.order:<6} n={self.instances_checked}"
        if self.first_violation:
            line += f"  first violation at {self.first_violation[0]}: {self.first_violation[1]}"
        if self.insufficient_coverage:
            line += "  [insufficient coverage]"
        return line
