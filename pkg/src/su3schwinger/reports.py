"""Check records and verification reports (the JSON surface of `verify`)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    """One verified identity instance: id, parameters, outcome.

    ``counterexample`` is populated exactly when the check failed.
    """

    check_id: str
    params: dict
    passed: bool
    counterexample: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"id": self.check_id, "params": self.params, "passed": self.passed}
        if not self.passed:
            out["counterexample"] = self.counterexample or {}
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> dict:
        failed = sum(1 for c in self.checks if not c.passed)
        return {
            "total": len(self.checks),
            "passed": len(self.checks) - failed,
            "failed": failed,
        }

    def to_json_dict(self) -> dict:
        # aggregation is order-independent: records are sorted by id on emission
        return {
            "suite": self.suite,
            "checks": [c.to_json_dict() for c in sorted(self.checks, key=lambda c: c.check_id)],
            "summary": self.summary,
            "status": "pass" if self.passed else "fail",
            "wall_time_s": round(self.wall_time_s, 3),
        }


def failure_payload(state, difference) -> dict:
    """Standard counterexample body: the input state and the lhs-rhs residue."""
    return {
        "input": state.to_terms_json(),
        "difference": difference.to_terms_json(),
    }
