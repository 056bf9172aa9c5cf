"""Named pass/fail records produced by the verification helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, "" if ok else detail))
        return ok

    def compare(self, name: str, left, right) -> bool:
        """Record whether two matrices agree, naming the first differing cell."""
        if left == right:
            return self.record(name, True)
        return self.record(name, False, first_difference(left, right))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, NOT_APPLICABLE, reason))

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in self.checks],
        }

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tail = f"  ({c.detail})" if c.detail else ""
            out.append(f"{c.status.upper():>14}  {c.name}{tail}")
        return out


def first_difference(a, b) -> str:
    if a.shape != b.shape:
        return f"shape {a.shape} vs {b.shape}"
    for i, (ra, rb) in enumerate(zip(a.data, b.data)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return f"cell ({i + 1}, {j + 1}): {x} != {y}"
    return "equal"
