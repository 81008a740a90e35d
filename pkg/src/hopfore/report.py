"""Pass/fail reports with named checks and optional witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None

    def to_dict(self):
        d = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    context: str = ""
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, bool(passed), witness))
        return self.checks[-1]

    def record(self, name, lhs, rhs):
        """Check exact equality, keeping the difference as witness on failure."""
        if lhs == rhs:
            self.add(name, True)
            return True
        try:
            diff = f"residue {lhs - rhs}"
        except TypeError:
            diff = f"left {lhs} != right {rhs}"
        self.add(name, False, diff)
        return False

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        n_fail = len(self.failures())
        head = f"{self.context}: " if self.context else ""
        if n_fail == 0:
            return f"{head}pass ({len(self.checks)} checks)"
        first = self.failures()[0]
        w = f" [{first.witness}]" if first.witness else ""
        return f"{head}FAIL {n_fail}/{len(self.checks)}: first failure {first.name}{w}"

    def to_dict(self):
        return {
            "context": self.context,
            "checks": [c.to_dict() for c in self.checks],
            "verdict": "pass" if self.verdict else "fail",
        }
