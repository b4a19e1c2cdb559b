"""Verdict containers shared by the lemma checks and the theorem verifiers."""

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
NA = "N/A"
INFO = "INFO"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Report:
    """Outcome of one check.

    ``violations`` lists human-readable descriptions of every failed
    sub-assertion; ``details`` holds witnesses (matrices, permutations,
    generator lists) as plain JSON-able values.
    """

    name: str
    verdict: str = PASS
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def fail(self, message):
        self.violations.append(message)
        self.verdict = FAIL

    def require(self, condition, message):
        if not condition:
            self.fail(message)
        return bool(condition)

    @property
    def passed(self):
        return self.verdict == PASS

    @property
    def failed(self):
        return self.verdict == FAIL

    def as_dict(self):
        return {
            "name": self.name,
            "verdict": self.verdict,
            "violations": list(self.violations),
            "details": self.details,
            "notes": list(self.notes),
        }

    def __str__(self):
        lines = [f"{self.name}: {self.verdict}"]
        lines += [f"  - {v}" for v in self.violations]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def not_applicable(name, reason):
    return Report(name, NA, notes=[reason])


# the theorem verifiers return the same container
StructureReport = Report
