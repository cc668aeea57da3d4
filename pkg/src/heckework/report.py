"""Machine-readable pass/fail reports for the verifier suites.

Failures always carry a witness (the offending tuple, serialized with str);
check order is fixed by construction so reports are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    check_id: str
    passed: bool
    witness: object = None

    def to_json(self):
        out = {"id": self.check_id, "pass": self.passed}
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    suite: str
    system: str
    checks: list = field(default_factory=list)

    def add(self, check_id, passed, witness=None):
        self.checks.append(Check(check_id, bool(passed), witness))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "suite": self.suite,
            "system": self.system,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def pretty_lines(self):
        lines = ["[%s] %s" % (self.suite, self.system)]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = "  %s %s" % (mark, c.check_id)
            if not c.passed and c.witness is not None:
                line += "  witness=%r" % (c.witness,)
            lines.append(line)
        return lines
