"""Law reports: the common currency of every checker in the package."""
from __future__ import annotations

from dataclasses import dataclass, field


def _show(cell):
    name = getattr(cell, "name", None)
    if isinstance(name, str):
        return name
    return repr(cell)


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple = ()

    def to_dict(self):
        return {"law": self.law, "witness": [_show(w) for w in self.witness]}


@dataclass
class LawReport:
    """Violated law instances; an empty report means every checked instance held."""

    violations: list = field(default_factory=list)
    checked: int = 0

    def fail(self, law, *witness):
        self.violations.append(Violation(law, tuple(witness)))

    def expect(self, ok, law, *witness):
        self.checked += 1
        if not ok:
            self.fail(law, *witness)
        return ok

    def extend(self, other, prefix=""):
        self.checked += other.checked
        for v in other.violations:
            self.violations.append(Violation(prefix + v.law, v.witness))
        return self

    @property
    def ok(self):
        return not self.violations

    def laws(self):
        return sorted({v.law for v in self.violations})

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def to_dict(self):
        return {
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }
