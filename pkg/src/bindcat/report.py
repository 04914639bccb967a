"""Uniform law reports shared by every checker in the package."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One failed law instance, with a rendered witness."""

    law: str
    witness: str


@dataclass
class LawReport:
    """Outcome of an exhaustive law check.

    ``checks_run`` counts every instance examined, so an empty violation
    list means the laws passed exhaustively, not vacuously.
    """

    checks_run: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, ok: bool, law: str, witness) -> bool:
        """Record one instance; ``witness`` may be a string or a thunk."""
        self.checks_run += 1
        if not ok:
            self.fail(law, witness)
        return ok

    def fail(self, law: str, witness) -> None:
        if callable(witness):
            witness = witness()
        self.violations.append(Violation(law, str(witness)))

    def tally(self, n: int = 1) -> None:
        # for hot loops that count instances without going through check()
        self.checks_run += n

    def merge(self, other: "LawReport") -> "LawReport":
        self.checks_run += other.checks_run
        self.violations.extend(other.violations)
        return self

    def by_law(self, law: str) -> list[Violation]:
        return [v for v in self.violations if v.law == law]
