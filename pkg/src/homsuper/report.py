"""Outcome of an exhaustive identity check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from homsuper.literal import render_combo
from homsuper.scalar import EvaluationError, Scalar, eval_at

DEFAULT_MAX_VIOLATIONS = 16

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"


@dataclass
class Violation:
    inputs: tuple[str, ...]
    residual: Any
    terms: tuple[tuple[str, Scalar], ...]

    def render(self, param: str = "p") -> str:
        return render_combo(list(self.terms), param)

    def evaluated(self, v: Fraction) -> str:
        """Residual with every coefficient evaluated at ``p = v``."""
        parts = []
        for label, c in self.terms:
            try:
                parts.append((label, Scalar(eval_at(c, v))))
            except EvaluationError:
                return "pole"
        return render_combo(parts)


@dataclass
class CheckReport:
    """Result of a check.  ``violations`` holds at most ``max_violations``
    entries, ``violation_count`` the full number found."""

    check: str
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0
    examined: int = 0
    status: str = PASS
    details: dict[str, str] = field(default_factory=dict)
    max_violations: int = DEFAULT_MAX_VIOLATIONS

    def add(self, inputs: Sequence[str], residual: Any, terms: Sequence[tuple[str, Scalar]]) -> None:
        self.violation_count += 1
        if len(self.violations) < self.max_violations:
            self.violations.append(Violation(tuple(inputs), residual, tuple(terms)))

    def finish(self) -> "CheckReport":
        if self.violation_count:
            self.status = FAIL
        return self

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self) -> bool:
        return self.passed

    def violating_inputs(self) -> list[tuple[str, ...]]:
        return [v.inputs for v in self.violations]

    def merge(self, other: "CheckReport", prefix: str | None = None) -> "CheckReport":
        """Fold ``other`` into this report (violations, counts and details)."""
        for v in other.violations:
            if len(self.violations) < self.max_violations:
                self.violations.append(v)
        self.violation_count += other.violation_count
        self.examined += other.examined
        for k, val in other.details.items():
            self.details[f"{prefix}.{k}" if prefix else k] = val
        if other.status == FAIL:
            self.status = FAIL
        elif other.status == UNDETERMINED and self.status == PASS:
            self.status = UNDETERMINED
        return self
