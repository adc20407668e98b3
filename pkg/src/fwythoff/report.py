"""Structured results shared by every verifier and probe."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass
class ReportItem:
    """One check outcome.

    ``fail`` always carries a counterexample; ``inconclusive`` is reserved
    for existence claims whose witness may lie beyond the searched bound.
    """

    name: str
    status: Status
    counterexample: Optional[object] = None  # a position, or a small dict
    parameters: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status is Status.FAIL and self.counterexample is None:
            raise ValueError(f"failing check {self.name!r} needs a counterexample")


def exit_code(items) -> int:
    """Process exit status for a report: 1 on any fail, else 0."""
    return 1 if any(item.status is Status.FAIL for item in items) else 0
