from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger("dca.checks")

WITNESS_KINDS = (
    "midpoint-pair",
    "hole-point",
    "submodular-pair",
    "envelope-gap",
    "parallelogram-pair",
    "argmin-hole",
    "domain-not-box",
    "separable-identity",
    "univariate-convexity",
)


@dataclass(frozen=True)
class ViolationWitness:
    kind: str
    points: tuple
    values: tuple = ()
    detail: Any = None  # ConvexCombination or Halfspace
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")


@dataclass(frozen=True)
class CheckReport:
    property: str
    verdict: bool
    witness: ViolationWitness | None = None
    pairs_checked: int = 0
    elapsed: float = 0.0
    notes: tuple = ()

    def __post_init__(self):
        if self.verdict == (self.witness is not None):
            raise ValueError("a report carries a witness exactly when its verdict is false")

    def __bool__(self):
        return self.verdict


class CheckTimer:
    """Collects the bookkeeping every checker reports."""

    def __init__(self, prop: str):
        self.prop = prop
        self.pairs = 0
        self.notes = []
        self.start = time.perf_counter()

    def tick(self, count: int = 1):
        self.pairs += count

    def note(self, message: str):
        self.notes.append(message)

    def finish(self, witness: ViolationWitness | None = None) -> CheckReport:
        report = CheckReport(self.prop, witness is None, witness, self.pairs,
                             time.perf_counter() - self.start, tuple(self.notes))
        logger.info(f"{self.prop}: verdict={report.verdict} pairs={report.pairs_checked} "
                    f"elapsed={report.elapsed:.3f}s")
        return report
