"""Run records and configuration shared by every reduction gadget."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..bitcore import BoolMatrix, BoolVector, DimensionError

UNDO = "undo"
SNAPSHOT = "snapshot"


class GadgetError(RuntimeError):
    """A gadget's structural guarantee failed (gap, count, or shape)."""


@dataclass(frozen=True)
class GadgetConfig:
    """Knobs for the approximation / trade-off gadget families.

    epsilon drives the subdivision length ceil(4/epsilon); delta is the
    update/query trade-off exponent and only shapes instances; undo_mode
    picks counted inverse operations ("undo") or uncounted snapshot
    restore ("snapshot") for the per-round reset.
    """

    epsilon: Fraction = Fraction(1)
    delta: Fraction = Fraction(1, 2)
    undo_mode: str = UNDO

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.undo_mode not in (UNDO, SNAPSHOT):
            raise ValueError(f"undo_mode must be '{UNDO}' or '{SNAPSHOT}'")

    @property
    def subdivision_length(self) -> int:
        return math.ceil(Fraction(4) / self.epsilon)


@dataclass
class GadgetRun:
    """What one gadget execution did: the per-round recovered bits, the
    operation counters, and the budgets they must respect."""

    kind: str
    rounds: int
    recovered: list[int]
    updates_used: int
    queries_used: int
    budget_updates: int
    budget_queries: int
    undo_mode: str
    details: dict = field(default_factory=dict)

    def check(self) -> None:
        if len(self.recovered) != self.rounds:
            raise GadgetError(
                f"{self.kind}: {len(self.recovered)} decoded bits for {self.rounds} rounds")
        if self.updates_used > self.budget_updates:
            raise GadgetError(
                f"{self.kind}: {self.updates_used} updates exceed budget {self.budget_updates}")
        if self.queries_used > self.budget_queries:
            raise GadgetError(
                f"{self.kind}: {self.queries_used} queries exceed budget {self.budget_queries}")

    def ratio_updates(self) -> Fraction:
        return Fraction(self.updates_used, max(1, self.budget_updates))

    def ratio_queries(self) -> Fraction:
        return Fraction(self.queries_used, max(1, self.budget_queries))


def check_pairs(matrix: BoolMatrix, pairs: Sequence[tuple[BoolVector, BoolVector]]) -> None:
    if not pairs:
        raise DimensionError("at least one vector pair is required")
    for u, v in pairs:
        if u.n != matrix.n1:
            raise DimensionError(f"left vector length {u.n} != row count {matrix.n1}")
        if v.n != matrix.n2:
            raise DimensionError(f"right vector length {v.n} != column count {matrix.n2}")


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise GadgetError(message)
