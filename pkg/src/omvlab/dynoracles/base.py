"""Update/query counting, snapshots, and fault injection shared by all oracles."""

from __future__ import annotations

import copy
from fractions import Fraction
from typing import Any, Optional


class OracleError(ValueError):
    """An operation violated an oracle's contract."""


class FaultPlan:
    """Corrupts the answer of exactly one query (1-based index across the
    oracle's lifetime).  Used by the harness to prove that verification
    catches a single wrong oracle answer."""

    def __init__(self, flip_at_query: int):
        self.flip_at_query = flip_at_query
        self.triggered = False

    def corrupt(self, answer: Any) -> Any:
        self.triggered = True
        if isinstance(answer, bool):
            return not answer
        if answer is None:
            return 1
        if isinstance(answer, (int, Fraction)):
            return answer + 1
        return answer


class CountedOracle:
    """Base for dynamic-problem oracles with monotone update/query counters.

    Mutators call `_count_update()` once; queries return through
    `_count_query(answer)` once.  `snapshot()`/`rollback()` save and
    restore structure state without touching the counters.
    """

    def __init__(self) -> None:
        self.updates = 0
        self.queries = 0
        self.fault_plan: Optional[FaultPlan] = None
        self._snapshots: list[Any] = []

    def _count_update(self) -> None:
        self.updates += 1

    def _count_query(self, answer: Any) -> Any:
        self.queries += 1
        plan = self.fault_plan
        if plan is not None and self.queries == plan.flip_at_query:
            answer = plan.corrupt(answer)
        return answer

    def snapshot(self) -> int:
        self._snapshots.append(copy.deepcopy(self._state()))
        return len(self._snapshots) - 1

    def rollback(self, token: Optional[int] = None) -> None:
        """Restore the state saved at `token` (default: most recent).
        The token survives, so a round loop can roll back repeatedly."""
        if not self._snapshots:
            raise OracleError("no snapshot to roll back to")
        if token is None:
            token = len(self._snapshots) - 1
        state = self._snapshots[token]
        del self._snapshots[token + 1:]
        self._restore(copy.deepcopy(state))

    # subclass hooks
    def _state(self) -> Any:
        raise NotImplementedError

    def _restore(self, state: Any) -> None:
        raise NotImplementedError
