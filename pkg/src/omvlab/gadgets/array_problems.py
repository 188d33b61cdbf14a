"""Gadgets targeting the non-graph oracles: intersection-family
membership, zero prefix sums, and row/column-increment maxima."""

from __future__ import annotations

from typing import Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector
from ..dynoracles import EricksonOracle, FaultPlan, PaghOracle, ZeroPrefixOracle
from .runs import SNAPSHOT, UNDO, GadgetConfig, GadgetRun, check_pairs, expect

Pairs = Sequence[tuple[BoolVector, BoolVector]]


def _config(config: Optional[GadgetConfig]) -> GadgetConfig:
    return config if config is not None else GadgetConfig()


def pagh_gadget(matrix: BoolMatrix, pairs: Pairs,
                config: Optional[GadgetConfig] = None,
                fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """The family starts as the complement rows; a round chains
    intersections over the u-support and asks whether some v-supported
    column is missing from the result.  The intersection over an empty
    support is the full universe, so an all-zero u decodes to 0 without
    touching the oracle.  Sets are never removed: the family just grows.
    """
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    complement = matrix.complement()
    oracle = PaghOracle(n2, (row.bits for row in complement.rows))
    oracle.fault_plan = fault_plan
    recovered = []
    for u, v in pairs:
        support = list(u.support())
        if not support:
            recovered.append(0)
            continue
        cur = support[0]
        for i in support[1:]:
            cur = oracle.insert_intersection(cur, i)
        bit = 0
        for j in v.support():
            if not oracle.member(cur, j):
                bit = 1
                break
        recovered.append(bit)
    rounds = len(pairs)
    run = GadgetRun(
        kind="pagh", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * n1, budget_queries=rounds * n2,
        undo_mode=SNAPSHOT,
        details={"universe": n2, "initial_sets": n1},
    )
    run.check()
    return run


def _langerman_layout(matrix: BoolMatrix) -> list[int]:
    """Array image of M: one selector cell, then per row a zero cell, a
    cell pair per column ((1,1) for a set bit, (2,0) for an unset one), and
    a closing -2*n2 cell, so every row sums to zero."""
    n2 = matrix.n2
    cells = [1]
    for row in matrix.rows:
        cells.append(0)
        for j in range(n2):
            if row.get(j):
                cells.extend((1, 1))
            else:
                cells.extend((2, 0))
        cells.append(-2 * n2)
    return cells


def langerman_gadget(matrix: BoolMatrix, pairs: Pairs,
                     config: Optional[GadgetConfig] = None,
                     fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Zero-prefix-sum decode: swapping a row's end cells arms it for the
    u-support; pointing the selector cell at column j (value 2*(n2-j)+1
    for 1-based j) lets the prefix sum hit zero exactly inside an armed
    row whose bit j is set."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    row_len = 2 * n2 + 2
    oracle = ZeroPrefixOracle(_langerman_layout(matrix))
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()

    def row_start(i: int) -> int:
        return 1 + i * row_len

    recovered = []
    for u, v in pairs:
        armed = list(u.support())
        for i in armed:
            oracle.set(row_start(i), -2 * n2)
            oracle.set(row_start(i) + row_len - 1, 0)
        bit = 0
        for j in v.support():
            oracle.set(0, 2 * (n2 - (j + 1)) + 1)
            if oracle.has_zero_prefix():
                bit = 1
                break
        recovered.append(bit)
        if cfg.undo_mode == UNDO:
            for i in armed:
                oracle.set(row_start(i), 0)
                oracle.set(row_start(i) + row_len - 1, -2 * n2)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    arm_cost = 2 * n1 * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="langerman", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * (arm_cost + n2), budget_queries=rounds * n2,
        undo_mode=cfg.undo_mode,
        details={"array_size": 1 + n1 * row_len},
    )
    run.check()
    return run


def erickson_gadget(matrix: BoolMatrix, pairs: Pairs,
                    config: Optional[GadgetConfig] = None,
                    fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Row/column increments on M viewed as integers: after round t's
    increments the maximum is 2t+1 exactly when the round has a witness;
    incrementing the complements afterwards re-levels the matrix, so no
    undo is ever needed."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    oracle = EricksonOracle([[matrix.entry(i, j) for j in range(n2)] for i in range(n1)])
    oracle.fault_plan = fault_plan
    recovered = []
    for t, (u, v) in enumerate(pairs, start=1):
        for i in u.support():
            oracle.inc_row(i)
        for j in v.support():
            oracle.inc_col(j)
        top = oracle.max()
        expect(2 * t - 2 <= top <= 2 * t + 1,
               f"erickson: max {top} outside [{2 * t - 2}, {2 * t + 1}] at round {t}")
        recovered.append(1 if top == 2 * t + 1 else 0)
        for i in range(n1):
            if not u.get(i):
                oracle.inc_row(i)
        for j in range(n2):
            if not v.get(j):
                oracle.inc_col(j)
    rounds = len(pairs)
    run = GadgetRun(
        kind="erickson", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * (n1 + n2), budget_queries=rounds,
        undo_mode=UNDO,
    )
    run.check()
    return run
