"""Partially dynamic gadgets: round vertices hang off paths or fans so
that each round's updates are pure insertions (incremental) or pure
deletions (decremental), and the decode threshold moves with the round."""

from __future__ import annotations

from typing import Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector
from ..dynoracles import (
    BipartiteMatchingOracle,
    DistanceOracle,
    FaultPlan,
    TransitiveClosureOracle,
)
from ..dynoracles.graphs import DynGraph
from .runs import SNAPSHOT, UNDO, GadgetConfig, GadgetRun, check_pairs, expect

Pairs = Sequence[tuple[BoolVector, BoolVector]]

DECREMENTAL = "decremental"
INCREMENTAL = "incremental"


def _check_direction(direction: str) -> None:
    if direction not in (DECREMENTAL, INCREMENTAL):
        raise ValueError(f"direction must be '{DECREMENTAL}' or '{INCREMENTAL}'")


def incr_stsp_gadget(matrix: BoolMatrix, pairs: Pairs,
                     config: Optional[GadgetConfig] = None,
                     fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Insertions only: two paths grow spokes toward L and R, round r
    (0-based) attaching at distance n3-1-r from each endpoint, so on a
    witness round d(s, s') is exactly 2*(n3-r)+1 and otherwise at least
    2*(n3-r)+2.  Every edge, including the initial paths and matrix
    edges, is a counted insertion into an initially empty graph."""
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    # p-path positions: index d holds the vertex at hop distance d from s
    p_at = [n1 + n2 + d for d in range(n3)]
    q_at = [n1 + n2 + n3 + d for d in range(n3)]
    s, s_prime = p_at[0], q_at[0]
    g = DynGraph(n1 + n2 + 2 * n3)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    for d in range(n3 - 1):
        oracle.insert_edge(p_at[d], p_at[d + 1])
        oracle.insert_edge(q_at[d], q_at[d + 1])
    for i in range(n1):
        for j in matrix.rows[i].support():
            oracle.insert_edge(n1 + j, i)
    recovered = []
    for r, (u, v) in enumerate(pairs):
        attach = n3 - 1 - r
        for i in u.support():
            oracle.insert_edge(p_at[attach], i)
        for j in v.support():
            oracle.insert_edge(q_at[attach], n1 + j)
        target = 2 * (n3 - r) + 1
        d = oracle.dist(s, s_prime)
        expect(d == target or d is None or d >= target + 1,
               f"incr-st-sp: distance {d} below round target {target}")
        recovered.append(1 if d == target else 0)
    run = GadgetRun(
        kind="incr-st-sp", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n1 * n2 + n1 * n3 + n2 * n3 + 2 * n3,
        budget_queries=n3,
        undo_mode=SNAPSHOT,
    )
    run.check()
    return run


def partial_stsp_gadget(matrix: BoolMatrix, pairs: Pairs,
                        config: Optional[GadgetConfig] = None,
                        fault_plan: Optional[FaultPlan] = None,
                        direction: str = DECREMENTAL) -> GadgetRun:
    """Decremental: all spokes are present up front; round r (1-based t)
    deletes the zero-position spokes at the round's path vertices, reads
    d(s, s') against the threshold 2t+1, then clears the rest of the
    round's spokes.  The incremental mirror is the showcase construction.
    """
    _check_direction(direction)
    if direction == INCREMENTAL:
        run = incr_stsp_gadget(matrix, pairs, config, fault_plan)
        run.kind = "st-sp-partial"
        run.details["direction"] = INCREMENTAL
        return run
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    p_at = [n1 + n2 + d for d in range(n3)]
    q_at = [n1 + n2 + n3 + d for d in range(n3)]
    s, s_prime = p_at[0], q_at[0]
    g = DynGraph(n1 + n2 + 2 * n3)
    for d in range(n3 - 1):
        g.add_edge(p_at[d], p_at[d + 1])
        g.add_edge(q_at[d], q_at[d + 1])
    for i in range(n1):
        for j in matrix.rows[i].support():
            g.add_edge(n1 + j, i)
    for d in range(n3):
        for i in range(n1):
            g.add_edge(p_at[d], i)
        for j in range(n2):
            g.add_edge(q_at[d], n1 + j)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    recovered = []
    for r, (u, v) in enumerate(pairs):
        t = r + 1
        for i in range(n1):
            if not u.get(i):
                oracle.delete_edge(p_at[r], i)
        for j in range(n2):
            if not v.get(j):
                oracle.delete_edge(q_at[r], n1 + j)
        target = 2 * t + 1
        d = oracle.dist(s, s_prime)
        expect(d == target or d is None or d >= target + 1,
               f"st-sp-partial: distance {d} below round target {target}")
        recovered.append(1 if d == target else 0)
        for i in u.support():
            oracle.delete_edge(p_at[r], i)
        for j in v.support():
            oracle.delete_edge(q_at[r], n1 + j)
    run = GadgetRun(
        kind="st-sp-partial", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n3 * (n1 + n2), budget_queries=n3,
        undo_mode=SNAPSHOT,
        details={"direction": DECREMENTAL},
    )
    run.check()
    return run


def partial_sssp_gadget(matrix: BoolMatrix, pairs: Pairs,
                        config: Optional[GadgetConfig] = None,
                        fault_plan: Optional[FaultPlan] = None,
                        direction: str = DECREMENTAL) -> GadgetRun:
    """Single-source flavor: one path carries the rounds; round t leaves
    d(s, l_i) = t+1 for some witness row (decremental, 1-based t) or
    (n3-r)+1 in the incremental mirror, always with a +1 separation from
    every non-witness alternative."""
    _check_direction(direction)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    q_at = [n1 + n2 + d for d in range(n3)]
    s = q_at[0]
    g = DynGraph(n1 + n2 + n3)
    decremental = direction == DECREMENTAL
    if decremental:
        # the initial graph, spokes included, is handed over uncounted
        for d in range(n3 - 1):
            g.add_edge(q_at[d], q_at[d + 1])
        for i in range(n1):
            for j in matrix.rows[i].support():
                g.add_edge(n1 + j, i)
        for d in range(n3):
            for j in range(n2):
                g.add_edge(q_at[d], n1 + j)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    if not decremental:
        for d in range(n3 - 1):
            oracle.insert_edge(q_at[d], q_at[d + 1])
        for i in range(n1):
            for j in matrix.rows[i].support():
                oracle.insert_edge(n1 + j, i)
    recovered = []
    for r, (u, v) in enumerate(pairs):
        # attach at hop distance r from s decrementally, n3-1-r incrementally
        dist_to_round = r if decremental else n3 - 1 - r
        round_vertex = q_at[dist_to_round]
        if decremental:
            for j in range(n2):
                if not v.get(j):
                    oracle.delete_edge(round_vertex, n1 + j)
        else:
            for j in v.support():
                oracle.insert_edge(round_vertex, n1 + j)
        target = dist_to_round + 2
        bit = 0
        for i in u.support():
            d = oracle.dist(s, i)
            expect(d == target or d is None or d >= target + 1,
                   f"ss-sp-partial: distance {d} below round target {target}")
            if d == target:
                bit = 1
                break
        recovered.append(bit)
        if decremental:
            for j in v.support():
                oracle.delete_edge(round_vertex, n1 + j)
    build_cost = 0 if decremental else n1 * n2 + n3
    run = GadgetRun(
        kind="ss-sp-partial", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n3 * n2 + build_cost, budget_queries=n3 * n1,
        undo_mode=SNAPSHOT,
        details={"direction": direction},
    )
    run.check()
    return run


def partial_apsp_gadget(matrix: BoolMatrix, pairs: Pairs,
                        config: Optional[GadgetConfig] = None,
                        fault_plan: Optional[FaultPlan] = None,
                        direction: str = DECREMENTAL) -> GadgetRun:
    """All-pairs flavor: the rounds are a fan of independent vertices, so
    every round reads fresh distances d(q_t, l_i) in {2} versus [4, inf).
    """
    _check_direction(direction)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    g = DynGraph(n1 + n2 + n3)
    decremental = direction == DECREMENTAL
    if decremental:
        for i in range(n1):
            for j in matrix.rows[i].support():
                g.add_edge(n1 + j, i)
        for r in range(n3):
            for j in range(n2):
                g.add_edge(n1 + n2 + r, n1 + j)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    if not decremental:
        for i in range(n1):
            for j in matrix.rows[i].support():
                oracle.insert_edge(n1 + j, i)
    recovered = []
    for r, (u, v) in enumerate(pairs):
        round_vertex = n1 + n2 + r
        if decremental:
            for j in range(n2):
                if not v.get(j):
                    oracle.delete_edge(round_vertex, n1 + j)
        else:
            for j in v.support():
                oracle.insert_edge(round_vertex, n1 + j)
        bit = 0
        for i in u.support():
            d = oracle.dist(round_vertex, i)
            expect(d == 2 or d is None or d >= 4,
                   f"ap-sp-partial: distance {d} falls in the forbidden gap")
            if d == 2:
                bit = 1
                break
        recovered.append(bit)
        if decremental:
            for j in v.support():
                oracle.delete_edge(round_vertex, n1 + j)
    build_cost = 0 if decremental else n1 * n2
    run = GadgetRun(
        kind="ap-sp-partial", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n3 * n2 + build_cost, budget_queries=n3 * n1,
        undo_mode=SNAPSHOT,
        details={"direction": direction},
    )
    run.check()
    return run


def partial_tc_gadget(matrix: BoolMatrix, pairs: Pairs,
                      config: Optional[GadgetConfig] = None,
                      fault_plan: Optional[FaultPlan] = None,
                      direction: str = DECREMENTAL) -> GadgetRun:
    """Directed reachability: matrix edges point from R to L and round
    vertices point into R, so q_t reaches l_i exactly through a witness."""
    _check_direction(direction)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    g = DynGraph(n1 + n2 + n3, directed=True)
    decremental = direction == DECREMENTAL
    if decremental:
        for i in range(n1):
            for j in matrix.rows[i].support():
                g.add_edge(n1 + j, i)
        for r in range(n3):
            for j in range(n2):
                g.add_edge(n1 + n2 + r, n1 + j)
    oracle = TransitiveClosureOracle(g)
    oracle.fault_plan = fault_plan
    if not decremental:
        for i in range(n1):
            for j in matrix.rows[i].support():
                oracle.insert_edge(n1 + j, i)
    recovered = []
    for r, (u, v) in enumerate(pairs):
        round_vertex = n1 + n2 + r
        if decremental:
            for j in range(n2):
                if not v.get(j):
                    oracle.delete_edge(round_vertex, n1 + j)
        else:
            for j in v.support():
                oracle.insert_edge(round_vertex, n1 + j)
        bit = 0
        for i in u.support():
            if oracle.reachable(round_vertex, i):
                bit = 1
                break
        recovered.append(bit)
        if decremental:
            for j in v.support():
                oracle.delete_edge(round_vertex, n1 + j)
    build_cost = 0 if decremental else n1 * n2
    run = GadgetRun(
        kind="tc-partial", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n3 * n2 + build_cost, budget_queries=n3 * n1,
        undo_mode=SNAPSHOT,
        details={"direction": direction},
    )
    run.check()
    return run


def partial_matching_gadget(matrix: BoolMatrix, pairs: Pairs,
                            config: Optional[GadgetConfig] = None,
                            fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Decremental matching: a perfect matching of primed partners plus
    per-round pendants; deleting the pendant matching edges on the round's
    support drops the maximum by the deletion count unless a witness opens
    one augmenting path through L'-L-R-R', in which case the drop is one
    smaller.  Stage spokes attach to the primed partners so that path
    alternates correctly."""
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    n3 = len(pairs)
    block = 2 * (n1 + n2)

    def l(i): return i
    def l_prime(i): return n1 + i
    def r(j): return 2 * n1 + j
    def r_prime(j): return 2 * n1 + n2 + j
    def x(t, i): return block + t * block + i
    def x_prime(t, i): return block + t * block + n1 + i
    def y(t, j): return block + t * block + 2 * n1 + j
    def y_prime(t, j): return block + t * block + 2 * n1 + n2 + j

    total = block * (n3 + 1)
    g = DynGraph(total)
    side = [0] * total
    for i in range(n1):
        side[l_prime(i)] = 1
    for j in range(n2):
        side[r(j)] = 1
    for t in range(n3):
        for i in range(n1):
            side[x_prime(t, i)] = 1
        for j in range(n2):
            side[y(t, j)] = 1
    for i in range(n1):
        g.add_edge(l(i), l_prime(i))
        for j in matrix.rows[i].support():
            g.add_edge(l(i), r(j))
    for j in range(n2):
        g.add_edge(r(j), r_prime(j))
    for t in range(n3):
        for i in range(n1):
            g.add_edge(x(t, i), x_prime(t, i))
            g.add_edge(x(t, i), l_prime(i))
        for j in range(n2):
            g.add_edge(y(t, j), y_prime(t, j))
            g.add_edge(y(t, j), r_prime(j))
    oracle = BipartiteMatchingOracle(g, side)
    oracle.fault_plan = fault_plan
    expect(oracle.matching_size_uncounted() == (n1 + n2) * (n3 + 1),
           "matching-partial: scaffold is not perfectly matched")
    recovered = []
    size_start = oracle.matching_size_uncounted()
    for t, (u, v) in enumerate(pairs):
        dropped = 0
        for i in u.support():
            oracle.delete_edge(x(t, i), x_prime(t, i))
            dropped += 1
        for j in v.support():
            oracle.delete_edge(y(t, j), y_prime(t, j))
            dropped += 1
        size_now = oracle.matching_size()
        drop = size_start - size_now
        expect(0 <= drop <= dropped,
               f"matching-partial: drop {drop} outside [0, {dropped}]")
        recovered.append(1 if dropped > 0 and drop <= dropped - 1 else 0)
        for i in range(n1):
            oracle.delete_edge(x(t, i), l_prime(i))
        for j in range(n2):
            oracle.delete_edge(y(t, j), r_prime(j))
        size_start = oracle.matching_size_uncounted()
    run = GadgetRun(
        kind="matching-partial", rounds=n3, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=n3 * 2 * (n1 + n2), budget_queries=n3,
        undo_mode=SNAPSHOT,
    )
    run.check()
    return run
