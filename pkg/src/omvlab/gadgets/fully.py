"""Fully dynamic graph gadgets: each round encodes one vector pair as a
burst of updates, asks few queries, decodes the product bit, and resets
the structure (counted inverse ops or an uncounted snapshot restore)."""

from __future__ import annotations

from typing import Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector
from ..dynoracles import (
    ColorDistanceOracle,
    DFailureOracle,
    DistanceOracle,
    FaultPlan,
    SubgraphConnectivityOracle,
    TriangleOracle,
)
from ..dynoracles.graphs import DynGraph
from .gm import gm_graph
from .runs import SNAPSHOT, UNDO, GadgetConfig, GadgetRun, check_pairs, expect

Pairs = Sequence[tuple[BoolVector, BoolVector]]


def _config(config: Optional[GadgetConfig]) -> GadgetConfig:
    return config if config is not None else GadgetConfig()


def st_subconn_gadget(matrix: BoolMatrix, pairs: Pairs,
                      config: Optional[GadgetConfig] = None,
                      fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Vertex-toggle connectivity: t touches all of L, s touches all of R;
    a round turns off the zero positions of (u, v) and asks once whether
    s and t connect."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=2)
    s, t = n1 + n2, n1 + n2 + 1
    for i in range(n1):
        g.add_edge(t, i)
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = SubgraphConnectivityOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        offs = [i for i in range(n1) if not u.get(i)]
        offs += [n1 + j for j in range(n2) if not v.get(j)]
        for vertex in offs:
            oracle.turn_off(vertex)
        recovered.append(1 if oracle.connected(s, t) else 0)
        if cfg.undo_mode == UNDO:
            for vertex in offs:
                oracle.turn_on(vertex)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = (n1 + n2) * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="st-subconn", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds,
        undo_mode=cfg.undo_mode,
    )
    run.check()
    return run


def _st_distance_graph(matrix: BoolMatrix) -> tuple[DynGraph, int, int]:
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=2)
    s, t = n1 + n2, n1 + n2 + 1
    for i in range(n1):
        g.add_edge(t, i)
    for j in range(n2):
        g.add_edge(n1 + j, s)
    return g, s, t


def st_sp_3v5_gadget(matrix: BoolMatrix, pairs: Pairs,
                     config: Optional[GadgetConfig] = None,
                     fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Same topology with edge deletions; d(s, t) is exactly 3 on product
    rounds and at least 5 (or infinite) otherwise, asserted per round."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g, s, t = _st_distance_graph(matrix)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        dropped = [(t, i) for i in range(n1) if not u.get(i)]
        dropped += [(n1 + j, s) for j in range(n2) if not v.get(j)]
        for a, b in dropped:
            oracle.delete_edge(a, b)
        d = oracle.dist(s, t)
        expect(d == 3 or d is None or d >= 5,
               f"st-sp-3v5: distance {d} falls in the forbidden gap")
        recovered.append(1 if d == 3 else 0)
        if cfg.undo_mode == UNDO:
            for a, b in dropped:
                oracle.insert_edge(a, b)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = (n1 + n2) * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="st-sp-3v5", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds,
        undo_mode=cfg.undo_mode,
    )
    run.check()
    return run


def triangle_gadget(matrix: BoolMatrix, pairs: Pairs,
                    config: Optional[GadgetConfig] = None,
                    fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Hub vertex s adjacent to all of L and R; a triangle through s needs
    one surviving spoke pair plus a matrix edge.  Any triangle in this
    graph passes through s, which is cross-checked outside the counters."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=1)
    s = n1 + n2
    for i in range(n1):
        g.add_edge(s, i)
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = TriangleOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        dropped = [(s, i) for i in range(n1) if not u.get(i)]
        dropped += [(n1 + j, s) for j in range(n2) if not v.get(j)]
        for a, b in dropped:
            oracle.delete_edge(a, b)
        at_s = oracle.has_triangle_at(s)
        expect(oracle.scan_triangle_uncounted() == at_s,
               "triangle: global existence disagrees with the hub query")
        recovered.append(1 if at_s else 0)
        if cfg.undo_mode == UNDO:
            for a, b in dropped:
                oracle.insert_edge(a, b)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = (n1 + n2) * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="triangle", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds,
        undo_mode=cfg.undo_mode,
    )
    run.check()
    return run


def ss_subconn_gadget(matrix: BoolMatrix, pairs: Pairs,
                      config: Optional[GadgetConfig] = None,
                      fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Trade-off family: only s touches R; a round turns off the zero
    positions of v, then probes connectivity from s toward each l_i with
    u_i = 1 (at most n1 single-source queries)."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=1)
    s = n1 + n2
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = SubgraphConnectivityOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        offs = [n1 + j for j in range(n2) if not v.get(j)]
        for vertex in offs:
            oracle.turn_off(vertex)
        bit = 0
        for i in u.support():
            if oracle.connected_from(s, i):
                bit = 1
                break
        recovered.append(bit)
        if cfg.undo_mode == UNDO:
            for vertex in offs:
                oracle.turn_on(vertex)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = n2 * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="ss-subconn", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds * n1,
        undo_mode=cfg.undo_mode,
        details={"delta": str(cfg.delta)},
    )
    run.check()
    return run


def ss_sp_2v4_gadget(matrix: BoolMatrix, pairs: Pairs,
                     config: Optional[GadgetConfig] = None,
                     fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Distance flavor of the trade-off family: delete (s, r_j) for zero
    v_j, then d(s, l_i) is 2 for some queried witness row or at least 4
    everywhere, asserted per probe."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=1)
    s = n1 + n2
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        dropped = [(n1 + j, s) for j in range(n2) if not v.get(j)]
        for a, b in dropped:
            oracle.delete_edge(a, b)
        bit = 0
        for i in u.support():
            d = oracle.dist(s, i)
            expect(d == 2 or d is None or d >= 4,
                   f"ss-sp-2v4: distance {d} falls in the forbidden gap")
            if d == 2:
                bit = 1
                break
        recovered.append(bit)
        if cfg.undo_mode == UNDO:
            for a, b in dropped:
                oracle.insert_edge(a, b)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = n2 * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="ss-sp-2v4", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds * n1,
        undo_mode=cfg.undo_mode,
        details={"delta": str(cfg.delta)},
    )
    run.check()
    return run


L_COLOR = 1
R_COLOR = 2


def color_oracle_gadget(matrix: BoolMatrix, pairs: Pairs,
                        config: Optional[GadgetConfig] = None,
                        fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Vertex-color distances: L starts in the probe color, a round
    recolors the zero positions of u away, then each r_j with v_j = 1 asks
    for its distance to the probe color (1 on witnesses, else >= 3)."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix)
    colors = [L_COLOR] * n1 + [R_COLOR] * n2
    oracle = ColorDistanceOracle(g, colors)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    recovered = []
    for u, v in pairs:
        recolored = [i for i in range(n1) if not u.get(i)]
        for i in recolored:
            oracle.set_color(i, R_COLOR)
        bit = 0
        for j in v.support():
            d = oracle.dist_to_color(n1 + j, L_COLOR)
            expect(d == 1 or d is None or d >= 3,
                   f"color-oracle: distance {d} falls in the forbidden gap")
            if d == 1:
                bit = 1
                break
        recovered.append(bit)
        if cfg.undo_mode == UNDO:
            for i in recolored:
                oracle.set_color(i, L_COLOR)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = n1 * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="color-oracle", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds * n2,
        undo_mode=cfg.undo_mode,
        details={"delta": str(cfg.delta)},
    )
    run.check()
    return run


def stsp_3eps_gadget(matrix: BoolMatrix, pairs: Pairs,
                     config: Optional[GadgetConfig] = None,
                     fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Approximation-gap gadget: every matrix edge becomes a path of
    ceil(4/epsilon) edges, so d(s, t) is 2 + L on product rounds and at
    least 2 + 3L otherwise."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    sub_len = cfg.subdivision_length
    edges = [(i, j) for i in range(n1) for j in matrix.rows[i].support()]
    inner_per_edge = sub_len - 1
    total = n1 + n2 + 2 + len(edges) * inner_per_edge
    g = DynGraph(total)
    s, t = n1 + n2, n1 + n2 + 1
    nxt = n1 + n2 + 2
    for i, j in edges:
        chain = [n1 + j] + list(range(nxt, nxt + inner_per_edge)) + [i]
        nxt += inner_per_edge
        for a, b in zip(chain, chain[1:]):
            g.add_edge(a, b)
    for i in range(n1):
        g.add_edge(t, i)
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = DistanceOracle(g)
    oracle.fault_plan = fault_plan
    base = oracle.snapshot()
    lo = 2 + sub_len
    hi = 2 + 3 * sub_len
    recovered = []
    for u, v in pairs:
        dropped = [(t, i) for i in range(n1) if not u.get(i)]
        dropped += [(n1 + j, s) for j in range(n2) if not v.get(j)]
        for a, b in dropped:
            oracle.delete_edge(a, b)
        d = oracle.dist(s, t)
        expect(d == lo or d is None or d >= hi,
               f"st-sp-3eps: distance {d} outside {{{lo}}} and [{hi}, inf)")
        recovered.append(1 if d == lo else 0)
        if cfg.undo_mode == UNDO:
            for a, b in dropped:
                oracle.insert_edge(a, b)
        else:
            oracle.rollback(base)
    rounds = len(pairs)
    per_round = (n1 + n2) * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="st-sp-3eps", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds,
        undo_mode=cfg.undo_mode,
        details={"epsilon": str(cfg.epsilon), "subdivision_length": sub_len},
    )
    run.check()
    return run


def dfailure_gadget(matrix: BoolMatrix, pairs: Pairs,
                    config: Optional[GadgetConfig] = None,
                    fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Batched-failure connectivity: one batch per round turns off the
    zero positions of v (the structure rolls back to the original graph by
    definition), then s is probed toward each u-supported row."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    g = gm_graph(matrix, extra=1)
    s = n1 + n2
    for j in range(n2):
        g.add_edge(n1 + j, s)
    oracle = DFailureOracle(g, d=n2)
    oracle.fault_plan = fault_plan
    recovered = []
    for u, v in pairs:
        oracle.fail_batch(n1 + j for j in range(n2) if not v.get(j))
        bit = 0
        for i in u.support():
            if oracle.connected(s, i):
                bit = 1
                break
        recovered.append(bit)
    rounds = len(pairs)
    run = GadgetRun(
        kind="d-failure", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds, budget_queries=rounds * n1,
        undo_mode=SNAPSHOT,
        details={"d": n2},
    )
    run.check()
    return run
