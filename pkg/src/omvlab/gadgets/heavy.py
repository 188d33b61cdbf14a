"""The two reductions with nontrivial constructions: the (2 - eps)
diameter gadget over {0,1}-weighted vector graphs, and the densest
subgraph gadget over bit/row/column graphs with an exact rational
threshold."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector
from ..dynoracles import DensestSubgraphOracle, DiameterOracle, FaultPlan
from ..dynoracles.graphs import DynGraph
from .runs import SNAPSHOT, UNDO, GadgetConfig, GadgetRun, check_pairs, expect

Pairs = Sequence[tuple[BoolVector, BoolVector]]


def _config(config: Optional[GadgetConfig]) -> GadgetConfig:
    return config if config is not None else GadgetConfig()


class _VectorGraphLayout:
    """Vertex bookkeeping for the diameter gadget: one 2s-vertex vector
    graph per matrix row, one for the online vector, then hubs a and z.
    Bit p of a length-s^2 vector controls the cross edge (b_x, c_y) with
    x = p // s, y = p % s; the edge is present when the bit is 0."""

    def __init__(self, n1: int, n2: int):
        self.s = math.isqrt(n2)
        if self.s * self.s != n2:
            self.s += 1
        self.n2_padded = self.s * self.s
        self.n1 = n1
        self.a = (n1 + 1) * 2 * self.s
        self.z = self.a + 1
        self.total = self.a + 2

    def b(self, block: int, x: int) -> int:
        return block * 2 * self.s + x

    def c(self, block: int, y: int) -> int:
        return block * 2 * self.s + self.s + y

    def vec_block(self) -> int:
        return self.n1

    def block_vertices(self, block: int):
        start = block * 2 * self.s
        return range(start, start + 2 * self.s)

    def cross_edge(self, block: int, p: int) -> tuple[int, int]:
        return self.b(block, p // self.s), self.c(block, p % self.s)


def _add_vector_graph(g: DynGraph, lay: _VectorGraphLayout, block: int, bits: BoolVector) -> None:
    s = lay.s
    for x in range(s):
        for y in range(x + 1, s):
            g.add_edge(lay.b(block, x), lay.b(block, y))
            g.add_edge(lay.c(block, x), lay.c(block, y))
    for p in range(lay.n2_padded):
        if not bits.get(p):
            a, b = lay.cross_edge(block, p)
            g.add_edge(a, b)


def diameter_gadget(matrix: BoolMatrix, pairs: Pairs,
                    config: Optional[GadgetConfig] = None,
                    fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Per round the online vector graph is rewritten bit by bit; then for
    each u-supported row a stage detaches that row's vector graph from z,
    attaches it to a, adds the 0-weight matching edges, and queries the
    diameter, which is 1 when the row-vector product is 0 and exactly 2
    when it is 1."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n1, n2 = matrix.n1, matrix.n2
    lay = _VectorGraphLayout(n1, n2)
    padded = matrix.pad(n1, lay.n2_padded)
    g = DynGraph(lay.total)
    for i in range(n1):
        _add_vector_graph(g, lay, i, padded.rows[i])
    current_v = BoolVector.zeros(lay.n2_padded)
    _add_vector_graph(g, lay, lay.vec_block(), current_v)
    for w in lay.block_vertices(lay.vec_block()):
        g.add_edge(lay.a, w, 1)
    g.add_edge(lay.z, lay.a, 0)
    for i in range(n1):
        for w in lay.block_vertices(i):
            g.add_edge(lay.z, w, 0)
    oracle = DiameterOracle(g)
    oracle.fault_plan = fault_plan
    s = lay.s
    recovered = []
    stage_log: list[list[tuple[int, int]]] = []
    for u, v in pairs:
        new_v = BoolVector(lay.n2_padded, v.bits)
        for p in range(lay.n2_padded):
            if current_v.get(p) != new_v.get(p):
                a, b = lay.cross_edge(lay.vec_block(), p)
                if new_v.get(p):
                    oracle.delete_edge(a, b)
                else:
                    oracle.insert_edge(a, b, 1)
        current_v = new_v
        token = oracle.snapshot() if cfg.undo_mode == SNAPSHOT else None
        bit = 0
        stages = []
        for i in u.support():
            block = list(lay.block_vertices(i))
            for w in block:
                oracle.delete_edge(lay.z, w)
            for w in block:
                oracle.insert_edge(lay.a, w, 1)
            matching = [(lay.b(i, x), lay.b(lay.vec_block(), x)) for x in range(s)]
            matching += [(lay.c(i, y), lay.c(lay.vec_block(), y)) for y in range(s)]
            for a, b in matching:
                oracle.insert_edge(a, b, 0)
            diam = oracle.diameter()
            expect(diam in (1, 2), f"diameter: stage value {diam} outside {{1, 2}}")
            stages.append((i, diam))
            if diam == 2:
                bit = 1
            if cfg.undo_mode == UNDO:
                for a, b in matching:
                    oracle.delete_edge(a, b)
                for w in block:
                    oracle.delete_edge(lay.a, w)
                for w in block:
                    oracle.insert_edge(lay.z, w, 0)
            else:
                oracle.rollback(token)
        recovered.append(bit)
        stage_log.append(stages)
    rounds = len(pairs)
    stage_cost = 6 * s * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="diameter", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * (lay.n2_padded + n1 * stage_cost),
        budget_queries=rounds * n1,
        undo_mode=cfg.undo_mode,
        details={"side": s, "padded_columns": lay.n2_padded, "stages": stage_log},
    )
    run.check()
    return run


def densest_threshold(k: int) -> Fraction:
    return Fraction(k + 7, k + 6)


class _DensestLayout:
    """Vertices for the densest gadget on an n x n matrix with k-vertex
    bit graphs: bit graph (i, j) occupies a k-block, then 3-vertex row and
    column graphs whose first vertex is the special one."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k

    def bit_base(self, i: int, j: int) -> int:
        return (i * self.n + j) * self.k

    def special1(self, i: int, j: int) -> int:
        return self.bit_base(i, j)

    def special2(self, i: int, j: int) -> int:
        return self.bit_base(i, j) + self.k - 1

    def row_base(self, i: int) -> int:
        return self.n * self.n * self.k + 3 * i

    def col_base(self, j: int) -> int:
        return self.n * self.n * self.k + 3 * self.n + 3 * j

    @property
    def total(self) -> int:
        return self.n * self.n * self.k + 6 * self.n


def densest_gadget(matrix: BoolMatrix, pairs: Pairs,
                   config: Optional[GadgetConfig] = None,
                   fault_plan: Optional[FaultPlan] = None) -> GadgetRun:
    """Set bits become k-vertex paths strung between row and column
    graphs; a round turns the supported row/column graphs into triangles
    and asks for the densest-subgraph density, which reaches
    (k+7)/(k+6) exactly when the round has a witness (k = 6n)."""
    cfg = _config(config)
    check_pairs(matrix, pairs)
    n = max(matrix.n1, matrix.n2)
    padded = matrix.pad(n, n)
    k = 6 * n
    lay = _DensestLayout(n, k)
    g = DynGraph(lay.total)
    for i in range(n):
        for j in range(n):
            if padded.entry(i, j):
                base = lay.bit_base(i, j)
                for step in range(k - 1):
                    g.add_edge(base + step, base + step + 1)
            g.add_edge(lay.row_base(i), lay.special1(i, j))
            g.add_edge(lay.col_base(j), lay.special2(i, j))
    oracle = DensestSubgraphOracle(g)
    oracle.fault_plan = fault_plan
    base_token = oracle.snapshot() if cfg.undo_mode == SNAPSHOT else None
    threshold = densest_threshold(k)
    recovered = []
    densities = []
    for u, v in pairs:
        added = []
        for i in u.support():
            b = lay.row_base(i)
            added.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)])
        for j in v.support():
            b = lay.col_base(j)
            added.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)])
        for a, b in added:
            oracle.insert_edge(a, b)
        density = oracle.density()
        densities.append(str(density))
        recovered.append(1 if density >= threshold else 0)
        if cfg.undo_mode == UNDO:
            for a, b in added:
                oracle.delete_edge(a, b)
        else:
            oracle.rollback(base_token)
    rounds = len(pairs)
    per_round = 3 * (matrix.n1 + matrix.n2) * (2 if cfg.undo_mode == UNDO else 1)
    run = GadgetRun(
        kind="densest", rounds=rounds, recovered=recovered,
        updates_used=oracle.updates, queries_used=oracle.queries,
        budget_updates=rounds * per_round, budget_queries=rounds,
        undo_mode=cfg.undo_mode,
        details={"k": k, "threshold": str(threshold), "densities": densities},
    )
    run.check()
    return run
