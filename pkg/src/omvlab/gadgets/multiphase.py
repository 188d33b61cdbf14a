"""The three-phase single-bit protocol (preprocess the matrix, absorb a
vector, then answer individual output bits) and its composition back into
a full online product solver."""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from ..bitcore import BoolMatrix, BoolVector, DimensionError
from ..dynoracles import FaultPlan, TransitiveClosureOracle
from ..dynoracles.graphs import DynGraph
from ..engines import OmvEngine, naive_engine
from .runs import GadgetError


class MultiphaseProtocol:
    """phase1(M) once, then repeatedly phase2(v) followed by any number of
    phase3(i) probes for single bits of the current product."""

    # declared per-phase operation allowances for the composition bound
    k2: int = 1
    k3: int = 1

    def phase1(self, matrix: BoolMatrix) -> None:
        raise NotImplementedError

    def phase2(self, v: BoolVector) -> None:
        raise NotImplementedError

    def phase3(self, i: int) -> int:
        raise NotImplementedError

    def ops_used(self) -> int:
        """Structure operations spent after phase1 (0 when untracked)."""
        return 0


class EngineMultiphase(MultiphaseProtocol):
    """Backed by any online Mv engine: phase2 runs one engine round and
    phase3 reads single bits off the cached product."""

    def __init__(self, engine_factory: Callable[[], OmvEngine] = naive_engine):
        self.engine = engine_factory()
        self._product: Optional[BoolVector] = None
        self._ops = 0

    def phase1(self, matrix: BoolMatrix) -> None:
        self.engine.preprocess(matrix)

    def phase2(self, v: BoolVector) -> None:
        self._product = self.engine.next(v)
        self._ops += 1

    def phase3(self, i: int) -> int:
        if self._product is None:
            raise GadgetError("phase3 before phase2")
        self._ops += 1
        return self._product.get(i)

    def ops_used(self) -> int:
        return self._ops


class ReachabilityMultiphase(MultiphaseProtocol):
    """Backed by the directed-reachability oracle: phase1 builds the
    bipartite reachability graph plus a probe vertex, phase2 rewires the
    probe's out-edges to the vector's support (at most 2*n2 counted
    updates), and phase3 asks one reachability query per bit."""

    def __init__(self, fault_plan: Optional[FaultPlan] = None):
        self.oracle: Optional[TransitiveClosureOracle] = None
        self.fault_plan = fault_plan

    def phase1(self, matrix: BoolMatrix) -> None:
        n1, n2 = matrix.n1, matrix.n2
        self.n1, self.n2 = n1, n2
        self.k2 = 2 * n2
        self.k3 = 1
        g = DynGraph(n1 + n2 + 1, directed=True)
        for i in range(n1):
            for j in matrix.rows[i].support():
                g.add_edge(n1 + j, i)
        self.probe = n1 + n2
        self._wired: list[int] = []
        self.oracle = TransitiveClosureOracle(g)
        self.oracle.fault_plan = self.fault_plan

    def phase2(self, v: BoolVector) -> None:
        if v.n != self.n2:
            raise DimensionError(f"vector length {v.n} != {self.n2}")
        for j in self._wired:
            self.oracle.delete_edge(self.probe, self.n1 + j)
        self._wired = list(v.support())
        for j in self._wired:
            self.oracle.insert_edge(self.probe, self.n1 + j)

    def phase3(self, i: int) -> int:
        return 1 if self.oracle.reachable(self.probe, i) else 0

    def ops_used(self) -> int:
        return self.oracle.updates + self.oracle.queries


def multiphase_adapter(engine_factory: Callable[[], OmvEngine] = naive_engine) -> EngineMultiphase:
    return EngineMultiphase(engine_factory)


def multiphase_omv_solver(mp: MultiphaseProtocol, matrix: BoolMatrix,
                          vectors: Sequence[BoolVector]) -> tuple[list[BoolVector], dict]:
    """Runs the full product stream through a three-phase solver: one
    phase2 per vector and one phase3 probe per output bit, so n3 phase-2
    instances and n1*n3 phase-3 probes; the structure-operation total must
    stay within k2*n3 + k3*n1*n3."""
    mp.phase1(matrix)
    n1 = matrix.n1
    outputs = []
    phase2_count = 0
    phase3_count = 0
    for v in vectors:
        mp.phase2(v)
        phase2_count += 1
        out = BoolVector.zeros(n1)
        for i in range(n1):
            if mp.phase3(i):
                out.set_bit(i, 1)
            phase3_count += 1
        outputs.append(out)
    n3 = len(vectors)
    budget_ops = mp.k2 * n3 + mp.k3 * n1 * n3
    ops = mp.ops_used()
    if ops > budget_ops:
        raise GadgetError(
            f"multiphase composition spent {ops} operations, allowed {budget_ops}")
    info = {
        "phase2_count": phase2_count,
        "phase3_count": phase3_count,
        "ops_used": ops,
        "budget_ops": budget_ops,
        "k2": mp.k2,
        "k3": mp.k3,
    }
    return outputs, info
