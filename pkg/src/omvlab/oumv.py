"""Vector-matrix-vector machinery: witness listing via binary search,
rebuilding full products from a single-bit oracle, and the equivalent
set/graph/formula query problems."""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

from .bitcore import (
    BoolMatrix,
    BoolVector,
    DimensionError,
    lift_vectors,
    mat_vec,
    symmetrize,
    vec_mat_vec,
)
from .dynoracles.base import CountedOracle
from .engines import OmvEngine, naive_engine


class OuMvOracle(CountedOracle):
    """Answers single bits u^T M v for a preprocessed matrix.  Queries are
    counted; rollback restores the post-preprocess state (the counters, as
    always, keep running)."""

    def __init__(self, matrix: BoolMatrix):
        super().__init__()
        self.matrix = matrix

    def query(self, u: BoolVector, v: BoolVector) -> int:
        if u.n != self.matrix.n1 or v.n != self.matrix.n2:
            raise DimensionError(
                f"query shape {u.n}/{v.n} does not match matrix {self.matrix.n1}x{self.matrix.n2}"
            )
        return self._count_query(self._answer(u, v))

    def queries_used(self) -> int:
        return self.queries

    def _answer(self, u: BoolVector, v: BoolVector) -> int:
        raise NotImplementedError

    def _state(self):
        return None

    def _restore(self, state) -> None:
        pass


class MatrixOuMvOracle(OuMvOracle):
    """Direct evaluation; the plain reference oracle."""

    def _answer(self, u: BoolVector, v: BoolVector) -> int:
        return vec_mat_vec(u, self.matrix, v)


class EngineOuMvOracle(OuMvOracle):
    """Backed by any online Mv engine: one engine round per query, then a
    masked nonzero test against u."""

    def __init__(self, matrix: BoolMatrix, engine_factory: Callable[[], OmvEngine] = naive_engine):
        super().__init__(matrix)
        self.engine = engine_factory()
        self.engine.preprocess(matrix)

    def _answer(self, u: BoolVector, v: BoolVector) -> int:
        return 1 if self.engine.next(v).bits & u.bits else 0

    def _state(self):
        return None

    def _restore(self, state) -> None:
        self.engine.reset_to_preprocessed()


class WitnessSet:
    """Sorted row indices i with u_i AND (Mv)_i = 1 for one vector pair."""

    __slots__ = ("indices",)

    def __init__(self, indices: Iterable[int]):
        self.indices = tuple(sorted(set(indices)))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in set(self.indices)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WitnessSet):
            return self.indices == other.indices
        return NotImplemented

    def __repr__(self) -> str:
        return f"WitnessSet({list(self.indices)})"


def witness_budget(n1: int, witnesses: int) -> int:
    """Query allowance for listing `witnesses` witnesses: one existence
    query plus, per witness, a binary search and a re-check.  The constant
    is ours: 1 + w * (2*ceil(log2 n1) + 1)."""
    log_term = math.ceil(math.log2(n1)) if n1 > 1 else 0
    return 1 + witnesses * (2 * log_term + 1)


def _masked(u: BoolVector, index_bits: int) -> BoolVector:
    return BoolVector(u.n, u.bits & index_bits)


def list_witnesses(oracle: OuMvOracle, u: BoolVector, v: BoolVector) -> WitnessSet:
    """All witnesses of (u, v), found one at a time by binary search on
    masked copies of u; the oracle is consulted only through single-bit
    queries."""
    n1 = oracle.matrix.n1
    if u.n != n1 or v.n != oracle.matrix.n2:
        raise DimensionError("witness listing needs oracle-compatible vector shapes")
    found: list[int] = []
    remaining = (1 << n1) - 1
    while True:
        if not oracle.query(_masked(u, remaining), v):
            return WitnessSet(found)
        lo_bits = remaining
        size = lo_bits.bit_count()
        while size > 1:
            # keep the lower half, sized floor(size / 2)
            half = size // 2
            picked = 0
            rest = lo_bits
            for _ in range(half):
                low = rest & -rest
                picked |= low
                rest ^= low
            if oracle.query(_masked(u, picked), v):
                lo_bits = picked
                size = half
            else:
                lo_bits = rest
                size -= half
        witness = lo_bits.bit_length() - 1
        found.append(witness)
        remaining &= ~lo_bits


def omv_via_oumv(
    oracle_factory: Callable[[BoolMatrix], OuMvOracle],
    matrix: BoolMatrix,
    vectors: Sequence[BoolVector],
    k1: int,
    k2: int,
) -> tuple[list[BoolVector], dict]:
    """Computes the full product stream using only single-bit oracles on
    k1 x k2 blocks: per block row the left vector starts all-ones and
    found witnesses are zeroed before moving to the next column block.

    Blocks partition the matrix exactly (trailing blocks are smaller when
    sizes do not divide) so witness sets stay disjoint per round; returns
    the outputs plus counters, including the total witness count which is
    at most n1 per round.
    """
    n1, n2 = matrix.n1, matrix.n2
    if not 1 <= k1 <= n1 or not 1 <= k2 <= n2:
        raise DimensionError(f"block shape {k1}x{k2} invalid for {n1}x{n2}")
    row_cuts = list(range(0, n1, k1)) + [n1]
    col_cuts = list(range(0, n2, k2)) + [n2]
    oracles = {}
    for xi in range(len(row_cuts) - 1):
        for yi in range(len(col_cuts) - 1):
            block = matrix.block((row_cuts[xi], row_cuts[xi + 1]), (col_cuts[yi], col_cuts[yi + 1]))
            oracles[(xi, yi)] = oracle_factory(block)
    outputs = []
    total_witnesses = 0
    queries = 0
    max_round_witnesses = 0
    for v in vectors:
        if v.n != n2:
            raise DimensionError(f"vector length {v.n} != {n2}")
        vblocks = [v.slice_(col_cuts[yi], col_cuts[yi + 1]) for yi in range(len(col_cuts) - 1)]
        out_bits = 0
        round_witnesses = 0
        for xi in range(len(row_cuts) - 1):
            height = row_cuts[xi + 1] - row_cuts[xi]
            u = BoolVector.ones(height)
            block_bits = 0
            for yi in range(len(col_cuts) - 1):
                wset = list_witnesses(oracles[(xi, yi)], u, vblocks[yi])
                for i in wset:
                    block_bits |= 1 << i
                    u.set_bit(i, 0)
                round_witnesses += len(wset)
            out_bits |= block_bits << row_cuts[xi]
        outputs.append(BoolVector(n1, out_bits))
        total_witnesses += round_witnesses
        max_round_witnesses = max(max_round_witnesses, round_witnesses)
    queries = sum(oracle.queries for oracle in oracles.values())
    info = {
        "total_witnesses": total_witnesses,
        "max_round_witnesses": max_round_witnesses,
        "queries": queries,
        "blocks": (len(row_cuts) - 1, len(col_cuts) - 1),
    }
    return outputs, info


# Query problems equivalent to single-bit products.  Each adapter has an
# engine-backed route and a direct-scan route so the equivalence is a
# testable equality.

def indicator(n: int, subset: Iterable[int]) -> BoolVector:
    v = BoolVector.zeros(n)
    for x in subset:
        v.set_bit(x, 1)
    return v


class GraphQueryAdapter:
    """Independent-set / vertex-cover / edge / dominating-set queries over
    a fixed undirected graph, answered through matrix-vector products on
    its adjacency matrix."""

    def __init__(self, adjacency: BoolMatrix,
                 engine_factory: Callable[[], OmvEngine] = naive_engine):
        if adjacency.n1 != adjacency.n2:
            raise DimensionError("adjacency matrix must be square")
        for i in range(adjacency.n1):
            if adjacency.entry(i, i):
                raise DimensionError("self-loops are not allowed")
            for j in adjacency.rows[i].support():
                if not adjacency.entry(j, i):
                    raise DimensionError("adjacency matrix must be symmetric")
        self.n = adjacency.n1
        self.adjacency = adjacency
        self.engine = engine_factory()
        self.engine.preprocess(adjacency)
        self.lifted = EngineOuMvOracle(symmetrize(adjacency), engine_factory)

    def independent_set(self, subset: Iterable[int]) -> bool:
        """True iff no edge lies inside the subset: v^T M v = 0."""
        v = indicator(self.n, subset)
        return (self.engine.next(v).bits & v.bits) == 0

    def independent_set_direct(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        v = indicator(self.n, s)
        return all((self.adjacency.rows[i].bits & v.bits) == 0 for i in s)

    def vertex_cover(self, subset: Iterable[int]) -> bool:
        """True iff every edge touches the subset, i.e. the complement is
        independent."""
        s = set(subset)
        return self.independent_set(x for x in range(self.n) if x not in s)

    def vertex_cover_direct(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return self.independent_set_direct(x for x in range(self.n) if x not in s)

    def edge_between(self, left: Iterable[int], right: Iterable[int]) -> bool:
        """True iff some edge joins the two subsets; answered as x^T M' y
        on the symmetrized lift."""
        u = indicator(self.n, left)
        v = indicator(self.n, right)
        _, x, y = lift_vectors(u, v)
        return bool(self.lifted.query(x, y))

    def edge_between_direct(self, left: Iterable[int], right: Iterable[int]) -> bool:
        lset = set(left)
        rbits = indicator(self.n, right).bits
        return any(self.adjacency.rows[a].bits & rbits for a in lset)

    def dominating_set(self, subset: Iterable[int]) -> bool:
        """True iff Mv OR v is all-ones, via one product."""
        v = indicator(self.n, subset)
        covered = self.engine.next(v).bits | v.bits
        return covered == (1 << self.n) - 1

    def dominating_set_direct(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        for x in range(self.n):
            if x in s:
                continue
            if not any(self.adjacency.entry(x, y) for y in s):
                return False
        return True


class Cnf2Formula:
    """A 2-CNF over 1-based variables; clauses are pairs of signed
    indices.  A clause that repeats one literal is a unit constraint."""

    def __init__(self, n_vars: int, clauses: Sequence[tuple[int, int]]):
        self.n_vars = n_vars
        self.clauses = []
        for a, b in clauses:
            for lit in (a, b):
                if lit == 0 or abs(lit) > n_vars:
                    raise ValueError(f"literal {lit} out of range")
            self.clauses.append((a, b))

    @classmethod
    def from_text(cls, text: str, n_vars: int | None = None) -> "Cnf2Formula":
        """One clause per line: two signed 1-based variable indices."""
        clauses = []
        seen = 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected two literals")
            a, b = int(parts[0]), int(parts[1])
            if a == 0 or b == 0:
                raise ValueError(f"line {lineno}: 0 is not a literal")
            clauses.append((a, b))
            seen = max(seen, abs(a), abs(b))
        return cls(n_vars if n_vars is not None else seen, clauses)

    def to_text(self) -> str:
        return "\n".join(f"{a} {b}" for a, b in self.clauses) + ("\n" if self.clauses else "")

    def evaluate(self, assignment: BoolVector) -> bool:
        """Direct scan of all clauses."""
        if assignment.n != self.n_vars:
            raise DimensionError("assignment length != variable count")

        def lit_true(lit: int) -> bool:
            val = assignment.get(abs(lit) - 1)
            return bool(val) if lit > 0 else not val

        return all(lit_true(a) or lit_true(b) for a, b in self.clauses)


class Cnf2QueryAdapter:
    """Answers 2-CNF assignment queries through independent-set queries on
    the conflict graph: one vertex per literal, an edge joining the two
    literals of each clause; the formula holds iff the set of falsified
    literals is independent (and all unit constraints hold)."""

    def __init__(self, formula: Cnf2Formula,
                 engine_factory: Callable[[], OmvEngine] = naive_engine):
        self.formula = formula
        n = formula.n_vars
        self.units: list[int] = []
        adjacency = BoolMatrix.zeros(2 * n, 2 * n)
        rows = [r.bits for r in adjacency.rows]
        for a, b in formula.clauses:
            if a == b:
                self.units.append(a)
                continue
            ia, ib = self._literal_vertex(a), self._literal_vertex(b)
            rows[ia] |= 1 << ib
            rows[ib] |= 1 << ia
        matrix = BoolMatrix(BoolVector(2 * n, bits) for bits in rows)
        self.graph = GraphQueryAdapter(matrix, engine_factory)

    def _literal_vertex(self, lit: int) -> int:
        return abs(lit) - 1 if lit > 0 else self.formula.n_vars + abs(lit) - 1

    def _falsified(self, assignment: BoolVector) -> list[int]:
        out = []
        for var in range(self.formula.n_vars):
            if assignment.get(var):
                out.append(self.formula.n_vars + var)  # negative literal false
            else:
                out.append(var)  # positive literal false
        return out

    def satisfied(self, assignment: BoolVector) -> bool:
        if assignment.n != self.formula.n_vars:
            raise DimensionError("assignment length != variable count")

        def lit_true(lit: int) -> bool:
            val = assignment.get(abs(lit) - 1)
            return bool(val) if lit > 0 else not val

        if not all(lit_true(u) for u in self.units):
            return False
        return self.graph.independent_set(self._falsified(assignment))
