"""Online Mv engines: preprocess a matrix once, then serve a vector stream."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bitcore import BoolMatrix, BoolVector, DimensionError, _mask

MAX_GROUP_BITS = 24


@dataclass
class EngineStats:
    preprocess_ns: int = 0
    per_vector_ns: list[int] = field(default_factory=list)
    table_bytes: int = 0

    @property
    def total_ns(self) -> int:
        return sum(self.per_vector_ns)


class OmvEngine:
    """Base engine: `preprocess(M)` once, then `next(v)` per round.

    `next` is deterministic given (M, v) unless the engine is explicitly
    randomized; `reset_to_preprocessed` restores the state immediately
    after preprocessing (including any RNG state).
    """

    kind = "base"

    def __init__(self) -> None:
        self.matrix: Optional[BoolMatrix] = None
        self._stats = EngineStats()

    def preprocess(self, matrix: BoolMatrix) -> None:
        start = time.perf_counter_ns()
        self.matrix = matrix
        self._prepare(matrix)
        self._stats = EngineStats(preprocess_ns=time.perf_counter_ns() - start,
                                  table_bytes=self._table_bytes())

    def next(self, v: BoolVector) -> BoolVector:
        if self.matrix is None:
            raise RuntimeError("engine not preprocessed")
        if v.n != self.matrix.n2:
            raise DimensionError(f"vector length {v.n} != column count {self.matrix.n2}")
        start = time.perf_counter_ns()
        out = self._compute(v)
        self._stats.per_vector_ns.append(time.perf_counter_ns() - start)
        return out

    def stats(self) -> EngineStats:
        return self._stats

    def reset_to_preprocessed(self) -> None:
        self._stats.per_vector_ns.clear()
        self._reset()

    # subclass hooks
    def _prepare(self, matrix: BoolMatrix) -> None:
        pass

    def _compute(self, v: BoolVector) -> BoolVector:
        raise NotImplementedError

    def _reset(self) -> None:
        pass

    def _table_bytes(self) -> int:
        return 0


class NaiveEngine(OmvEngine):
    """Per-vector row-AND-nonzero scan; the correctness baseline."""

    kind = "naive"

    def _compute(self, v: BoolVector) -> BoolVector:
        m = self.matrix
        bits = 0
        vb = v.bits
        for i, r in enumerate(m.rows):
            if r.bits & vb:
                bits |= 1 << i
        return BoolVector(m.n1, bits)


DEFAULT_TABLE_BUDGET = 16 << 20


def default_group_bits(n2: int, n1: Optional[int] = None) -> int:
    """max(1, ceil(log2 n2)) capped at 16; when the row count is known the
    width backs off until the table fits DEFAULT_TABLE_BUDGET, because a
    table that spills out of cache loses the per-query win it pays for."""
    b = min(16, max(1, math.ceil(math.log2(n2)) if n2 > 1 else 1))
    if n1 is not None:
        row_bytes = ((n1 + 63) // 64) * 8
        while b > 1 and -(-n2 // b) * (1 << b) * row_bytes > DEFAULT_TABLE_BUDGET:
            b -= 1
    return b


class LookupEngine(OmvEngine):
    """Column-group lookup tables: columns are split into groups of
    `group_bits` columns; for each group every OR-combination of its
    columns is precomputed, so one table row is ORed per group per query.
    """

    kind = "lookup"

    def __init__(self, group_bits: Optional[int] = None):
        super().__init__()
        if group_bits is not None and not 1 <= group_bits <= MAX_GROUP_BITS:
            raise ValueError(f"group_bits must be in [1, {MAX_GROUP_BITS}], got {group_bits}")
        self.group_bits = group_bits
        self._tables: list[list[int]] = []
        self._widths: list[int] = []

    def _prepare(self, matrix: BoolMatrix) -> None:
        b = (self.group_bits if self.group_bits is not None
             else default_group_bits(matrix.n2, matrix.n1))
        self._b = b
        self._tables = []
        self._widths = []
        for start in range(0, matrix.n2, b):
            width = min(b, matrix.n2 - start)
            cols = [0] * width
            for i, row in enumerate(matrix.rows):
                chunk = (row.bits >> start) & _mask(width)
                ibit = 1 << i
                while chunk:
                    low = chunk & -chunk
                    cols[low.bit_length() - 1] |= ibit
                    chunk ^= low
            # table allocation failure surfaces as MemoryError (resource error)
            table = [0] * (1 << width)
            for s in range(1, 1 << width):
                low = s & -s
                table[s] = table[s ^ low] | cols[low.bit_length() - 1]
            self._tables.append(table)
            self._widths.append(width)

    def _compute(self, v: BoolVector) -> BoolVector:
        m = self.matrix
        b = self._b
        bits = 0
        vb = v.bits
        for g, table in enumerate(self._tables):
            idx = (vb >> (g * b)) & _mask(self._widths[g])
            bits |= table[idx]
        return BoolVector(m.n1, bits)

    def _table_bytes(self) -> int:
        words_per_row = (self.matrix.n1 + 63) // 64
        return sum((1 << w) * words_per_row * 8 for w in self._widths)


def _tile_starts(total: int, size: int) -> list[int]:
    """Start offsets of size-`size` tiles covering [0, total); when `size`
    does not divide `total` the final tile is shifted back to overlap the
    previous one instead of shrinking."""
    starts = list(range(0, total - size + 1, size))
    if not starts:
        starts = [0]
    if starts[-1] + size < total:
        starts.append(total - size)
    return starts


class TiledEngine(OmvEngine):
    """Cuts M into k1 x k2 blocks, each served by an inner engine
    instance; per-query the block products are ORed back per row block."""

    kind = "tiled"

    def __init__(self, inner_factory: Callable[[], OmvEngine], k1: int, k2: int):
        super().__init__()
        self.inner_factory = inner_factory
        self.k1 = k1
        self.k2 = k2
        self._grid: list[list[OmvEngine]] = []

    def _prepare(self, matrix: BoolMatrix) -> None:
        if not 1 <= self.k1 <= matrix.n1:
            raise ValueError(f"k1={self.k1} outside [1, {matrix.n1}]")
        if not 1 <= self.k2 <= matrix.n2:
            raise ValueError(f"k2={self.k2} outside [1, {matrix.n2}]")
        self._row_starts = _tile_starts(matrix.n1, self.k1)
        self._col_starts = _tile_starts(matrix.n2, self.k2)
        self._grid = []
        for r0 in self._row_starts:
            row_engines = []
            for c0 in self._col_starts:
                inner = self.inner_factory()
                inner.preprocess(matrix.block((r0, r0 + self.k1), (c0, c0 + self.k2)))
                row_engines.append(inner)
            self._grid.append(row_engines)

    def _compute(self, v: BoolVector) -> BoolVector:
        m = self.matrix
        vblocks = [v.slice_(c0, c0 + self.k2) for c0 in self._col_starts]
        bits = 0
        for x, r0 in enumerate(self._row_starts):
            acc = 0
            for y in range(len(self._col_starts)):
                acc |= self._grid[x][y].next(vblocks[y]).bits
            # overlapping boundary tiles re-OR identical bits, which is harmless
            bits |= acc << r0
        return BoolVector(m.n1, bits)

    def _reset(self) -> None:
        for row_engines in self._grid:
            for inner in row_engines:
                inner.reset_to_preprocessed()

    def _table_bytes(self) -> int:
        return sum(inner.stats().table_bytes for row in self._grid for inner in row)


class MajorityEngine(OmvEngine):
    """Recomputes each product `repetitions` times through the inner
    engine and takes the entrywise majority; `repetitions` must be odd."""

    kind = "majority"

    def __init__(self, inner_factory: Callable[[], OmvEngine], repetitions: int):
        super().__init__()
        if repetitions < 1 or repetitions % 2 == 0:
            raise ValueError(f"repetitions must be odd and >= 1, got {repetitions}")
        self.repetitions = repetitions
        self.inner = inner_factory()

    def _prepare(self, matrix: BoolMatrix) -> None:
        self.inner.preprocess(matrix)

    def _compute(self, v: BoolVector) -> BoolVector:
        r = self.repetitions
        if r == 1:
            return self.inner.next(v)
        counts = [0] * self.matrix.n1
        for _ in range(r):
            for i in self.inner.next(v).support():
                counts[i] += 1
        bits = 0
        threshold = r // 2
        for i, c in enumerate(counts):
            if c > threshold:
                bits |= 1 << i
        return BoolVector(self.matrix.n1, bits)

    def _reset(self) -> None:
        self.inner.reset_to_preprocessed()

    def _table_bytes(self) -> int:
        return self.inner.stats().table_bytes


class UnreliableEngine(OmvEngine):
    """Randomized wrapper that flips each output bit with a fixed
    probability; exists to exercise the majority wrapper and the
    reset-replay contract for randomized engines."""

    kind = "unreliable"

    def __init__(self, inner_factory: Callable[[], OmvEngine], flip_probability: float, seed: int):
        super().__init__()
        if not 0 <= flip_probability < 1:
            raise ValueError("flip probability must be in [0, 1)")
        self.inner = inner_factory()
        self.flip_probability = flip_probability
        self.seed = seed
        self._rng = random.Random(seed)
        self._rng_state = None

    def _prepare(self, matrix: BoolMatrix) -> None:
        self.inner.preprocess(matrix)
        self._rng = random.Random(self.seed)
        self._rng_state = self._rng.getstate()

    def _compute(self, v: BoolVector) -> BoolVector:
        out = self.inner.next(v)
        bits = out.bits
        p = self.flip_probability
        for i in range(out.n):
            if self._rng.random() < p:
                bits ^= 1 << i
        return BoolVector(out.n, bits)

    def _reset(self) -> None:
        self.inner.reset_to_preprocessed()
        self._rng.setstate(self._rng_state)


def naive_engine() -> OmvEngine:
    return NaiveEngine()


def lookup_engine(group_bits: Optional[int] = None) -> OmvEngine:
    return LookupEngine(group_bits)


def tiled_engine(inner_factory: Callable[[], OmvEngine], k1: int, k2: int) -> OmvEngine:
    return TiledEngine(inner_factory, k1, k2)


def majority_vote(inner_factory: Callable[[], OmvEngine], repetitions: int) -> OmvEngine:
    return MajorityEngine(inner_factory, repetitions)


def parse_engine_spec(spec: str) -> Callable[[], OmvEngine]:
    """Engine factory from a name string.

    Grammar: "naive" | "lookup[:b]" | "tiled:k1,k2:<inner>"
           | "majority:r:<inner>"
    """
    spec = spec.strip()
    if spec == "naive":
        return naive_engine
    if spec == "lookup":
        return lookup_engine
    if spec.startswith("lookup:"):
        b = int(spec.split(":", 1)[1])
        return lambda: LookupEngine(b)
    if spec.startswith("tiled:"):
        _, shape, inner = spec.split(":", 2)
        k1_s, k2_s = shape.split(",")
        k1, k2 = int(k1_s), int(k2_s)
        inner_factory = parse_engine_spec(inner)
        return lambda: TiledEngine(inner_factory, k1, k2)
    if spec.startswith("majority:"):
        _, reps, inner = spec.split(":", 2)
        r = int(reps)
        inner_factory = parse_engine_spec(inner)
        return lambda: MajorityEngine(inner_factory, r)
    raise ValueError(f"unknown engine spec {spec!r}")
