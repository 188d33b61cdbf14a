"""Non-graph reference oracles: an intersection-closed set family, zero
prefix sums over an integer array, and row/column-incremented matrix max."""

from __future__ import annotations

from typing import Iterable, Sequence

from .base import CountedOracle, OracleError


class PaghOracle(CountedOracle):
    """A growing family of subsets of [universe]; the update inserts the
    intersection of two existing sets, the query tests membership."""

    def __init__(self, universe: int, sets: Iterable[int]):
        super().__init__()
        if universe < 1:
            raise OracleError("universe must be nonempty")
        self.universe = universe
        mask = (1 << universe) - 1
        self.sets: list[int] = [s & mask for s in sets]

    @classmethod
    def from_iterables(cls, universe: int, sets: Iterable[Iterable[int]]) -> "PaghOracle":
        packed = []
        for s in sets:
            bits = 0
            for x in s:
                if not 0 <= x < universe:
                    raise OracleError(f"element {x} outside universe [0, {universe})")
                bits |= 1 << x
            packed.append(bits)
        return cls(universe, packed)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < len(self.sets):
            raise OracleError(f"set index {i} out of range")

    def insert_intersection(self, i: int, j: int) -> int:
        """Appends sets[i] & sets[j]; returns the new set's index."""
        self._check_index(i)
        self._check_index(j)
        self.sets.append(self.sets[i] & self.sets[j])
        self._count_update()
        return len(self.sets) - 1

    def member(self, i: int, element: int) -> bool:
        self._check_index(i)
        if not 0 <= element < self.universe:
            raise OracleError(f"element {element} outside universe [0, {self.universe})")
        return self._count_query(bool((self.sets[i] >> element) & 1))

    def _state(self):
        return list(self.sets)

    def _restore(self, state) -> None:
        self.sets = state


class ZeroPrefixOracle(CountedOracle):
    """Integer array with point assignment updates and the query "does
    some prefix sum equal zero", answered by a linear scan."""

    def __init__(self, array: Sequence[int]):
        super().__init__()
        if not array:
            raise OracleError("array must be nonempty")
        self.array = list(array)

    def set(self, i: int, x: int) -> None:
        if not 0 <= i < len(self.array):
            raise OracleError(f"index {i} out of range")
        self.array[i] = x
        self._count_update()

    def get(self, i: int) -> int:
        if not 0 <= i < len(self.array):
            raise OracleError(f"index {i} out of range")
        return self.array[i]

    def has_zero_prefix(self) -> bool:
        total = 0
        answer = False
        for x in self.array:
            total += x
            if total == 0:
                answer = True
                break
        return self._count_query(answer)

    def _state(self):
        return list(self.array)

    def _restore(self, state) -> None:
        self.array = state


class EricksonOracle(CountedOracle):
    """Integer matrix under whole-row/whole-column increments with a
    maximum query; cell (i, j) is base[i][j] + row_off[i] + col_off[j],
    and the max scans all cells."""

    def __init__(self, base: Sequence[Sequence[int]]):
        super().__init__()
        self.base = [list(row) for row in base]
        if not self.base or not self.base[0]:
            raise OracleError("matrix must be nonempty")
        width = len(self.base[0])
        if any(len(row) != width for row in self.base):
            raise OracleError("ragged matrix")
        self.row_off = [0] * len(self.base)
        self.col_off = [0] * width

    def inc_row(self, i: int) -> None:
        if not 0 <= i < len(self.row_off):
            raise OracleError(f"row {i} out of range")
        self.row_off[i] += 1
        self._count_update()

    def inc_col(self, j: int) -> None:
        if not 0 <= j < len(self.col_off):
            raise OracleError(f"column {j} out of range")
        self.col_off[j] += 1
        self._count_update()

    def value(self, i: int, j: int) -> int:
        return self.base[i][j] + self.row_off[i] + self.col_off[j]

    def max(self) -> int:
        best = None
        for i, row in enumerate(self.base):
            ro = self.row_off[i]
            for j, cell in enumerate(row):
                val = cell + ro + self.col_off[j]
                if best is None or val > best:
                    best = val
        return self._count_query(best)

    def _state(self):
        return ([list(r) for r in self.base], list(self.row_off), list(self.col_off))

    def _restore(self, state) -> None:
        self.base, self.row_off, self.col_off = state
