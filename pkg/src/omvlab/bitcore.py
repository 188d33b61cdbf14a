"""Bit-packed Boolean vectors and matrices over the OR/AND semiring."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional

WORD_BITS = 64


class DimensionError(ValueError):
    """Operands have incompatible or out-of-range dimensions."""


def _mask(n: int) -> int:
    return (1 << n) - 1


class BoolVector:
    """A length-`n` Boolean vector packed into a single big integer.

    Bit i of `bits` is entry i.  Bits at positions >= n are always zero,
    so equality and hashing work on (n, bits) directly.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise DimensionError("vector length must be >= 0")
        self.n = n
        self.bits = bits & _mask(n)

    @classmethod
    def zeros(cls, n: int) -> "BoolVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BoolVector":
        return cls(n, _mask(n))

    @classmethod
    def unit(cls, n: int, i: int) -> "BoolVector":
        if not 0 <= i < n:
            raise DimensionError(f"unit index {i} out of range for length {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BoolVector":
        bits = 0
        n = 0
        for val in values:
            if val:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise DimensionError(f"index {i} out of range for length {self.n}")
        return (self.bits >> i) & 1

    def set_bit(self, i: int, value: int) -> None:
        if not 0 <= i < self.n:
            raise DimensionError(f"index {i} out of range for length {self.n}")
        if value:
            self.bits |= 1 << i
        else:
            self.bits &= ~(1 << i)

    def popcount(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> Iterator[int]:
        """Indices of set bits, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def copy(self) -> "BoolVector":
        return BoolVector(self.n, self.bits)

    def slice_(self, start: int, stop: int) -> "BoolVector":
        if not 0 <= start <= stop <= self.n:
            raise DimensionError(f"slice [{start}, {stop}) out of range for length {self.n}")
        return BoolVector(stop - start, self.bits >> start)

    def concat(self, other: "BoolVector") -> "BoolVector":
        return BoolVector(self.n + other.n, self.bits | (other.bits << self.n))

    def __or__(self, other: "BoolVector") -> "BoolVector":
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return BoolVector(self.n, self.bits | other.bits)

    def __and__(self, other: "BoolVector") -> "BoolVector":
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return BoolVector(self.n, self.bits & other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolVector):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __len__(self) -> int:
        return self.n

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    @classmethod
    def from01(cls, text: str) -> "BoolVector":
        text = text.strip()
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid vector character {ch!r}")
        return cls(len(text), bits)

    def __repr__(self) -> str:
        return f"BoolVector({self.to01()!r})"


def or_accumulate(dst: BoolVector, src: BoolVector) -> None:
    """dst <- dst OR src, in place."""
    if dst.n != src.n:
        raise DimensionError(f"length mismatch: {dst.n} vs {src.n}")
    dst.bits |= src.bits


class BoolMatrix:
    """An n1 x n2 Boolean matrix stored as n1 packed row vectors."""

    __slots__ = ("n1", "n2", "rows")

    def __init__(self, rows: Iterable[BoolVector]):
        self.rows = [r.copy() for r in rows]
        self.n1 = len(self.rows)
        if self.n1 == 0:
            raise DimensionError("matrix must have at least one row")
        self.n2 = self.rows[0].n
        for r in self.rows:
            if r.n != self.n2:
                raise DimensionError("rows must all have the same length")

    @classmethod
    def zeros(cls, n1: int, n2: int) -> "BoolMatrix":
        return cls(BoolVector.zeros(n2) for _ in range(n1))

    @classmethod
    def ones(cls, n1: int, n2: int) -> "BoolMatrix":
        return cls(BoolVector.ones(n2) for _ in range(n1))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(BoolVector.unit(n, i) for i in range(n))

    @classmethod
    def from_entries(cls, entries: Iterable[Iterable[int]]) -> "BoolMatrix":
        return cls(BoolVector.from_bits(row) for row in entries)

    def row(self, i: int) -> BoolVector:
        if not 0 <= i < self.n1:
            raise DimensionError(f"row {i} out of range for {self.n1} rows")
        return self.rows[i]

    def entry(self, i: int, j: int) -> int:
        return self.row(i).get(j)

    def column(self, j: int) -> BoolVector:
        if not 0 <= j < self.n2:
            raise DimensionError(f"column {j} out of range for {self.n2} columns")
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r.bits >> j) & 1) << i
        return BoolVector(self.n1, bits)

    def transpose(self) -> "BoolMatrix":
        cols = [0] * self.n2
        for i, r in enumerate(self.rows):
            bit = 1 << i
            rest = r.bits
            while rest:
                low = rest & -rest
                cols[low.bit_length() - 1] |= bit
                rest ^= low
        return BoolMatrix(BoolVector(self.n1, c) for c in cols)

    def complement(self) -> "BoolMatrix":
        return BoolMatrix(BoolVector(self.n2, ~r.bits) for r in self.rows)

    def block(self, row_range: tuple[int, int], col_range: tuple[int, int]) -> "BoolMatrix":
        r0, r1 = row_range
        c0, c1 = col_range
        if not (0 <= r0 < r1 <= self.n1):
            raise DimensionError(f"row range [{r0}, {r1}) out of bounds for {self.n1} rows")
        if not (0 <= c0 < c1 <= self.n2):
            raise DimensionError(f"col range [{c0}, {c1}) out of bounds for {self.n2} columns")
        return BoolMatrix(self.rows[i].slice_(c0, c1) for i in range(r0, r1))

    def pad(self, n1: int, n2: int) -> "BoolMatrix":
        """Extend with zero rows/columns up to n1 x n2.  Padding never
        changes any matrix-vector product restricted to original indices."""
        if n1 < self.n1 or n2 < self.n2:
            raise DimensionError("pad target smaller than matrix")
        rows = [BoolVector(n2, r.bits) for r in self.rows]
        rows.extend(BoolVector.zeros(n2) for _ in range(n1 - self.n1))
        return BoolMatrix(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return (self.n1, self.n2) == (other.n1, other.n2) and all(
            a.bits == b.bits for a, b in zip(self.rows, other.rows)
        )

    def __hash__(self) -> int:
        return hash((self.n1, self.n2, tuple(r.bits for r in self.rows)))

    def __repr__(self) -> str:
        return f"BoolMatrix({self.n1}x{self.n2})"


def mat_vec(m: BoolMatrix, v: BoolVector) -> BoolVector:
    """Boolean product Mv: entry i is OR_j (M_ij AND v_j)."""
    if v.n != m.n2:
        raise DimensionError(f"vector length {v.n} != column count {m.n2}")
    bits = 0
    for i, r in enumerate(m.rows):
        if r.bits & v.bits:
            bits |= 1 << i
    return BoolVector(m.n1, bits)


def vec_mat_vec(u: BoolVector, m: BoolMatrix, v: BoolVector) -> int:
    """The single bit u^T M v: 1 iff some (i, j) has u_i = M_ij = v_j = 1."""
    if u.n != m.n1:
        raise DimensionError(f"left vector length {u.n} != row count {m.n1}")
    if v.n != m.n2:
        raise DimensionError(f"right vector length {v.n} != column count {m.n2}")
    rest = u.bits
    while rest:
        low = rest & -rest
        if m.rows[low.bit_length() - 1].bits & v.bits:
            return 1
        rest ^= low
    return 0


def symmetrize(m: BoolMatrix) -> BoolMatrix:
    """The (n1+n2)-square matrix [[0, M], [M^T, 0]]."""
    mt = m.transpose()
    rows = [BoolVector(m.n1 + m.n2, m.rows[i].bits << m.n1) for i in range(m.n1)]
    rows.extend(BoolVector(m.n1 + m.n2, mt.rows[j].bits) for j in range(m.n2))
    return BoolMatrix(rows)


def lift_vectors(u: BoolVector, v: BoolVector) -> tuple[BoolVector, BoolVector, BoolVector]:
    """Vectors (w, x, y) = (u||v, u||0, 0||v) for the symmetrized matrix."""
    zero_u = BoolVector.zeros(u.n)
    zero_v = BoolVector.zeros(v.n)
    return u.concat(v), u.concat(zero_v), zero_u.concat(v)


class OmvInstance:
    """A matrix plus online-round count, optionally carrying the promise
    that n1 = floor(n2 ** gamma)."""

    __slots__ = ("matrix", "n3", "gamma")

    def __init__(self, matrix: BoolMatrix, n3: int, gamma: Optional[Fraction] = None):
        if n3 < 1:
            raise DimensionError("round count must be >= 1")
        self.matrix = matrix
        self.n3 = n3
        self.gamma = gamma

    def check_promise(self) -> None:
        """Raise unless n1 = floor(n2 ** gamma), computed exactly."""
        if self.gamma is None:
            return
        if self.matrix.n1 != floor_pow(self.matrix.n2, self.gamma):
            raise DimensionError(
                f"promise violated: n1={self.matrix.n1} != floor({self.matrix.n2}^{self.gamma})"
            )


def floor_pow(base: int, exponent: Fraction) -> int:
    """floor(base ** exponent) for a positive integer base and rational
    exponent, via exact integer arithmetic."""
    if base < 1:
        raise ValueError("base must be >= 1")
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        raise ValueError("exponent must be >= 0")
    target = base**p
    k = max(1, int(round(base ** (p / q))))
    while k**q > target:
        k -= 1
    while (k + 1) ** q <= target:
        k += 1
    return k


# Text formats: a matrix file is a "n1 n2" header line followed by n1 lines
# of '0'/'1' characters; a vector file is one line of '0'/'1'.

def matrix_to_text(m: BoolMatrix) -> str:
    lines = [f"{m.n1} {m.n2}"]
    lines.extend(r.to01() for r in m.rows)
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> BoolMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}")
    n1, n2 = int(header[0]), int(header[1])
    if len(lines) != n1 + 1:
        raise ValueError(f"expected {n1} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = BoolVector.from01(ln)
        if row.n != n2:
            raise ValueError(f"row width {row.n} != declared {n2}")
        rows.append(row)
    return BoolMatrix(rows)


def vector_to_text(v: BoolVector) -> str:
    return v.to01() + "\n"


def vector_from_text(text: str) -> BoolVector:
    return BoolVector.from01(text)
