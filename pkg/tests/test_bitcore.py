"""Bit-packed vector/matrix core: products, tilings, symmetrization,
text formats, and the promise check."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from omvlab.bitcore import (
    BoolMatrix,
    BoolVector,
    DimensionError,
    OmvInstance,
    floor_pow,
    lift_vectors,
    mat_vec,
    matrix_from_text,
    matrix_to_text,
    or_accumulate,
    symmetrize,
    vec_mat_vec,
    vector_from_text,
    vector_to_text,
)
from omvlab.harness.campaign import random_bits, random_matrix

from helpers import entrywise_mat_vec, triple_loop_vmv

HALF = Fraction(1, 2)


class TestBoolVector:
    def test_canonical_padding(self):
        v = BoolVector(3, 0b11111)
        assert v.bits == 0b111
        assert v.popcount() == 3

    def test_popcount_matches_logical_bits(self):
        rng = random.Random(0)
        for _ in range(50):
            bits = [rng.randint(0, 1) for _ in range(rng.randint(0, 70))]
            v = BoolVector.from_bits(bits)
            assert v.popcount() == sum(bits)
            assert list(v.support()) == [i for i, b in enumerate(bits) if b]

    def test_get_set(self):
        v = BoolVector.zeros(10)
        v.set_bit(3, 1)
        assert v.get(3) == 1 and v.get(4) == 0
        v.set_bit(3, 0)
        assert v.is_zero()
        with pytest.raises(DimensionError):
            v.get(10)

    def test_slice_concat(self):
        v = BoolVector.from01("1011001")
        assert v.slice_(2, 5).to01() == "110"
        assert v.slice_(0, 7) == v
        left, right = v.slice_(0, 3), v.slice_(3, 7)
        assert left.concat(right) == v
        with pytest.raises(DimensionError):
            v.slice_(5, 9)

    @given(st.lists(st.booleans(), max_size=80))
    def test_text_roundtrip(self, bits):
        v = BoolVector.from_bits(bits)
        assert vector_from_text(vector_to_text(v)) == v

    @given(st.integers(0, 2**40 - 1), st.integers(0, 2**40 - 1))
    def test_or_accumulate(self, a, b):
        x = BoolVector(40, a)
        y = BoolVector(40, b)
        or_accumulate(x, y)
        assert x.bits == a | b
        or_accumulate(x, y)
        assert x.bits == a | b  # idempotent


class TestMatVec:
    def test_identity(self):
        m = BoolMatrix.identity(2)
        assert mat_vec(m, BoolVector.from01("10")).to01() == "10"

    def test_zero_matrix(self):
        m = BoolMatrix.zeros(3, 3)
        for bits in range(8):
            assert mat_vec(m, BoolVector(3, bits)).is_zero()

    def test_seed1_8x8_against_entrywise_oracle(self):
        rng = random.Random(1)
        m = random_matrix(rng, 8, 8, HALF)
        v = random_bits(rng, 8, HALF)
        out = mat_vec(m, v)
        assert out == entrywise_mat_vec(m, v)
        assert out.to01() == "11111010"  # frozen from the entrywise oracle

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            mat_vec(BoolMatrix.zeros(2, 3), BoolVector.zeros(2))

    def test_random_against_entrywise_oracle(self):
        rng = random.Random(100)
        for _ in range(40):
            n1, n2 = rng.randint(1, 20), rng.randint(1, 20)
            m = random_matrix(rng, n1, n2, HALF)
            v = random_bits(rng, n2, HALF)
            assert mat_vec(m, v) == entrywise_mat_vec(m, v)


class TestVecMatVec:
    def test_identity_unit_vectors(self):
        m = BoolMatrix.identity(4)
        e1 = BoolVector.unit(4, 0)
        e2 = BoolVector.unit(4, 1)
        assert vec_mat_vec(e1, m, e1) == 1
        assert vec_mat_vec(e1, m, e2) == 0

    def test_seed16_16x16_against_triple_loop(self):
        rng = random.Random(16)
        m = random_matrix(rng, 16, 16, HALF)
        u = random_bits(rng, 16, HALF)
        v = random_bits(rng, 16, HALF)
        assert vec_mat_vec(u, m, v) == triple_loop_vmv(u, m, v) == 1

    def test_random_against_triple_loop(self):
        rng = random.Random(101)
        for _ in range(60):
            n1, n2 = rng.randint(1, 16), rng.randint(1, 16)
            m = random_matrix(rng, n1, n2, Fraction(1, 4))
            u = random_bits(rng, n1, HALF)
            v = random_bits(rng, n2, HALF)
            assert vec_mat_vec(u, m, v) == triple_loop_vmv(u, m, v)

    def test_consistency_with_mat_vec(self):
        rng = random.Random(102)
        for _ in range(40):
            n1, n2 = rng.randint(1, 12), rng.randint(1, 12)
            m = random_matrix(rng, n1, n2, HALF)
            u = random_bits(rng, n1, HALF)
            v = random_bits(rng, n2, HALF)
            via_product = 1 if (mat_vec(m, v).bits & u.bits) else 0
            assert vec_mat_vec(u, m, v) == via_product

    def test_dimension_mismatch(self):
        m = BoolMatrix.zeros(2, 3)
        with pytest.raises(DimensionError):
            vec_mat_vec(BoolVector.zeros(3), m, BoolVector.zeros(3))
        with pytest.raises(DimensionError):
            vec_mat_vec(BoolVector.zeros(2), m, BoolVector.zeros(2))


class TestSymmetrize:
    def test_single_entry(self):
        m = BoolMatrix.from_entries([[1]])
        mp = symmetrize(m)
        assert (mp.n1, mp.n2) == (2, 2)
        assert mp.entry(0, 1) == 1 and mp.entry(1, 0) == 1
        assert mp.entry(0, 0) == 0 and mp.entry(1, 1) == 0
        w, x, y = lift_vectors(BoolVector.ones(1), BoolVector.ones(1))
        assert vec_mat_vec(w, mp, w) == 1
        assert vec_mat_vec(x, mp, y) == 1

    def test_zero_matrix(self):
        m = BoolMatrix.zeros(2, 3)
        mp = symmetrize(m)
        w, x, y = lift_vectors(BoolVector.ones(2), BoolVector.ones(3))
        assert vec_mat_vec(w, mp, w) == 0
        assert vec_mat_vec(x, mp, y) == 0

    def test_random_6x9_products_agree(self):
        rng = random.Random(69)
        for _ in range(30):
            m = random_matrix(rng, 6, 9, HALF)
            u = random_bits(rng, 6, HALF)
            v = random_bits(rng, 9, HALF)
            mp = symmetrize(m)
            w, x, y = lift_vectors(u, v)
            direct = vec_mat_vec(u, m, v)
            assert vec_mat_vec(w, mp, w) == direct
            assert vec_mat_vec(x, mp, y) == direct


class TestBlocks:
    def test_identity_block(self):
        m = BoolMatrix.identity(4)
        b = m.block((0, 2), (0, 2))
        assert b == BoolMatrix.identity(2)

    def test_out_of_range_rejected(self):
        m = BoolMatrix.identity(4)
        with pytest.raises(DimensionError):
            m.block((0, 5), (0, 2))
        with pytest.raises(DimensionError):
            m.block((2, 2), (0, 2))

    def test_column_block_distribution(self):
        # Mv equals the OR over column blocks of the blockwise products
        rng = random.Random(7)
        for _ in range(25):
            n1, n2 = rng.randint(1, 12), rng.randint(2, 14)
            m = random_matrix(rng, n1, n2, HALF)
            v = random_bits(rng, n2, HALF)
            width = rng.randint(1, n2)
            acc = BoolVector.zeros(n1)
            for start in range(0, n2, width):
                stop = min(start + width, n2)
                sub = m.block((0, n1), (start, stop))
                or_accumulate(acc, mat_vec(sub, v.slice_(start, stop)))
            assert acc == mat_vec(m, v)

    def test_overlapping_boundary_tiles_cover_matrix(self):
        # 2x2 tiles over a 5x5 matrix: the last tile starts at 3, not 4
        m = random_matrix(random.Random(8), 5, 5, HALF)
        starts = [0, 2, 3]
        seen = [[0] * 5 for _ in range(5)]
        for r0 in starts:
            for c0 in starts:
                block = m.block((r0, r0 + 2), (c0, c0 + 2))
                for i in range(2):
                    for j in range(2):
                        assert block.entry(i, j) == m.entry(r0 + i, c0 + j)
                        seen[r0 + i][c0 + j] = 1
        assert all(all(row) for row in seen)


class TestMatrixOps:
    def test_transpose_and_column(self):
        rng = random.Random(11)
        m = random_matrix(rng, 7, 13, HALF)
        mt = m.transpose()
        assert (mt.n1, mt.n2) == (13, 7)
        for i in range(7):
            for j in range(13):
                assert m.entry(i, j) == mt.entry(j, i)
        for j in range(13):
            assert m.column(j).to01() == "".join(str(m.entry(i, j)) for i in range(7))

    def test_complement(self):
        m = random_matrix(random.Random(12), 5, 9, HALF)
        c = m.complement()
        for i in range(5):
            for j in range(9):
                assert c.entry(i, j) == 1 - m.entry(i, j)

    def test_pad_preserves_products(self):
        rng = random.Random(13)
        m = random_matrix(rng, 3, 5, HALF)
        v = random_bits(rng, 5, HALF)
        padded = m.pad(6, 8)
        vp = BoolVector(8, v.bits)
        assert mat_vec(padded, vp).bits == mat_vec(m, v).bits


class TestTextFormats:
    def test_matrix_roundtrip(self):
        rng = random.Random(14)
        m = random_matrix(rng, 4, 6, HALF)
        text = matrix_to_text(m)
        lines = text.splitlines()
        assert lines[0] == "4 6"
        assert len(lines) == 5
        assert matrix_from_text(text) == m

    def test_matrix_bad_inputs(self):
        with pytest.raises(ValueError):
            matrix_from_text("")
        with pytest.raises(ValueError):
            matrix_from_text("2 2\n10\n")
        with pytest.raises(ValueError):
            matrix_from_text("1 3\n10\n")
        with pytest.raises(ValueError):
            matrix_from_text("1 2\n1x\n")


class TestOmvInstance:
    def test_promise_holds(self):
        # gamma = 1/2: n1 = floor(sqrt(20)) = 4
        inst = OmvInstance(BoolMatrix.zeros(4, 20), n3=3, gamma=Fraction(1, 2))
        inst.check_promise()

    def test_promise_violated(self):
        inst = OmvInstance(BoolMatrix.zeros(5, 20), n3=3, gamma=Fraction(1, 2))
        with pytest.raises(DimensionError):
            inst.check_promise()

    def test_no_gamma_is_unchecked(self):
        OmvInstance(BoolMatrix.zeros(5, 20), n3=1).check_promise()

    @given(st.integers(1, 200),
           st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=6))
    def test_floor_pow_exact(self, base, exponent):
        k = floor_pow(base, exponent)
        p, q = exponent.numerator, exponent.denominator
        assert k**q <= base**p < (k + 1) ** q
