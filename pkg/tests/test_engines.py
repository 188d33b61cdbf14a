"""Online engines: equivalence to the naive baseline, table-size bounds,
reset/replay, the majority wrapper, and the name grammar."""

import random
from fractions import Fraction

import pytest

from omvlab.bitcore import BoolMatrix, BoolVector, DimensionError, mat_vec
from omvlab.engines import (
    LookupEngine,
    MajorityEngine,
    TiledEngine,
    UnreliableEngine,
    default_group_bits,
    lookup_engine,
    majority_vote,
    naive_engine,
    parse_engine_spec,
    tiled_engine,
)
from omvlab.harness.campaign import random_bits, random_matrix

from helpers import entrywise_mat_vec

HALF = Fraction(1, 2)


def unit_stream(n, indices):
    return [BoolVector.unit(n, i) for i in indices]


class TestNaiveEngine:
    def test_identity_units(self):
        e = naive_engine()
        e.preprocess(BoolMatrix.identity(4))
        for v in unit_stream(4, [0, 1]):
            assert e.next(v) == v

    def test_zero_matrix(self):
        e = naive_engine()
        e.preprocess(BoolMatrix.zeros(3, 3))
        assert e.next(BoolVector.ones(3)).is_zero()

    def test_seed2_32x32_against_entrywise_oracle(self):
        rng = random.Random(2)
        m = random_matrix(rng, 32, 32, HALF)
        vs = [random_bits(rng, 32, HALF) for _ in range(8)]
        e = naive_engine()
        e.preprocess(m)
        for v in vs:
            assert e.next(v) == entrywise_mat_vec(m, v)

    def test_dimension_error(self):
        e = naive_engine()
        e.preprocess(BoolMatrix.zeros(3, 3))
        with pytest.raises(DimensionError):
            e.next(BoolVector.zeros(4))

    def test_stats_track_rounds(self):
        e = naive_engine()
        e.preprocess(BoolMatrix.identity(4))
        e.next(BoolVector.ones(4))
        e.next(BoolVector.zeros(4))
        assert len(e.stats().per_vector_ns) == 2


class TestLookupEngine:
    def test_b1_degenerates_to_naive(self):
        rng = random.Random(20)
        m = random_matrix(rng, 16, 16, HALF)
        e = lookup_engine(1)
        e.preprocess(m)
        n = naive_engine()
        n.preprocess(m)
        for _ in range(8):
            v = random_bits(rng, 16, HALF)
            assert e.next(v) == n.next(v)

    def test_b8_identity(self):
        e = lookup_engine(8)
        e.preprocess(BoolMatrix.identity(64))
        rng = random.Random(21)
        for _ in range(6):
            v = random_bits(rng, 64, HALF)
            assert e.next(v) == v

    def test_log_n_bits_on_seed3_256x256(self):
        rng = random.Random(3)
        m = random_matrix(rng, 256, 256, HALF)
        vs = [random_bits(rng, 256, HALF) for _ in range(64)]
        b = default_group_bits(256)
        assert b == 8
        e = lookup_engine(b)
        e.preprocess(m)
        n = naive_engine()
        n.preprocess(m)
        for v in vs:
            assert e.next(v) == n.next(v)

    def test_table_bytes_bound(self):
        rng = random.Random(22)
        for n1, n2, b in [(10, 20, 3), (64, 64, 8), (5, 17, 4), (33, 9, 9)]:
            m = random_matrix(rng, n1, n2, HALF)
            e = lookup_engine(b)
            e.preprocess(m)
            bound = -(-n2 // b) * (1 << b) * -(-n1 // 64) * 8
            assert 0 < e.stats().table_bytes <= bound

    def test_group_bits_guard(self):
        with pytest.raises(ValueError):
            LookupEngine(0)
        with pytest.raises(ValueError):
            LookupEngine(25)

    def test_default_group_bits(self):
        assert default_group_bits(1) == 1
        assert default_group_bits(2) == 1
        assert default_group_bits(256) == 8
        assert default_group_bits(1 << 20) == 16  # capped


class TestTiledEngine:
    def test_single_block_matches_inner(self):
        rng = random.Random(23)
        m = random_matrix(rng, 8, 8, HALF)
        e = tiled_engine(naive_engine, 8, 8)
        e.preprocess(m)
        n = naive_engine()
        n.preprocess(m)
        for _ in range(5):
            v = random_bits(rng, 8, HALF)
            assert e.next(v) == n.next(v)

    def test_scalar_blocks(self):
        rng = random.Random(24)
        m = random_matrix(rng, 8, 8, HALF)
        e = tiled_engine(naive_engine, 1, 1)
        e.preprocess(m)
        for _ in range(5):
            v = random_bits(rng, 8, HALF)
            assert e.next(v) == mat_vec(m, v)

    def test_overlapping_boundary_tiles_seed4(self):
        rng = random.Random(4)
        m = random_matrix(rng, 10, 20, HALF)
        e = tiled_engine(naive_engine, 4, 8)
        e.preprocess(m)
        n = naive_engine()
        n.preprocess(m)
        for _ in range(10):
            v = random_bits(rng, 20, HALF)
            assert e.next(v) == n.next(v)

    def test_nested_composition(self):
        rng = random.Random(25)
        m = random_matrix(rng, 24, 24, HALF)
        e = tiled_engine(lambda: tiled_engine(lookup_engine, 3, 5), 7, 11)
        e.preprocess(m)
        for _ in range(6):
            v = random_bits(rng, 24, HALF)
            assert e.next(v) == mat_vec(m, v)

    def test_invalid_block_sizes(self):
        m = BoolMatrix.zeros(4, 4)
        for k1, k2 in [(0, 2), (5, 2), (2, 0), (2, 5)]:
            e = tiled_engine(naive_engine, k1, k2)
            with pytest.raises(ValueError):
                e.preprocess(m)


class TestMajority:
    def test_r1_identity_wrapper(self):
        rng = random.Random(26)
        m = random_matrix(rng, 8, 8, HALF)
        e = majority_vote(naive_engine, 1)
        e.preprocess(m)
        v = random_bits(rng, 8, HALF)
        assert e.next(v) == mat_vec(m, v)

    def test_r5_deterministic_inner_unchanged(self):
        rng = random.Random(27)
        m = random_matrix(rng, 16, 16, HALF)
        e = majority_vote(naive_engine, 5)
        e.preprocess(m)
        for _ in range(6):
            v = random_bits(rng, 16, HALF)
            assert e.next(v) == mat_vec(m, v)

    def test_even_r_rejected(self):
        with pytest.raises(ValueError):
            MajorityEngine(naive_engine, 2)
        with pytest.raises(ValueError):
            MajorityEngine(naive_engine, 0)

    def test_r9_beats_fault_injection(self):
        # flip probability 0.2 per bit; majority of 9 must push the
        # empirical per-bit failure rate below 0.05 over 1000 rounds
        rng = random.Random(28)
        m = random_matrix(rng, 16, 16, HALF)
        e = majority_vote(lambda: UnreliableEngine(naive_engine, 0.2, seed=99), 9)
        e.preprocess(m)
        wrong = 0
        total = 0
        for _ in range(1000):
            v = random_bits(rng, 16, HALF)
            expected = mat_vec(m, v)
            wrong += (e.next(v).bits ^ expected.bits).bit_count()
            total += 16
        assert wrong / total < 0.05


class TestResetReplay:
    def test_randomized_engine_replays_identically(self):
        rng = random.Random(29)
        m = random_matrix(rng, 12, 12, HALF)
        vs = [random_bits(rng, 12, HALF) for _ in range(10)]
        e = UnreliableEngine(naive_engine, 0.3, seed=5)
        e.preprocess(m)
        first = [e.next(v).bits for v in vs]
        e.reset_to_preprocessed()
        second = [e.next(v).bits for v in vs]
        assert first == second
        assert len(e.stats().per_vector_ns) == len(vs)

    def test_reset_clears_per_round_stats(self):
        e = naive_engine()
        e.preprocess(BoolMatrix.identity(4))
        e.next(BoolVector.ones(4))
        e.reset_to_preprocessed()
        assert e.stats().per_vector_ns == []


class TestEngineSpecGrammar:
    @pytest.mark.parametrize("spec", [
        "naive", "lookup", "lookup:5", "tiled:2,3:naive",
        "tiled:4,4:lookup:2", "majority:3:naive",
        "majority:5:tiled:2,2:lookup:1",
    ])
    def test_parse_and_run(self, spec):
        rng = random.Random(30)
        m = random_matrix(rng, 8, 9, HALF)
        e = parse_engine_spec(spec)()
        e.preprocess(m)
        v = random_bits(rng, 9, HALF)
        assert e.next(v) == mat_vec(m, v)

    def test_unknown_spec(self):
        with pytest.raises(ValueError):
            parse_engine_spec("quantum")


def test_engine_equivalence_sweep():
    """Many engine shapes, one random instance family, bit-exact outputs."""
    rng = random.Random(31)
    specs = ["naive", "lookup:1", "lookup:4", "lookup", "tiled:2,2:naive",
             "tiled:3,5:naive", "majority:3:naive"]
    for _ in range(15):
        n1, n2 = rng.randint(1, 24), rng.randint(1, 24)
        m = random_matrix(rng, n1, n2, HALF)
        vs = [random_bits(rng, n2, HALF) for _ in range(4)]
        expected = [mat_vec(m, v) for v in vs]
        for spec in specs:
            e = parse_engine_spec(spec)()
            try:
                e.preprocess(m)
            except ValueError:
                continue  # block shape larger than the matrix
            assert [e.next(v) for v in vs] == expected, spec
