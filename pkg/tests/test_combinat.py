"""Tests for permutations, cycle forms and type-B set partitions."""

from collections import Counter

import pytest

from stirlingb.combinat.partitions import SignedSetPartition, enumerate_signed_partitions
from stirlingb.combinat.permutations import (
    CycleDecomposition,
    PlainPermutation,
    SignedPermutation,
    cycle_decompose,
    cycles_to_perm,
    enumerate_plain_permutations,
    enumerate_signed_permutations,
)
from stirlingb.combinat.sharding import shard_stream
from stirlingb.core.errors import DomainError, ParseError, SizeLimitError, ValidationError
from stirlingb.core.guards import Family, SizeGuards, family_size, get_guards, set_guards
from stirlingb.stirling.second_kind import stirling2_row

WORKED = "(1,-7)(2,-5,4,-9)*(3,8)*(6)*"


class TestSignedPermutations:
    """Tests for B_n enumeration and cycle decomposition."""

    def test_enumeration_order(self):
        """Test lexicographic order over -n < ... < -1 < 1 < ... < n."""
        windows = [p.window for p in enumerate_signed_permutations(2)]
        assert windows == [
            (-2, -1),
            (-2, 1),
            (-1, -2),
            (-1, 2),
            (1, -2),
            (1, 2),
            (2, -1),
            (2, 1),
        ]

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 2), (3, 48), (4, 384)])
    def test_enumeration_count(self, n, count):
        """Test that B_n has 2^n n! elements."""
        assert sum(1 for _ in enumerate_signed_permutations(n)) == count

    def test_worked_decomposition(self):
        """Test the standard form of a permutation with split and non-split cycles."""
        p = SignedPermutation.parse(WORKED)
        assert p.window == (-7, -5, 8, -9, -4, -6, -1, -3, 2)
        d = cycle_decompose(p)
        assert str(d) == WORKED
        assert d.nonsplit_count == 3

    def test_identity_and_sign_change(self):
        """Test fixed points are split and -1 -> 1 is non-split."""
        assert str(cycle_decompose(SignedPermutation.identity(3))) == "(1)(2)(3)"
        assert str(cycle_decompose(SignedPermutation((-1,)))) == "(1)*"

    def test_round_trip_b3(self):
        """Test that decomposition and rebuilding are inverse over B_3."""
        for p in enumerate_signed_permutations(3):
            assert cycles_to_perm(cycle_decompose(p)) == p

    def test_invalid_decomposition(self):
        """Test that out-of-order cycles are rejected."""
        with pytest.raises(ValidationError):
            cycles_to_perm(CycleDecomposition.parse("(2)(1)"))
        with pytest.raises(ValidationError):
            cycles_to_perm(CycleDecomposition.parse("(1,3)"))

    def test_parse_errors(self):
        """Test malformed text forms."""
        with pytest.raises(ParseError):
            SignedPermutation.parse("[1,,2]")
        with pytest.raises(ParseError):
            CycleDecomposition.parse("(1)x")
        with pytest.raises(ValidationError):
            SignedPermutation.parse("[1,1]")


class TestPlainPermutations:
    """Tests for S_n."""

    def test_cycles(self):
        """Test standard cycle form of a plain permutation."""
        p = PlainPermutation((7, 5, 8, 9, 4, 6, 1, 3, 2))
        assert p.cycles() == [(1, 7), (2, 5, 4, 9), (3, 8), (6,)]
        assert PlainPermutation.from_cycles(p.cycles()) == p

    def test_count(self):
        """Test that S_4 has 24 elements."""
        assert sum(1 for _ in enumerate_plain_permutations(4)) == 24


class TestSignedSetPartitions:
    """Tests for type-B set partitions."""

    def test_rendering(self):
        """Test the text form and canonical block order."""
        p = SignedSetPartition(frozenset({2, 5}), ((3, -4, 6), (-7, 1)))
        assert str(p) == "{2,-2,5,-5}|{1,-7}|{3,-4,6}"
        assert p.n == 7
        assert p.nonzero_block_count == 2

    def test_invalid_block(self):
        """Test that a block must hold its minimal absolute value positively."""
        with pytest.raises(ValidationError):
            SignedSetPartition(frozenset(), ((-1, 2),))

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 2), (2, 6), (3, 24)])
    def test_count(self, n, count):
        """Test the type-B Bell numbers."""
        partitions = list(enumerate_signed_partitions(n))
        assert len(partitions) == count
        assert len(set(partitions)) == count
        assert family_size(Family.SIGNED_PARTITIONS, n) == count

    @pytest.mark.parametrize("n", range(7))
    def test_counts_by_block_number(self, n):
        """Test that partitions with k nonzero blocks number S^B(n,k) at q = 1."""
        by_blocks = Counter(p.nonzero_block_count for p in enumerate_signed_partitions(n))
        assert [by_blocks[k] for k in range(n + 1)] == [
            entry.eval_at_one() for entry in stirling2_row(n)
        ]


class TestSharding:
    """Tests for positional sharding."""

    def test_shards_cover_stream(self):
        """Test that shards partition the stream."""
        full = list(enumerate_signed_permutations(3))
        parts = [list(enumerate_signed_permutations(3, i, 4)) for i in range(4)]
        assert sorted(p.window for part in parts for p in part) == sorted(p.window for p in full)

    def test_invalid_shard(self):
        """Test out-of-range shard arguments."""
        with pytest.raises(DomainError):
            list(shard_stream([1, 2], 2, 2))
        with pytest.raises(DomainError):
            list(shard_stream([1, 2], 0, 0))


class TestSizeGuards:
    """Tests for enumeration size guards."""

    def test_n_limit(self):
        """Test the per-family n limit."""
        guards = SizeGuards(max_perm_n=3)
        guards.check(Family.SIGNED_PERMUTATIONS, 3)
        with pytest.raises(SizeLimitError) as exc:
            guards.check(Family.SIGNED_PERMUTATIONS, 4)
        assert "STIRLINGB_MAX_OBJECTS" in str(exc.value)

    def test_object_budget_overrides_n_limit(self):
        """Test that max_objects replaces the n limits."""
        guards = SizeGuards(max_perm_n=12).with_max_objects(48)
        guards.check(Family.SIGNED_PERMUTATIONS, 3)
        with pytest.raises(SizeLimitError) as exc:
            guards.check(Family.SIGNED_PERMUTATIONS, 4)
        assert exc.value.limit == 3

    def test_active_guards_apply_to_enumeration(self):
        """Test that installed guards stop enumerations."""
        previous = get_guards()
        try:
            set_guards(SizeGuards(max_perm_n=2))
            with pytest.raises(SizeLimitError):
                enumerate_signed_permutations(3)
        finally:
            set_guards(previous)

    def test_negative_n(self):
        """Test that negative sizes are domain errors."""
        with pytest.raises(DomainError):
            SizeGuards().check(Family.PLAIN_PERMUTATIONS, -1)
