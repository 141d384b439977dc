"""Tests for the standard form inversion statistic."""

from collections import Counter

import pytest

from stirlingb.combinat.permutations import SignedPermutation, enumerate_signed_permutations
from stirlingb.ssinv import (
    abs_form,
    flag_parts,
    shortened_form,
    ss_inv,
    ss_standard_form,
    ss_word,
)
from stirlingb.stirling import sstirlingB1_q
from stirlingb.words import first_kind_stats, phiB

WORKED = SignedPermutation.parse("(1,-7)(2,-5,4,-9)*(3,8)*(6)*")


class TestStandardForm:
    """Tests for the standard form and its words."""

    def test_worked_form(self):
        """Test the form of a permutation with one split and three non-split units."""
        form = ss_standard_form(WORKED)
        assert str(form) == "(7,-1)(-7,1)(5,-4,9,2,-5,4,-9,-2)(-8,3,8,-3)(6,-6)"
        assert [unit.minimum for unit in form.units] == [1, 2, 3, 6]
        assert len(ss_word(WORKED)) == 18

    def test_shortened_forms(self):
        """Test sigma and its absolute values."""
        assert shortened_form(WORKED) == [7, -1, 5, -4, 9, 2, -8, 3, 6]
        assert abs_form(WORKED) == [7, 1, 5, 4, 9, 2, 8, 3, 6]

    def test_identity(self):
        """Test that fixed points put the negative piece first.

        Each split unit ends in its positive minimum, so the identity of B_2 is
        written (-1)(1)(-2)(2) with sigma = -1,-2 and not (1)(-1)(2)(-2) with
        sigma = 1,2. The ss_inv distribution in
        test_distribution_matches_shifted_numbers is checked against this order.
        """
        form = ss_standard_form(SignedPermutation.identity(2))
        assert str(form) == "(-1)(1)(-2)(2)"
        assert shortened_form(SignedPermutation.identity(2)) == [-1, -2]
        assert ss_inv(SignedPermutation.identity(2)) == 0

    def test_form_rebuilds_permutation(self):
        """Test that the form determines the permutation over B_4."""
        for p in enumerate_signed_permutations(4):
            assert ss_standard_form(p).to_permutation() == p

    @pytest.mark.parametrize(
        "window,expected",
        [((1, 2), 0), ((2, 1), 1), ((2, -1), 1), ((-2, 1), 2), ((-2, -1), 2), ((-1, -2), 0)],
    )
    def test_small_values(self, window, expected):
        """Test ss_inv on B_2."""
        assert ss_inv(SignedPermutation(window)) == expected


class TestInversionStatistic:
    """Tests for the distribution of ss_inv and its flag decomposition."""

    def test_worked_value(self):
        """Test the worked permutation against the other statistics."""
        stats = first_kind_stats(phiB(WORKED))
        assert ss_inv(WORKED) == 34
        assert stats.finv == 27
        assert stats.sfinv == 32

    def test_b2_histogram(self):
        """Test the distribution over B_2."""
        histogram = Counter(ss_inv(p) for p in enumerate_signed_permutations(2))
        assert histogram == {0: 4, 1: 2, 2: 2}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_distribution_matches_shifted_numbers(self, n):
        """Test that q^ss_inv summed by non-split count gives ss^B_q(n, k).

        This pins the negative-first order of split pairs checked in test_identity.
        """
        rows = [Counter() for _ in range(n + 1)]
        for p in enumerate_signed_permutations(n):
            rows[first_kind_stats(phiB(p)).k][ss_inv(p)] += 1
        for k in range(n + 1):
            poly = sstirlingB1_q(n, k)
            assert dict(rows[k]) == {e: c for e, c in enumerate(poly.coeffs) if c}

    def test_worked_flag_parts(self):
        """Test the pair classes of the worked permutation."""
        parts = flag_parts(WORKED)
        assert parts.to_dict() == {"p_A": 11, "p_B": 4, "p_C": 2, "p_D": 2, "cd_overlap": 2}
        assert parts.total == 34

    @pytest.mark.parametrize("n", range(1, 5))
    def test_flag_decomposition(self, n):
        """Test 2(A + B) + C + D = ss_inv over B_n."""
        for p in enumerate_signed_permutations(n):
            assert flag_parts(p).total == ss_inv(p)
