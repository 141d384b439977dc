"""Tests for the identity registry and the sweep runner."""

import pytest

from stirlingb.core.errors import SizeLimitError
from stirlingb.core.guards import SizeGuards, get_guards, set_guards
from stirlingb.stirling import stirling2_q, stirling2_q_enum, stirlingB1_q, stirlingB1_q_enum_row
from stirlingb.verify.identities import (
    IDENTITIES,
    Identity,
    get_identity,
    identity_ids,
    scan_bijections,
    ss_inv_row,
)
from stirlingb.verify.models import Counterexample, VerifyStatus
from stirlingb.verify.runner import ShardPool, run_identity, run_verification


@pytest.fixture
def restore_guards():
    previous = get_guards()
    yield
    set_guards(previous)


class TestRegistry:
    """Tests for the identity registry."""

    def test_ids_are_unique(self):
        """Test that every identity id appears once."""
        ids = identity_ids()
        assert len(ids) == len(set(ids)) == len(IDENTITIES)

    def test_expected_identities(self):
        """Test that the main identities are registered."""
        ids = set(identity_ids())
        for expected in (
            "second-recursion",
            "first-B-recursion",
            "sfinv-recursion",
            "ss-inv-distribution",
            "orthogonality",
            "power-sum",
            "printed-h-lemma-fails",
            "stat-distinctness",
        ):
            assert expected in ids

    def test_unknown_identity(self):
        """Test that unknown ids raise KeyError."""
        with pytest.raises(KeyError):
            get_identity("no-such-identity")

    @pytest.mark.parametrize("identity_id", identity_ids())
    def test_every_identity_passes_small(self, identity_id):
        """Test that each identity holds for small parameters."""
        with ShardPool(jobs=1) as pool:
            report = run_identity(get_identity(identity_id), 3, 3, pool)
        assert report.status is VerifyStatus.PASS, report.counterexample


class TestRunner:
    """Tests for run_identity and run_verification."""

    def test_range_for_identities_with_m(self):
        """Test that the swept range lists m only where it is used."""
        with ShardPool() as pool:
            plain = run_identity(get_identity("e-lemma"), 3, 2, pool)
            with_m = run_identity(get_identity("orthogonality"), 3, 2, pool)
        assert plain.range == {"max_n": 3}
        assert with_m.range == {"max_n": 3, "max_m": 2}

    def test_failure_is_reported(self):
        """Test that a counterexample turns into a failed report."""

        def broken(pool, max_n, max_m):
            return Counterexample({"n": 0}, "1", "2")

        identity = Identity("broken", "always fails", broken)
        with ShardPool() as pool:
            report = run_identity(identity, 2, 2, pool)
        assert report.status is VerifyStatus.FAIL
        assert report.to_dict()["counterexample"] == {
            "parameters": {"n": 0},
            "expected": "1",
            "actual": "2",
        }

    def test_run_verification_streams_reports(self):
        """Test that reports arrive through the callback in registry order."""
        seen = []
        reports = run_verification("all", 2, 2, on_report=seen.append)
        assert [r.identity for r in seen] == identity_ids()
        assert all(r.passed for r in reports)

    def test_run_single(self):
        """Test selecting one identity."""
        reports = run_verification("product-first", 4, 1)
        assert [r.identity for r in reports] == ["product-first"]

    def test_unknown_selection(self):
        """Test that an unknown selection raises KeyError."""
        with pytest.raises(KeyError):
            run_verification("nope", 2, 2)

    def test_size_guard_stops_sweep(self, restore_guards):
        """Test that an object budget stops an enumeration sweep."""
        set_guards(SizeGuards().with_max_objects(10))
        with pytest.raises(SizeLimitError):
            run_verification("first-B-recursion", 3, 1)


class TestShardPool:
    """Tests for sharded enumeration."""

    def test_invalid_jobs(self):
        """Test that jobs must be positive."""
        with pytest.raises(ValueError):
            ShardPool(jobs=0)

    def test_single_process(self):
        """Test that one job runs the function unsharded."""
        with ShardPool(jobs=1) as pool:
            assert pool.poly(stirling2_q_enum, 4, 2) == stirling2_q(4, 2)
            assert pool.first(scan_bijections, 3) is None

    def test_sharded_results_match(self):
        """Test that merged shard results equal the unsharded ones."""
        with ShardPool(jobs=3) as pool:
            assert pool.poly(stirling2_q_enum, 5, 2) == stirling2_q(5, 2)
            assert pool.rows(stirlingB1_q_enum_row, 4) == [stirlingB1_q(4, k) for k in range(5)]
            assert pool.rows(ss_inv_row, 3) == ss_inv_row(3)
            assert pool.first(scan_bijections, 3) is None

    def test_workers_use_parent_guards(self):
        """Test that worker processes enforce the pool's guards."""
        with ShardPool(jobs=2, guards=SizeGuards(max_perm_n=2)) as pool:
            with pytest.raises(SizeLimitError):
                pool.rows(stirlingB1_q_enum_row, 3)


class TestAcceptanceSweeps:
    """Larger sweeps at the sizes used for the published goldens."""

    @pytest.mark.parametrize(
        "identity_id,max_n,max_m",
        [
            ("second-recursion", 6, 1),
            ("second-r-recursion", 5, 1),
            ("first-A-recursion", 6, 1),
            ("first-B-recursion", 5, 1),
            ("sfinv-recursion", 5, 1),
            ("product-first-qr", 7, 1),
            ("corollary-split-product", 8, 1),
            ("flag-decomposition", 5, 1),
            ("h-lemma-corrected", 6, 5),
            ("orthogonality", 5, 5),
            ("power-sum", 5, 5),
        ],
    )
    def test_sweep(self, identity_id, max_n, max_m):
        """Test that the identity holds over the full sweep."""
        (report,) = run_verification(identity_id, max_n, max_m)
        assert report.passed, report.counterexample
