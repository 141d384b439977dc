"""Sweep execution for identity verification.

Enumeration streams are split positionally into shards. With ``jobs > 1`` the
shards run in a process pool whose workers install the parent's size guards;
partial results are merged in shard order, so output only depends on the flags.
"""

import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Callable, Optional, Sequence

from stirlingb.core.guards import SizeGuards, get_guards, set_guards
from stirlingb.core.qpoly import QPoly
from stirlingb.verify.identities import Identity, get_identity, identity_ids
from stirlingb.verify.models import Counterexample, VerifyReport, VerifyStatus

logger = logging.getLogger(__name__)


class ShardPool:
    """Runs shard functions ``fn(*args, shard=i, shards=N)`` and merges their results."""

    def __init__(self, jobs: int = 1, guards: Optional[SizeGuards] = None):
        """Initialize the pool.

        Args:
            jobs: Number of worker processes; 1 runs everything in-process
            guards: Size guards installed in every worker (defaults to the active ones)
        """
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")
        self.jobs = jobs
        self.guards = guards or get_guards()
        self._executor: Optional[Executor] = None

    def __enter__(self) -> "ShardPool":
        if self.jobs > 1:
            self._executor = ProcessPoolExecutor(
                max_workers=self.jobs, initializer=set_guards, initargs=(self.guards,)
            )
        return self

    def __exit__(self, *exc: Any) -> None:
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    def _map(self, fn: Callable[..., Any], *args: Any) -> list[Any]:
        if self._executor is None:
            return [fn(*args)]
        futures = [
            self._executor.submit(fn, *args, shard=i, shards=self.jobs) for i in range(self.jobs)
        ]
        return [f.result() for f in futures]

    def poly(self, fn: Callable[..., QPoly], *args: Any) -> QPoly:
        """Sum of the shard polynomials."""
        total = QPoly.zero()
        for part in self._map(fn, *args):
            total = total + part
        return total

    def rows(self, fn: Callable[..., Sequence[QPoly]], *args: Any) -> list[QPoly]:
        """Entry-wise sum of the shard rows."""
        parts = self._map(fn, *args)
        total = list(parts[0])
        for part in parts[1:]:
            total = [a + b for a, b in zip(total, part)]
        return total

    def first(
        self, fn: Callable[..., Optional[Counterexample]], *args: Any
    ) -> Optional[Counterexample]:
        """First counterexample in shard order, or None."""
        return next((c for c in self._map(fn, *args) if c is not None), None)


def run_identity(identity: Identity, max_n: int, max_m: int, pool: ShardPool) -> VerifyReport:
    """Sweep one identity and time it.

    Args:
        identity: The identity to check
        max_n: Upper bound for n
        max_m: Upper bound for the second swept index (used by some identities)
        pool: Shard pool for enumeration-heavy checks

    Returns:
        The verification report
    """
    sweep = {"max_n": max_n, "max_m": max_m} if identity.uses_m else {"max_n": max_n}
    logger.info("verifying %s over %s", identity.id, sweep)
    start = time.perf_counter()
    counterexample = identity.check(pool, max_n, max_m)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    status = VerifyStatus.PASS if counterexample is None else VerifyStatus.FAIL
    if counterexample is not None:
        logger.warning("%s failed at %s", identity.id, counterexample.parameters)
    else:
        logger.info("%s passed in %dms", identity.id, elapsed_ms)
    return VerifyReport(
        identity=identity.id,
        range=sweep,
        status=status,
        counterexample=counterexample,
        elapsed_ms=elapsed_ms,
        description=identity.description,
    )


def run_verification(
    selection: str,
    max_n: int,
    max_m: int,
    jobs: int = 1,
    on_report: Optional[Callable[[VerifyReport], None]] = None,
) -> list[VerifyReport]:
    """Run one identity (by id) or all of them in registry order.

    Raises:
        KeyError: If ``selection`` is neither "all" nor a known identity id.
    """
    ids = identity_ids() if selection == "all" else [get_identity(selection).id]
    reports = []
    with ShardPool(jobs) as pool:
        logger.debug("running %d identities with %d job(s)", len(ids), jobs)
        for identity_id in ids:
            report = run_identity(get_identity(identity_id), max_n, max_m, pool)
            reports.append(report)
            if on_report is not None:
                on_report(report)
    return reports
