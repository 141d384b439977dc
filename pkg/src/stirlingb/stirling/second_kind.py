"""q-Stirling numbers of type B of the second kind.

Two routes are kept side by side: the recursion
S^B_q(n,k) = S^B_q(n-1,k-1) + [2k+1]_q S^B_q(n-1,k) and the generating sum
of q^wt over second-kind RG-words. Recursion tables are memoized per process.
"""

import logging
from functools import lru_cache

from stirlingb.core.errors import DomainError
from stirlingb.core.qpoly import QPoly, q_bracket
from stirlingb.words.second_kind import weight_exponents

logger = logging.getLogger(__name__)


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}")


def stirling2_q(n: int, k: int) -> QPoly:
    """S^B_q(n, k) by recursion, with S^B_q(n,0) = S^B_q(n,n) = 1."""
    _check_nk(n, k)
    return _stirling2(n, k)


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> QPoly:
    if k == 0 or k == n:
        return QPoly.one()
    return _stirling2(n - 1, k - 1) + q_bracket(2 * k + 1) * _stirling2(n - 1, k)


def stirling2_q_enum(n: int, k: int, shard: int = 0, shards: int = 1) -> QPoly:
    """Sum of q^wt over words with maximal letter k (one shard of it if sharded)."""
    _check_nk(n, k)
    logger.debug("enumerating second-kind words n=%d k=%d shard %d/%d", n, k, shard, shards)
    return QPoly.from_exponents(weight_exponents(n, k, shard=shard, shards=shards))


def stirling2_q_r(n: int, k: int, r: int) -> QPoly:
    """S^B_q(n, k, r): blocks of 1..r kept apart; r = 0 is the plain number."""
    if min(n, k, r) < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}, r={r}")
    if r == 0:
        return stirling2_q(n, k) if k <= n else QPoly.zero()
    return _stirling2_r(n, k, r)


@lru_cache(maxsize=None)
def _stirling2_r(n: int, k: int, r: int) -> QPoly:
    if k < r or k > n or n < r:
        return QPoly.zero()
    if n == r:
        return QPoly.one()
    return _stirling2_r(n - 1, k - 1, r) + q_bracket(2 * k + 1) * _stirling2_r(n - 1, k, r)


def stirling2_q_r_enum(n: int, k: int, r: int, shard: int = 0, shards: int = 1) -> QPoly:
    """Sum of q^wt over words of max letter k whose first r letters are 1, ..., r."""
    if min(n, k, r) < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}, r={r}")
    if k < r or k > n or n < r:
        return QPoly.zero()
    return QPoly.from_exponents(weight_exponents(n, k, r, shard=shard, shards=shards))


def stirling2_row(n: int) -> list[QPoly]:
    """[S^B_q(n,0), ..., S^B_q(n,n)]."""
    return [stirling2_q(n, k) for k in range(n + 1)]
