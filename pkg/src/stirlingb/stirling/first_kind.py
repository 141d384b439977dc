"""q-Stirling numbers of the first kind (types A and B) and their products.

Recursion routes are pure arithmetic on QPoly; enumeration routes walk the
permutation families through the first-kind word bijections and add up
q^statistic. Row helpers collect every k of one n in a single pass.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Callable, Iterable

from stirlingb.core.errors import DomainError
from stirlingb.core.qpoly import QPoly, TPoly, expand_linear_factors, q_bracket
from stirlingb.words.first_kind import (
    FirstKindStats,
    enumerate_rgA_words,
    enumerate_rgB_words,
    first_kind_stats,
    inv_A,
)

logger = logging.getLogger(__name__)

_ONE_PLUS_Q = QPoly((1, 1))


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}")


def _check_nkr(n: int, k: int, r: int) -> None:
    if min(n, k, r) < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}, r={r}")


def _rows(n: int, pairs: Iterable[tuple[int, int]]) -> list[QPoly]:
    """Turn a stream of (k, exponent) into [sum of q^e with that k for k in 0..n]."""
    counts: list[Counter] = [Counter() for _ in range(n + 1)]
    for k, e in pairs:
        counts[k][e] += 1
    return [QPoly.from_exponents(c.elements()) for c in counts]


# Type A


def stirlingA_q(n: int, k: int) -> QPoly:
    """s^A_q(n, k) = s^A_q(n-1,k-1) + [n-1]_q s^A_q(n-1,k), s^A_q(0,k) = delta_0k."""
    _check_nk(n, k)
    return _stirlingA(n, k)


@lru_cache(maxsize=None)
def _stirlingA(n: int, k: int) -> QPoly:
    if n == 0:
        return QPoly.one() if k == 0 else QPoly.zero()
    if k == 0 or k > n:
        return QPoly.zero()
    return _stirlingA(n - 1, k - 1) + q_bracket(n - 1) * _stirlingA(n - 1, k)


def stirlingA_q_r(n: int, k: int, r: int) -> QPoly:
    _check_nkr(n, k, r)
    if r == 0:
        return _stirlingA(n, k) if k <= n else QPoly.zero()
    return _stirlingA_r(n, k, r)


@lru_cache(maxsize=None)
def _stirlingA_r(n: int, k: int, r: int) -> QPoly:
    if k < r or k > n or n < r:
        return QPoly.zero()
    if n == r:
        return QPoly.one()
    return _stirlingA_r(n - 1, k - 1, r) + q_bracket(n - 1) * _stirlingA_r(n - 1, k, r)


def stirlingA_q_enum_row(n: int, r: int = 0, shard: int = 0, shards: int = 1) -> list[QPoly]:
    """Sum of q^inv_A over type-A words, split by cycle count."""
    logger.debug("enumerating type-A words n=%d r=%d shard %d/%d", n, r, shard, shards)
    words = enumerate_rgA_words(n, r, shard, shards)
    return _rows(n, ((w.cycle_count, inv_A(w)) for w in words))


def stirlingA_q_enum(n: int, k: int) -> QPoly:
    _check_nk(n, k)
    return stirlingA_q_enum_row(n)[k]


def stirlingA_q_r_enum(n: int, k: int, r: int) -> QPoly:
    _check_nkr(n, k, r)
    if k > n or n < r:
        return QPoly.zero()
    return stirlingA_q_enum_row(n, r)[k]


# Type B


def split_boundary(n: int) -> QPoly:
    """s^B_q(n, 0) = sum over l of s^A_{q^2}(n, l) (1+q)^(n-l)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    total = QPoly.zero()
    for ell in range(n + 1):
        total = total + _stirlingA(n, ell).substitute_q_power(2) * _ONE_PLUS_Q ** (n - ell)
    return total


def split_boundary_product(n: int) -> QPoly:
    """Product (1+[2]_q)(1+[4]_q)...(1+[2n-2]_q); equals split_boundary(n) for n >= 1."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    result = QPoly.one()
    for i in range(1, n):
        result = result * (q_bracket(2 * i) + 1)
    return result


def stirlingB1_q(n: int, k: int) -> QPoly:
    """s^B_q(n, k) = s^B_q(n-1,k-1) + (1+[2n-2]_q) s^B_q(n-1,k)."""
    _check_nk(n, k)
    return _stirlingB1(n, k)


@lru_cache(maxsize=None)
def _stirlingB1(n: int, k: int) -> QPoly:
    if n == 0:
        return QPoly.one() if k == 0 else QPoly.zero()
    if k > n:
        return QPoly.zero()
    if k == 0:
        return split_boundary(n)
    return _stirlingB1(n - 1, k - 1) + (q_bracket(2 * n - 2) + 1) * _stirlingB1(n - 1, k)


def stirlingB1_q_r(n: int, k: int, r: int) -> QPoly:
    _check_nkr(n, k, r)
    if r == 0:
        return _stirlingB1(n, k)
    return _stirlingB1_r(n, k, r)


@lru_cache(maxsize=None)
def _stirlingB1_r(n: int, k: int, r: int) -> QPoly:
    if k < r or k > n or n < r:
        return QPoly.zero()
    if n == r:
        return QPoly.one()
    factor = q_bracket(2 * n - 2) + 1
    return _stirlingB1_r(n - 1, k - 1, r) + factor * _stirlingB1_r(n - 1, k, r)


def sstirlingB1_q(n: int, k: int) -> QPoly:
    """ss^B_q(n, k) = ss^B_q(n-1,k-1) + [2n-1]_q ss^B_q(n-1,k), ss^B_q(n,0) = [1][3]...[2n-1]."""
    _check_nk(n, k)
    return _sstirlingB1(n, k)


@lru_cache(maxsize=None)
def _sstirlingB1(n: int, k: int) -> QPoly:
    if n == 0:
        return QPoly.one() if k == 0 else QPoly.zero()
    if k > n:
        return QPoly.zero()
    if k == 0:
        return _sstirlingB1(n - 1, 0) * q_bracket(2 * n - 1)
    return _sstirlingB1(n - 1, k - 1) + q_bracket(2 * n - 1) * _sstirlingB1(n - 1, k)


def _b_row(
    n: int, statistic: Callable[[FirstKindStats], int], r: int, shard: int, shards: int
) -> list[QPoly]:
    logger.debug("enumerating type-B words n=%d r=%d shard %d/%d", n, r, shard, shards)
    stats = (first_kind_stats(w) for w in enumerate_rgB_words(n, r, shard, shards))
    return _rows(n, ((s.k, statistic(s)) for s in stats))


def stirlingB1_q_enum_row(n: int, r: int = 0, shard: int = 0, shards: int = 1) -> list[QPoly]:
    """Sum of q^finv over type-B words, split by the non-split cycle count."""
    return _b_row(n, lambda s: s.finv, r, shard, shards)


def sstirlingB1_q_enum_row(n: int, shard: int = 0, shards: int = 1) -> list[QPoly]:
    """Sum of q^sfinv over type-B words, split by the non-split cycle count."""
    return _b_row(n, lambda s: s.sfinv, 0, shard, shards)


def stirlingB1_q_enum(n: int, k: int) -> QPoly:
    _check_nk(n, k)
    return stirlingB1_q_enum_row(n)[k]


def stirlingB1_q_r_enum(n: int, k: int, r: int) -> QPoly:
    _check_nkr(n, k, r)
    if k > n or n < r:
        return QPoly.zero()
    return stirlingB1_q_enum_row(n, r)[k]


def sstirlingB1_q_enum(n: int, k: int) -> QPoly:
    _check_nk(n, k)
    return sstirlingB1_q_enum_row(n)[k]


# Products


def product_first_kind(n: int) -> TPoly:
    """(t+1)(t+1+[2]_q)...(t+1+[2n-2]_q); coefficient of t^k is s^B_q(n, k)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return expand_linear_factors([q_bracket(2 * i) + 1 for i in range(n)])


def product_first_kind_qr(n: int, r: int) -> TPoly:
    """(t+1+[2r]_q)...(t+1+[2n-2]_q); coefficient of t^k is s^B_q(n, r+k, r)."""
    if n < 0 or r < 0 or r > n:
        raise DomainError(f"need 0 <= r <= n, got n={n}, r={r}")
    return expand_linear_factors([q_bracket(2 * i) + 1 for i in range(r, n)])


def product_shifted(n: int) -> TPoly:
    """(t+1)(t+[3]_q)...(t+[2n-1]_q); coefficient of t^k is ss^B_q(n, k)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return expand_linear_factors([q_bracket(2 * i + 1) for i in range(n)])
