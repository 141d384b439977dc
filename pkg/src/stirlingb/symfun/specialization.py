"""Symmetric polynomials specialized at the odd q-brackets [1]_q, [3]_q, ..., [2n-1]_q.

Elementary and complete homogeneous values come from their one-variable
recurrences, independently of the Stirling routes, so that the orthogonality
and power-sum identities can be checked against both.

The homogeneous side matches the second-kind numbers with a shifted index:
h_k over n variables equals S^B_q(n-1+k, n-1). The unshifted statement
h_k over n variables = S^B_q(n+k, n) already fails at n = k = 1; the
``printed_*`` residuals evaluate that form so the mismatch stays visible.
"""

from dataclasses import dataclass
from functools import lru_cache

from stirlingb.core.errors import DomainError
from stirlingb.core.qpoly import QPoly, q_bracket
from stirlingb.stirling.first_kind import sstirlingB1_q
from stirlingb.stirling.second_kind import stirling2_q


@dataclass(frozen=True)
class OddSpecialization:
    """The variables x_i = [2i-1]_q for i = 1..n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"number of variables must be non-negative, got {self.n}")

    @property
    def values(self) -> list[QPoly]:
        return [q_bracket(2 * i + 1) for i in range(self.n)]


def elementary_spec(n: int, k: int) -> QPoly:
    """e_k([1]_q, ..., [2n-1]_q); zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    return _elementary(n, k)


@lru_cache(maxsize=None)
def _elementary(n: int, k: int) -> QPoly:
    # e_k(x_1..x_n) = e_k(x_1..x_{n-1}) + x_n e_{k-1}(x_1..x_{n-1})
    if k == 0:
        return QPoly.one()
    if k > n:
        return QPoly.zero()
    return _elementary(n - 1, k) + q_bracket(2 * n - 1) * _elementary(n - 1, k - 1)


def homogeneous_spec(n: int, k: int) -> QPoly:
    """h_k([1]_q, ..., [2n-1]_q); over zero variables this is 1 for k = 0 and 0 otherwise."""
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    return _homogeneous(n, k)


@lru_cache(maxsize=None)
def _homogeneous(n: int, k: int) -> QPoly:
    # h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n)
    if k == 0:
        return QPoly.one()
    if n == 0:
        return QPoly.zero()
    return _homogeneous(n - 1, k) + q_bracket(2 * n - 1) * _homogeneous(n, k - 1)


def power_spec(n: int, m: int) -> QPoly:
    """p_m = [1]_q^m + [3]_q^m + ... + [2n-1]_q^m."""
    if n < 0 or m < 1:
        raise DomainError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    total = QPoly.zero()
    for x in OddSpecialization(n).values:
        total = total + x**m
    return total


def _check_residual_args(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise DomainError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def _ss(n: int, k: int) -> QPoly:
    return sstirlingB1_q(n, k) if 0 <= k <= n else QPoly.zero()


def orthogonality_residual(n: int, m: int) -> QPoly:
    """sum_{j=0}^m (-1)^j ss^B_q(n, n-j) S^B_q(n-1+m-j, n-1); zero when the identity holds."""
    _check_residual_args(n, m)
    total = QPoly.zero()
    for j in range(m + 1):
        term = _ss(n, n - j) * stirling2_q(n - 1 + m - j, n - 1)
        total = total - term if j % 2 else total + term
    return total


def power_sum_residual(n: int, m: int) -> QPoly:
    """sum_{j=1}^m (-1)^(j-1) j ss^B_q(n, n-j) S^B_q(n-1+m-j, n-1) minus p_m."""
    _check_residual_args(n, m)
    total = QPoly.zero()
    for j in range(1, m + 1):
        term = _ss(n, n - j) * stirling2_q(n - 1 + m - j, n - 1) * j
        total = total - term if j % 2 == 0 else total + term
    return total - power_spec(n, m)


def convolution_residual(n: int, m: int) -> QPoly:
    """sum_{j=0}^m (-1)^j e_j h_{m-j} over the odd specialization."""
    _check_residual_args(n, m)
    total = QPoly.zero()
    for j in range(m + 1):
        term = elementary_spec(n, j) * homogeneous_spec(n, m - j)
        total = total - term if j % 2 else total + term
    return total


def weighted_convolution_residual(n: int, m: int) -> QPoly:
    """sum_{j=1}^m (-1)^(j-1) j e_j h_{m-j} minus p_m over the odd specialization."""
    _check_residual_args(n, m)
    total = QPoly.zero()
    for j in range(1, m + 1):
        term = elementary_spec(n, j) * homogeneous_spec(n, m - j) * j
        total = total - term if j % 2 == 0 else total + term
    return total - power_spec(n, m)


def printed_homogeneous_residual(n: int, k: int) -> QPoly:
    """S^B_q(n+k, n) - h_k([1]_q, ..., [2n-1]_q), the unshifted form."""
    if n < 0 or k < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    return stirling2_q(n + k, n) - homogeneous_spec(n, k)


def printed_orthogonality_residual(n: int, m: int) -> QPoly:
    """sum_{j=0}^m (-1)^j ss^B_q(n, n-j) S^B_q(n+m-j, n), the unshifted form."""
    _check_residual_args(n, m)
    total = QPoly.zero()
    for j in range(m + 1):
        term = _ss(n, n - j) * stirling2_q(n + m - j, n)
        total = total - term if j % 2 else total + term
    return total
