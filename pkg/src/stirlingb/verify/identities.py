"""Registry of verifiable identities.

Every identity is a check over a parameter sweep bounded by ``max_n`` (and
``max_m`` where a second index is swept). A check returns the first
counterexample in parameter order, or None. Enumeration-heavy checks hand
their streams to the shard pool so they can run on several workers.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable, Optional

from stirlingb.combinat.partitions import enumerate_signed_partitions
from stirlingb.combinat.permutations import (
    SignedPermutation,
    cycle_decompose,
    enumerate_plain_permutations,
    enumerate_signed_permutations,
)
from stirlingb.core.qpoly import QPoly, TPoly, expand_linear_factors
from stirlingb.ssinv.standard_form import flag_parts, ss_inv, ss_standard_form
from stirlingb.stirling.first_kind import (
    product_first_kind,
    product_first_kind_qr,
    product_shifted,
    split_boundary,
    split_boundary_product,
    sstirlingB1_q,
    sstirlingB1_q_enum_row,
    stirlingA_q,
    stirlingA_q_enum_row,
    stirlingA_q_r,
    stirlingB1_q,
    stirlingB1_q_enum_row,
    stirlingB1_q_r,
)
from stirlingb.stirling.second_kind import (
    stirling2_q,
    stirling2_q_enum,
    stirling2_q_r,
    stirling2_q_r_enum,
)
from stirlingb.symfun.specialization import (
    convolution_residual,
    elementary_spec,
    homogeneous_spec,
    orthogonality_residual,
    power_sum_residual,
    printed_homogeneous_residual,
    weighted_convolution_residual,
)
from stirlingb.verify.models import Counterexample
from stirlingb.words.first_kind import first_kind_stats, phiA, phiA_inverse, phiB, phiB_inverse
from stirlingb.words.second_kind import partition_to_rg2, rg2_to_partition

if TYPE_CHECKING:
    from stirlingb.verify.runner import ShardPool

# (1,-7)(-1,7)(2,-5,4,-9,-2,5,-4,9)(3,8,-3,-8)(6,-6) in representative-cycle form.
WORKED_PERMUTATION = "(1,-7)(2,-5,4,-9)*(3,8)*(6)*"

Check = Callable[["ShardPool", int, int], Optional[Counterexample]]


@dataclass(frozen=True)
class Identity:
    """A named identity and its sweep."""

    id: str
    description: str
    check: Check
    uses_m: bool = False


def _mismatch(parameters: dict, expected: object, actual: object) -> Optional[Counterexample]:
    if expected == actual:
        return None
    return Counterexample(parameters=parameters, expected=str(expected), actual=str(actual))


def _first(found: Iterable[Optional[Counterexample]]) -> Optional[Counterexample]:
    return next((c for c in found if c is not None), None)


# Dual-route checks


def _second_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _first(
        _mismatch({"n": n, "k": k}, stirling2_q(n, k), pool.poly(stirling2_q_enum, n, k))
        for n in range(max_n + 1)
        for k in range(n + 1)
    )


def _second_r_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _first(
        _mismatch(
            {"n": n, "k": k, "r": r},
            stirling2_q_r(n, k, r),
            pool.poly(stirling2_q_r_enum, n, k, r),
        )
        for n in range(max_n + 1)
        for r in range(n + 1)
        for k in range(r, n + 1)
    )


def _row_check(
    pool: "ShardPool",
    max_n: int,
    row_fn: Callable[..., list[QPoly]],
    expected: Callable[..., QPoly],
    with_r: bool,
) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        for r in range(n + 1) if with_r else (None,):
            row = pool.rows(row_fn, n, r) if with_r else pool.rows(row_fn, n)
            for k in range(n + 1):
                params = {"n": n, "k": k} if r is None else {"n": n, "k": k, "r": r}
                want = expected(n, k) if r is None else expected(n, k, r)
                found = _mismatch(params, want, row[k])
                if found:
                    return found
    return None


def _first_a_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, stirlingA_q_enum_row, stirlingA_q, with_r=False)


def _first_a_r_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, stirlingA_q_enum_row, stirlingA_q_r, with_r=True)


def _first_b_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, stirlingB1_q_enum_row, stirlingB1_q, with_r=False)


def _first_b_r_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, stirlingB1_q_enum_row, stirlingB1_q_r, with_r=True)


def _sfinv_recursion(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, sstirlingB1_q_enum_row, sstirlingB1_q, with_r=False)


def ss_inv_row(n: int, shard: int = 0, shards: int = 1) -> list[QPoly]:
    """Sum of q^ss_inv over B_n split by the number of non-split cycles."""
    counts: list[Counter] = [Counter() for _ in range(n + 1)]
    for p in enumerate_signed_permutations(n, shard, shards):
        k = cycle_decompose(p).nonsplit_count
        e = ss_inv(p)
        counts[k][e] += 1
    return [QPoly.from_exponents(c.elements()) for c in counts]


def _ss_inv_distribution(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _row_check(pool, max_n, ss_inv_row, sstirlingB1_q, with_r=False)


# Products and boundaries


def _product_first(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        product = product_first_kind(n)
        expected = TPoly(tuple(stirlingB1_q(n, k) for k in range(n + 1)))
        found = _mismatch({"n": n}, expected, product)
        if found:
            return found
    return None


def _product_first_qr(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        for r in range(n + 1):
            product = product_first_kind_qr(n, r)
            expected = TPoly(tuple(stirlingB1_q_r(n, r + k, r) for k in range(n - r + 1)))
            found = _mismatch({"n": n, "r": r}, expected, product)
            if found:
                return found
    return None


def _product_shifted(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        expected = TPoly(tuple(sstirlingB1_q(n, k) for k in range(n + 1)))
        found = _mismatch({"n": n}, expected, product_shifted(n))
        if found:
            return found
    return None


def _boundary_split(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _first(
        _mismatch({"n": n, "k": 0}, split_boundary(n), pool.rows(stirlingB1_q_enum_row, n)[0])
        for n in range(1, max_n + 1)
    )


def _corollary_split_product(
    pool: "ShardPool", max_n: int, max_m: int
) -> Optional[Counterexample]:
    return _first(
        _mismatch({"n": n}, split_boundary(n), split_boundary_product(n))
        for n in range(1, max_n + 1)
    )


# q = 1 checks


def _basis_second_q1(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        total = TPoly()
        for k in range(n + 1):
            falling = expand_linear_factors([QPoly.constant(-(2 * i - 1)) for i in range(1, k + 1)])
            total = total + falling.scale(QPoly.constant(stirling2_q(n, k).eval_at_one()))
        found = _mismatch({"n": n}, TPoly.t_power(n), total)
        if found:
            return found
    return None


def _classical_rising_q1(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    for n in range(max_n + 1):
        rising = expand_linear_factors([QPoly.constant(i) for i in range(n)])
        expected = TPoly(
            tuple(QPoly.constant(stirlingA_q(n, k).eval_at_one()) for k in range(n + 1))
        )
        found = _mismatch({"n": n}, expected, rising)
        if found:
            return found
    return None


def _q1_collapse(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    def at_one(fn: Callable[[int, int], QPoly], n: int, k: int) -> int:
        return fn(n, k).eval_at_one() if 0 <= k <= n else 0

    for n in range(1, max_n + 1):
        for k in range(n + 1):
            second = at_one(stirling2_q, n - 1, k - 1) + (2 * k + 1) * at_one(stirling2_q, n - 1, k)
            found = _mismatch(
                {"n": n, "k": k, "kind": "S"}, second, at_one(stirling2_q, n, k)
            ) or _mismatch(
                {"n": n, "k": k, "kind": "s"},
                at_one(stirlingB1_q, n - 1, k - 1) + (2 * n - 1) * at_one(stirlingB1_q, n - 1, k),
                at_one(stirlingB1_q, n, k),
            )
            if found:
                return found
        total = sum(at_one(stirlingB1_q, n, k) for k in range(n + 1))
        found = _mismatch({"n": n, "kind": "row-sum"}, 2**n * math.factorial(n), total)
        if found:
            return found
    return None


# Exhaustive object scans (module level so worker processes can run them)


def scan_bijections(n: int, shard: int = 0, shards: int = 1) -> Optional[Counterexample]:
    """Round-trip every partition, permutation and signed permutation of size n."""
    for part in enumerate_signed_partitions(n, shard, shards):
        word = partition_to_rg2(part)
        if rg2_to_partition(word) != part or word.max_letter != part.nonzero_block_count:
            return Counterexample({"n": n, "object": str(part)}, str(part), str(word))
    for p in enumerate_plain_permutations(n, shard, shards):
        back = phiA_inverse(phiA(p))
        if back != p:
            return Counterexample({"n": n, "object": str(p)}, str(p), str(back))
    for s in enumerate_signed_permutations(n, shard, shards):
        back = phiB_inverse(phiB(s))
        if back != s:
            return Counterexample({"n": n, "object": str(s)}, str(s), str(back))
        rebuilt = ss_standard_form(s).to_permutation()
        if rebuilt != s:
            return Counterexample({"n": n, "object": str(s), "form": "ss"}, str(s), str(rebuilt))
    return None


def scan_flag_decomposition(n: int, shard: int = 0, shards: int = 1) -> Optional[Counterexample]:
    for p in enumerate_signed_permutations(n, shard, shards):
        parts = flag_parts(p)
        found = _mismatch({"n": n, "object": str(p)}, ss_inv(p), parts.total)
        if found:
            return found
    return None


def scan_parity(n: int, shard: int = 0, shards: int = 1) -> Optional[Counterexample]:
    for p in enumerate_signed_permutations(n, shard, shards):
        stats = first_kind_stats(phiB(p))
        found = _mismatch({"n": n, "object": str(p)}, stats.neg % 2, stats.finv % 2)
        if found:
            return found
    return None


def scan_nonsplit_count(n: int, shard: int = 0, shards: int = 1) -> Optional[Counterexample]:
    for p in enumerate_signed_permutations(n, shard, shards):
        found = _mismatch(
            {"n": n, "object": str(p)},
            cycle_decompose(p).nonsplit_count,
            first_kind_stats(phiB(p)).k,
        )
        if found:
            return found
    return None


def _scanning(scan: Callable[..., Optional[Counterexample]]) -> Check:
    def check(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
        return _first(pool.first(scan, n) for n in range(max_n + 1))

    return check


# Symmetric-function checks


def _e_lemma(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _first(
        _mismatch({"n": n, "k": k}, sstirlingB1_q(n, n - k), elementary_spec(n, k))
        for n in range(max_n + 1)
        for k in range(n + 1)
    )


def _h_lemma_corrected(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    return _first(
        _mismatch({"n": n, "k": k}, stirling2_q(n - 1 + k, n - 1), homogeneous_spec(n, k))
        for n in range(1, max_n + 1)
        for k in range(max_m + 1)
    )


def _orthogonality(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    zero = QPoly.zero()
    return _first(
        _mismatch({"n": n, "m": m, "route": "stirling"}, zero, orthogonality_residual(n, m))
        or _mismatch({"n": n, "m": m, "route": "convolution"}, zero, convolution_residual(n, m))
        for n in range(1, max_n + 1)
        for m in range(1, max_m + 1)
    )


def _power_sum(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    zero = QPoly.zero()
    return _first(
        _mismatch({"n": n, "m": m, "route": "stirling"}, zero, power_sum_residual(n, m))
        or _mismatch(
            {"n": n, "m": m, "route": "convolution"}, zero, weighted_convolution_residual(n, m)
        )
        for n in range(1, max_n + 1)
        for m in range(1, max_m + 1)
    )


def _printed_h_lemma_fails(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    # The unshifted form must leave exactly 1 + q + q^2 at n = k = 1.
    return _mismatch({"n": 1, "k": 1}, QPoly((1, 1, 1)), printed_homogeneous_residual(1, 1))


def _stat_distinctness(pool: "ShardPool", max_n: int, max_m: int) -> Optional[Counterexample]:
    p = SignedPermutation.parse(WORKED_PERMUTATION)
    stats = first_kind_stats(phiB(p))
    expected = {"ss_inv": 34, "finv": 27, "sfinv": 32}
    actual = {"ss_inv": ss_inv(p), "finv": stats.finv, "sfinv": stats.sfinv}
    return _mismatch({"object": WORKED_PERMUTATION}, expected, actual)


IDENTITIES: list[Identity] = [
    Identity(
        "second-recursion",
        "sum of q^wt over RG-words equals the S^B_q recursion",
        _second_recursion,
    ),
    Identity(
        "second-r-recursion",
        "r-restricted words against the S^B_q(n,k,r) recursion",
        _second_r_recursion,
    ),
    Identity(
        "first-A-recursion",
        "sum of q^inv_A against the s^A_q recursion",
        _first_a_recursion,
    ),
    Identity(
        "first-A-r-recursion",
        "r-restricted type-A words against s^A_q(n,k,r)",
        _first_a_r_recursion,
    ),
    Identity(
        "first-B-recursion",
        "sum of q^finv against the s^B_q recursion",
        _first_b_recursion,
    ),
    Identity(
        "first-B-r-recursion",
        "r-restricted type-B words against s^B_q(n,k,r)",
        _first_b_r_recursion,
    ),
    Identity(
        "sfinv-recursion",
        "sum of q^sfinv against the ss^B_q recursion",
        _sfinv_recursion,
    ),
    Identity(
        "product-first",
        "t-expansion of prod (t+1+[2i]_q) gives s^B_q(n,k)",
        _product_first,
    ),
    Identity(
        "product-first-qr",
        "t-expansion of prod_{i>=r} (t+1+[2i]_q) gives s^B_q(n,r+k,r)",
        _product_first_qr,
    ),
    Identity(
        "product-shifted",
        "t-expansion of (t+1) prod (t+[2i+1]_q) gives ss^B_q(n,k)",
        _product_shifted,
    ),
    Identity(
        "boundary-split",
        "enumerated s^B_q(n,0) equals sum_l s^A_{q^2}(n,l)(1+q)^(n-l)",
        _boundary_split,
    ),
    Identity(
        "corollary-split-product",
        "prod (1+[2i]_q) equals the split boundary",
        _corollary_split_product,
    ),
    Identity(
        "basis-second-q1",
        "sum_k S^B(n,k)(t-1)(t-3)...(t-(2k-1)) = t^n",
        _basis_second_q1,
    ),
    Identity(
        "classical-rising-q1",
        "t(t+1)...(t+n-1) = sum_k s(n,k) t^k",
        _classical_rising_q1,
    ),
    Identity(
        "bijection-roundtrips",
        "partition, Phi^A, Phi^B and standard-form round trips",
        _scanning(scan_bijections),
    ),
    Identity(
        "flag-decomposition",
        "ss_inv = 2(p_A+p_B) + (p_C+p_D) over B_n",
        _scanning(scan_flag_decomposition),
    ),
    Identity(
        "e-lemma",
        "e_k([1],[3],...,[2n-1]) = ss^B_q(n,n-k)",
        _e_lemma,
    ),
    Identity(
        "h-lemma-corrected",
        "h_k([1],...,[2n-1]) = S^B_q(n-1+k,n-1)",
        _h_lemma_corrected,
        uses_m=True,
    ),
    Identity(
        "orthogonality",
        "alternating ss^B_q / S^B_q convolution vanishes",
        _orthogonality,
        uses_m=True,
    ),
    Identity(
        "power-sum",
        "weighted ss^B_q / S^B_q convolution gives p_m",
        _power_sum,
        uses_m=True,
    ),
    Identity(
        "printed-h-lemma-fails",
        "unshifted h-lemma leaves 1+q+q^2 at n=k=1",
        _printed_h_lemma_fails,
    ),
    Identity(
        "ss-inv-distribution",
        "sum of q^ss_inv by non-split count equals ss^B_q",
        _ss_inv_distribution,
    ),
    Identity(
        "stat-distinctness",
        "ss_inv, finv, sfinv are 34, 27, 32 on the worked permutation",
        _stat_distinctness,
    ),
    Identity(
        "q1-collapse",
        "q=1 rows follow the integer recursions; row sums of s^B are 2^n n!",
        _q1_collapse,
    ),
    Identity(
        "parity",
        "finv and neg have the same parity",
        _scanning(scan_parity),
    ),
    Identity(
        "phiB-nonsplit-count",
        "non-split cycles of pi equal the k statistic of Phi^B(pi)",
        _scanning(scan_nonsplit_count),
    ),
]

_BY_ID = {identity.id: identity for identity in IDENTITIES}


def get_identity(identity_id: str) -> Identity:
    """Look up an identity by id.

    Raises:
        KeyError: If the id is unknown.
    """
    return _BY_ID[identity_id]


def identity_ids() -> list[str]:
    return [identity.id for identity in IDENTITIES]
