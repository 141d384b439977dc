"""Restricted growth words of the first kind, types A and B.

A first-kind word is a sequence of pairs (i, j): position x holds the number i
of the cycle containing x and the location j of x inside that cycle. For type B
the cycle number is negated for non-split cycles and the location is negated
when x appears in the representative cycle with a negative sign.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from stirlingb.combinat.permutations import (
    CycleDecomposition,
    CycleKind,
    PlainPermutation,
    SignedCycle,
    SignedPermutation,
    cycle_decompose,
    cycles_to_perm,
    enumerate_plain_permutations,
    enumerate_signed_permutations,
)
from stirlingb.core.errors import ParseError
from stirlingb.words.violations import Violation

Pair = tuple[int, int]

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _parse_pairs(text: str) -> tuple[Pair, ...]:
    compact = re.sub(r"\s+", "", text)
    matches = list(_PAIR.finditer(compact))
    if not matches or "".join(m.group(0) for m in matches) != compact:
        raise ParseError(f"not a pair word: {text!r}")
    return tuple((int(m.group(1)), int(m.group(2))) for m in matches)


def _format_pairs(pairs: Sequence[Pair]) -> str:
    return "".join(f"({i},{j})" for i, j in pairs)


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def validate_rgA(pairs: Sequence[Pair]) -> Optional[Violation]:
    """Return None if the pairs form a type-A first-kind word, else the first violation."""
    if not pairs:
        return None
    pairs = [(p[0], p[1]) for p in pairs]
    if tuple(pairs[0]) != (1, 1):
        return Violation("1", 1, f"first pair must be (1,1), got {pairs[0]}")
    cells = set()
    seen_twice = set()
    for pair in pairs:
        if pair in cells:
            seen_twice.add(pair)
        cells.add(pair)
    top = 1
    for t, (i, j) in enumerate(pairs, start=1):
        if i < 1 or j < 1:
            return Violation("alphabet", t, f"({i},{j}) is not a pair of positive integers")
        if t > 1:
            if i > top + 1:
                return Violation("2", t, f"cycle {i} exceeds prefix maximum {top} + 1")
            if i == top + 1:
                if j != 1:
                    return Violation("3a", t, f"new cycle {i} must open at location 1")
                top = i
            elif (i, j - 1) not in cells:
                return Violation("3b", t, f"({i},{j}) has no predecessor ({i},{j - 1})")
        if (i, j) in seen_twice:
            return Violation("dup", t, f"({i},{j}) occurs more than once")
    return None


def validate_rgB(pairs: Sequence[Pair]) -> Optional[Violation]:
    """Return None if the pairs form a type-B first-kind word, else the first violation.

    Condition (3b) is read on absolute locations: (i, j) with |j| >= 2 needs
    (i, j') somewhere in the word with |j'| = |j| - 1.
    """
    if not pairs:
        return None
    pairs = [(p[0], p[1]) for p in pairs]
    if tuple(pairs[0]) not in ((1, 1), (-1, 1)):
        return Violation("1", 1, f"first pair must be (1,1) or (-1,1), got {pairs[0]}")
    cells: set[Pair] = set()
    seen_twice: set[Pair] = set()
    for i, j in pairs:
        cell = (i, abs(j))
        if cell in cells:
            seen_twice.add(cell)
        cells.add(cell)
    top = 1
    cycle_sign = {1: _sign(pairs[0][0])}
    for t, (i, j) in enumerate(pairs, start=1):
        if i == 0 or j == 0:
            return Violation("alphabet", t, f"({i},{j}) has a zero component")
        a = abs(i)
        if t > 1:
            if a > top + 1:
                return Violation("2", t, f"|{i}| exceeds prefix maximum {top} + 1")
            if a == top + 1:
                if j != 1:
                    return Violation("3a", t, f"new cycle {i} must open at location 1")
                top = a
                cycle_sign[a] = _sign(i)
            else:
                if cycle_sign[a] != _sign(i):
                    return Violation("sign", t, f"cycle {a} used with both signs")
                if abs(j) < 2 or (i, abs(j) - 1) not in cells:
                    detail = f"({i},{j}) has no predecessor at location {abs(j) - 1}"
                    return Violation("3b", t, detail)
        if (i, abs(j)) in seen_twice:
            return Violation("dup", t, f"({i},±{abs(j)}) occurs more than once")
    return None


@dataclass(frozen=True)
class RGWordA1:
    """A valid type-A first-kind RG-word."""

    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        violation = validate_rgA(self.pairs)
        if violation is not None:
            raise violation.to_error("type-A first-kind RG-word")

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def cycle_count(self) -> int:
        return max((i for i, _ in self.pairs), default=0)

    @classmethod
    def parse(cls, text: str) -> "RGWordA1":
        return cls(_parse_pairs(text))

    def __str__(self) -> str:
        return _format_pairs(self.pairs)


@dataclass(frozen=True)
class RGWordB1:
    """A valid type-B first-kind RG-word."""

    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        violation = validate_rgB(self.pairs)
        if violation is not None:
            raise violation.to_error("type-B first-kind RG-word")

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def cycle_count(self) -> int:
        return max((abs(i) for i, _ in self.pairs), default=0)

    @classmethod
    def parse(cls, text: str) -> "RGWordB1":
        """Parse "(1,1)(-2,1)(-3,1)..."."""
        return cls(_parse_pairs(text))

    def __str__(self) -> str:
        return _format_pairs(self.pairs)


def phiA(p: PlainPermutation) -> RGWordA1:
    """Map a permutation to (cycle number, location) pairs of its standard cycle form."""
    pairs: list[Pair] = [(0, 0)] * p.n
    for t, cycle in enumerate(p.cycles(), start=1):
        for loc, x in enumerate(cycle, start=1):
            pairs[x - 1] = (t, loc)
    return RGWordA1(tuple(pairs))


def phiA_inverse(w: RGWordA1) -> PlainPermutation:
    cycles: list[list[int]] = [[] for _ in range(w.cycle_count)]
    for x, (i, j) in sorted(enumerate(w.pairs, start=1), key=lambda item: item[1]):
        cycles[i - 1].append(x)
    return PlainPermutation.from_cycles([tuple(c) for c in cycles])


def phiB(p: SignedPermutation) -> RGWordB1:
    """Map a signed permutation to its type-B first-kind word.

    Position |x| receives ((-1)^par * t, sign(x) * loc) where t numbers the
    representative cycle holding x, par is 1 for non-split cycles and loc is
    the location of x in the representative cycle.
    """
    pairs: list[Pair] = [(0, 0)] * p.n
    for t, cycle in enumerate(cycle_decompose(p).cycles, start=1):
        i = -t if cycle.kind is CycleKind.NONSPLIT else t
        for loc, x in enumerate(cycle.elements, start=1):
            pairs[abs(x) - 1] = (i, loc if x > 0 else -loc)
    return RGWordB1(tuple(pairs))


def phiB_inverse(w: RGWordB1) -> SignedPermutation:
    size = [0] * w.cycle_count
    for i, j in w.pairs:
        size[abs(i) - 1] = max(size[abs(i) - 1], abs(j))
    elements = [[0] * s for s in size]
    kinds = [CycleKind.SPLIT] * w.cycle_count
    for x, (i, j) in enumerate(w.pairs, start=1):
        elements[abs(i) - 1][abs(j) - 1] = x if j > 0 else -x
        if i < 0:
            kinds[abs(i) - 1] = CycleKind.NONSPLIT
    cycles = tuple(SignedCycle(tuple(e), kind) for e, kind in zip(elements, kinds))
    return cycles_to_perm(CycleDecomposition(cycles))


def inv_A(w: RGWordA1) -> int:
    """Number of index pairs i < j with w_j lexicographically smaller than w_i."""
    pairs = w.pairs
    n = len(pairs)
    return sum(1 for a in range(n) for b in range(a + 1, n) if pairs[b] < pairs[a])


def inv_B(w: RGWordB1) -> int:
    """Inversions under the absolute lexicographic comparison of (|i|, |j|)."""
    keys = [(abs(i), abs(j)) for i, j in w.pairs]
    return sum(1 for a in range(len(keys)) for b in range(a + 1, len(keys)) if keys[b] < keys[a])


@dataclass(frozen=True)
class FirstKindStats:
    """Statistics of a type-B first-kind word."""

    inv_B: int
    neg: int
    nl: int
    k: int

    @property
    def finv(self) -> int:
        return 2 * self.inv_B + self.neg

    @property
    def sfinv(self) -> int:
        return self.finv + self.nl

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "inv_B": self.inv_B,
            "neg": self.neg,
            "nl": self.nl,
            "finv": self.finv,
            "sfinv": self.sfinv,
            "k": self.k,
        }


def first_kind_stats(w: RGWordB1) -> FirstKindStats:
    """Compute inv_B, neg, nl and the non-split cycle count k (openings with i < 0)."""
    return FirstKindStats(
        inv_B=inv_B(w),
        neg=sum(1 for _, j in w.pairs if j < 0),
        nl=sum(1 for _, j in w.pairs if j != 1),
        k=sum(1 for i, j in w.pairs if j == 1 and i < 0),
    )


def enumerate_rgA_words(
    n: int, r: int = 0, shard: int = 0, shards: int = 1
) -> Iterator[RGWordA1]:
    """Type-A words of length n whose first r pairs are (1,1), (2,1), ..., (r,1)."""
    prefix = tuple((t, 1) for t in range(1, r + 1))
    words = (phiA(p) for p in enumerate_plain_permutations(n, shard, shards))
    return (w for w in words if w.pairs[:r] == prefix)


def enumerate_rgB_words(
    n: int, r: int = 0, shard: int = 0, shards: int = 1
) -> Iterator[RGWordB1]:
    """Type-B words of length n whose first r pairs are (-1,1), (-2,1), ..., (-r,1)."""
    prefix = tuple((-t, 1) for t in range(1, r + 1))
    words = (phiB(p) for p in enumerate_signed_permutations(n, shard, shards))
    return (w for w in words if w.pairs[:r] == prefix)
