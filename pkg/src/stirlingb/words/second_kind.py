"""Restricted growth words of type B of the second kind.

A word w_1...w_n over {0, ±1, ..., ±n} encodes a type-B set partition: w_j is
the number of the representative block holding j (negated when it holds -j),
or 0 for the zero block. At position t the allowed letters are
0, ±1, ..., ±M and +(M+1), where M is the largest absolute value seen so far.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from stirlingb.combinat.partitions import SignedSetPartition
from stirlingb.combinat.sharding import shard_stream
from stirlingb.core.errors import ParseError
from stirlingb.core.guards import Family, get_guards
from stirlingb.words.violations import Violation


def validate_rg2(letters: Sequence[int]) -> Optional[Violation]:
    """Return None if the letters form a second-kind RG-word, else the first violation."""
    if not letters:
        return None
    if letters[0] not in (0, 1):
        return Violation("1", 1, f"first letter must be 0 or 1, got {letters[0]}")
    top = abs(letters[0])
    for t, x in enumerate(letters[1:], start=2):
        if abs(x) > top + 1:
            return Violation("2", t, f"|{x}| exceeds prefix maximum {top} + 1")
        if x == -(top + 1):
            return Violation("2b", t, f"first appearance of {top + 1} is negative")
        top = max(top, abs(x))
    return None


@dataclass(frozen=True)
class RGWord2:
    """A valid second-kind RG-word of type B."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        violation = validate_rg2(self.letters)
        if violation is not None:
            raise violation.to_error("second-kind RG-word")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def max_letter(self) -> int:
        """Largest letter, equal to the number of nonzero blocks."""
        return max((abs(x) for x in self.letters), default=0)

    @classmethod
    def parse(cls, text: str) -> "RGWord2":
        """Parse "1,0,-1,2,-2,2" (optional surrounding parentheses)."""
        body = text.strip().strip("()")
        if not re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)*\s*", body):
            raise ParseError(f"not a comma-separated word: {text!r}")
        return cls(tuple(int(tok) for tok in body.split(",")))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.letters)


def weight_exponent(w: RGWord2) -> int:
    """Exponent e with wt(w) = q^e.

    A 0 or the first occurrence of a value contributes nothing; a repeated
    negative letter -m contributes 2m-1 and a repeated positive letter m
    contributes 2m.
    """
    exponent = 0
    top = 0
    for x in w.letters:
        a = abs(x)
        if x == 0 or a > top:
            top = max(top, a)
            continue
        exponent += 2 * a - 1 if x < 0 else 2 * a
    return exponent


def partition_to_rg2(p: SignedSetPartition) -> RGWord2:
    """Encode a type-B set partition as its second-kind RG-word."""
    letters = [0] * p.n
    for index, block in enumerate(p.blocks, start=1):
        for x in block:
            letters[abs(x) - 1] = index if x > 0 else -index
    return RGWord2(tuple(letters))


def rg2_to_partition(w: RGWord2) -> SignedSetPartition:
    """Decode a second-kind RG-word into its type-B set partition."""
    zero = set()
    blocks: list[list[int]] = [[] for _ in range(w.max_letter)]
    for j, x in enumerate(w.letters, start=1):
        if x == 0:
            zero.add(j)
        else:
            blocks[abs(x) - 1].append(j if x > 0 else -j)
    return SignedSetPartition(frozenset(zero), tuple(tuple(b) for b in blocks))


def _words_with_weight(
    n: int, k: Optional[int] = None, r: int = 0
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Generate (letters, weight exponent) left to right by the allowed-letter rule.

    With ``k`` only words whose maximal letter is k are produced; with ``r`` the
    first r letters are forced to be 1, 2, ..., r.
    """
    letters: list[int] = []

    def extend(top: int, exponent: int) -> Iterator[tuple[tuple[int, ...], int]]:
        t = len(letters)
        if t == n:
            if k is None or top == k:
                yield tuple(letters), exponent
            return
        if k is not None and top + (n - t) < k:
            return
        if t < r:
            choices: Sequence[int] = (t + 1,)
        elif t == 0:
            choices = (0, 1)
        else:
            choices = [0]
            for m in range(1, top + 1):
                choices.extend((-m, m))
            choices.append(top + 1)
        for x in choices:
            if k is not None and abs(x) > k:
                continue
            a = abs(x)
            if x == 0 or a > top:
                gain = 0
            else:
                gain = 2 * a - 1 if x < 0 else 2 * a
            letters.append(x)
            yield from extend(max(top, a), exponent + gain)
            letters.pop()

    return extend(0, 0)


def enumerate_rg2_words(
    n: int, k: Optional[int] = None, r: int = 0, shard: int = 0, shards: int = 1
) -> Iterator[RGWord2]:
    """Stream second-kind RG-words of length n (optionally with max letter k, prefix 1..r)."""
    get_guards().check(Family.SECOND_KIND_WORDS, n)
    return (RGWord2(w) for w, _ in shard_stream(_words_with_weight(n, k, r), shard, shards))


def weight_exponents(
    n: int, k: Optional[int] = None, r: int = 0, shard: int = 0, shards: int = 1
) -> Iterator[int]:
    """Stream only the weight exponents, for generating-function sums."""
    get_guards().check(Family.SECOND_KIND_WORDS, n)
    return (e for _, e in shard_stream(_words_with_weight(n, k, r), shard, shards))
