"""Set partitions of type B in standard presentation."""

from dataclasses import dataclass
from typing import Iterator

from stirlingb.combinat.sharding import shard_stream
from stirlingb.core.errors import ValidationError
from stirlingb.core.guards import Family, get_guards


@dataclass(frozen=True)
class SignedSetPartition:
    """Type-B set partition: optional zero block plus representative blocks.

    ``zero_support`` holds the positive halves of the zero block {±i}; each block
    in ``blocks`` is a representative (its negation is the paired block), kept
    in increasing absolute value, and blocks are ordered by their minimum.
    """

    zero_support: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        ordered = (tuple(sorted(b, key=abs)) for b in self.blocks)
        blocks = tuple(sorted(ordered, key=lambda b: abs(b[0]) if b else 0))
        object.__setattr__(self, "zero_support", frozenset(self.zero_support))
        object.__setattr__(self, "blocks", blocks)
        self._validate()

    def _validate(self) -> None:
        seen = set(self.zero_support)
        if any(x <= 0 for x in self.zero_support):
            raise ValidationError("zero block support must list positive integers")
        for index, block in enumerate(self.blocks, start=1):
            if not block:
                raise ValidationError(f"block {index} is empty")
            if block[0] <= 0:
                raise ValidationError(
                    f"block {index} must contain its minimal absolute value "
                    f"{abs(block[0])} positively"
                )
            for x in block:
                if x == 0 or abs(x) in seen:
                    raise ValidationError(f"absolute value {abs(x)} appears twice")
                seen.add(abs(x))
        if seen != set(range(1, len(seen) + 1)):
            raise ValidationError(f"absolute values {sorted(seen)} do not cover 1..{len(seen)}")

    @property
    def n(self) -> int:
        return len(self.zero_support) + sum(len(b) for b in self.blocks)

    @property
    def nonzero_block_count(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        parts = []
        if self.zero_support:
            zero = []
            for x in sorted(self.zero_support):
                zero.extend((x, -x))
            parts.append("{" + ",".join(str(x) for x in zero) + "}")
        parts.extend("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)
        return "|".join(parts)


def _insertions(n: int) -> Iterator[SignedSetPartition]:
    """Insert 1..n in turn: into the zero block, into each block as +m or -m, or alone."""
    zero: list[int] = []
    blocks: list[list[int]] = []

    def place(m: int) -> Iterator[SignedSetPartition]:
        if m > n:
            yield SignedSetPartition(frozenset(zero), tuple(tuple(b) for b in blocks))
            return
        zero.append(m)
        yield from place(m + 1)
        zero.pop()
        for block in blocks:
            for signed in (m, -m):
                block.append(signed)
                yield from place(m + 1)
                block.pop()
        blocks.append([m])
        yield from place(m + 1)
        blocks.pop()

    return place(1)


def enumerate_signed_partitions(
    n: int, shard: int = 0, shards: int = 1
) -> Iterator[SignedSetPartition]:
    """Stream every type-B set partition of [n] exactly once, deterministically."""
    get_guards().check(Family.SIGNED_PARTITIONS, n)
    return shard_stream(_insertions(n), shard, shards)
