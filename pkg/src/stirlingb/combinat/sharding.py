"""Positional sharding of deterministic object streams."""

from itertools import islice
from typing import Iterable, Iterator, TypeVar

from stirlingb.core.errors import DomainError

T = TypeVar("T")


def shard_stream(stream: Iterable[T], shard: int = 0, shards: int = 1) -> Iterator[T]:
    """Yield every ``shards``-th object of the stream starting at position ``shard``."""
    if shards < 1:
        raise DomainError(f"shards must be >= 1, got {shards}")
    if not 0 <= shard < shards:
        raise DomainError(f"shard index must be in [0, {shards}), got {shard}")
    if shards == 1:
        return iter(stream)
    return islice(stream, shard, None, shards)
