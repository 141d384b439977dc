"""Size guards protecting enumerations from accidental huge runs.

Each enumerated family has an n-limit. When ``max_objects`` is set (from the
config file or the STIRLINGB_MAX_OBJECTS environment variable) it replaces the
n-limits: a request passes iff the family has at most that many objects.
"""

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from stirlingb.core.errors import DomainError, SizeLimitError

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Object families that can be enumerated."""

    SIGNED_PERMUTATIONS = "signed permutations"
    PLAIN_PERMUTATIONS = "plain permutations"
    SIGNED_PARTITIONS = "type-B set partitions"
    SECOND_KIND_WORDS = "second-kind RG-words"


def family_size(family: Family, n: int) -> int:
    """Number of objects of the family at size n."""
    if family is Family.SIGNED_PERMUTATIONS:
        return 2**n * math.factorial(n)
    if family is Family.PLAIN_PERMUTATIONS:
        return math.factorial(n)
    # Type-B Bell numbers: row sums of S^B(n,k) = S^B(n-1,k-1) + (2k+1) S^B(n-1,k).
    row = [1]
    for m in range(1, n + 1):
        row = [
            (row[k - 1] if k >= 1 else 0) + (2 * k + 1) * (row[k] if k < m else 0)
            for k in range(m + 1)
        ]
    return sum(row)


@dataclass(frozen=True)
class SizeGuards:
    """Per-family n-limits plus an optional object-count override."""

    max_perm_n: int = 12
    max_plain_n: int = 10
    max_partition_n: int = 10
    max_word_n: int = 10
    max_objects: Optional[int] = None

    def limit_for(self, family: Family) -> int:
        return {
            Family.SIGNED_PERMUTATIONS: self.max_perm_n,
            Family.PLAIN_PERMUTATIONS: self.max_plain_n,
            Family.SIGNED_PARTITIONS: self.max_partition_n,
            Family.SECOND_KIND_WORDS: self.max_word_n,
        }[family]

    def check(self, family: Family, n: int) -> None:
        """Raise SizeLimitError if enumerating the family at n is not allowed."""
        if n < 0:
            raise DomainError(f"{family.value}: n must be >= 0, got {n}")
        if self.max_objects is not None:
            if family_size(family, n) <= self.max_objects:
                return
            logger.debug("%s at n=%d exceeds max_objects=%d", family.value, n, self.max_objects)
            raise SizeLimitError(family.value, n, self._largest_allowed(family))
        limit = self.limit_for(family)
        if n > limit:
            raise SizeLimitError(family.value, n, limit)

    def _largest_allowed(self, family: Family) -> int:
        n = 0
        while self.max_objects is not None and family_size(family, n + 1) <= self.max_objects:
            n += 1
        return n

    def with_max_objects(self, max_objects: Optional[int]) -> "SizeGuards":
        return replace(self, max_objects=max_objects)


_active = SizeGuards()


def get_guards() -> SizeGuards:
    """Return the guards used by enumerations in this process."""
    return _active


def set_guards(guards: SizeGuards) -> None:
    """Install process-wide guards (done once by the CLI and by each worker)."""
    global _active
    _active = guards
