"""Plain and signed permutations and their standard cycle forms.

A signed permutation is stored by its window [pi(1), ..., pi(n)]; pi(-i) = -pi(i)
is implicit. Cycle decompositions keep only the representative cycle of each
unit: for a split pair C, -C the cycle holding the minimal absolute value with a
positive sign, and for a non-split cycle the first half of the orbit (the second
half is its negation).
"""

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from stirlingb.combinat.sharding import shard_stream
from stirlingb.core.errors import ParseError, ValidationError
from stirlingb.core.guards import Family, get_guards

_INT_LIST = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")
_CYCLE = re.compile(r"\(([^()]*)\)(\*?)")


def _parse_ints(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError as e:
        raise ParseError(f"not a comma-separated integer list: {body!r}") from e


@dataclass(frozen=True)
class PlainPermutation:
    """Permutation of {1..n} in one-line notation."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.window) != list(range(1, len(self.window) + 1)):
            raise ValidationError(
                f"{list(self.window)} is not a permutation of 1..{len(self.window)}"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in standard form: minimum first, ordered by increasing minimum."""
        seen: set[int] = set()
        out = []
        for m in range(1, self.n + 1):
            if m in seen:
                continue
            cycle = [m]
            x = self.window[m - 1]
            while x != m:
                cycle.append(x)
                x = self.window[x - 1]
            seen.update(cycle)
            out.append(tuple(cycle))
        return out

    @classmethod
    def from_cycles(cls, cycles: list[tuple[int, ...]]) -> "PlainPermutation":
        n = sum(len(c) for c in cycles)
        window = [0] * n
        for cycle in cycles:
            for pos, x in enumerate(cycle):
                window[x - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(window))

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"


@dataclass(frozen=True)
class SignedPermutation:
    """Element of B_n given by its window."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.window)
        if sorted(abs(x) for x in self.window) != list(range(1, n + 1)):
            raise ValidationError(
                f"{list(self.window)}: absolute values are not a permutation of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        """Image of a nonzero x in [-n, n]."""
        return self.window[x - 1] if x > 0 else -self.window[-x - 1]

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Parse the window form "[-3,2,-1,5,-4]" or a cycle form "(1,-3)(2)(4,5)*"."""
        text = text.strip()
        if text.startswith("("):
            return cycles_to_perm(CycleDecomposition.parse(text))
        if not _INT_LIST.match(text):
            raise ParseError(f"not a signed permutation window: {text!r}")
        return cls(tuple(_parse_ints(text.strip()[1:-1])))

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"


class CycleKind(str, Enum):
    """Kind of a signed cycle unit."""

    SPLIT = "split"
    NONSPLIT = "nonsplit"


@dataclass(frozen=True)
class SignedCycle:
    """Representative cycle of one unit of a signed permutation."""

    elements: tuple[int, ...]
    kind: CycleKind

    @property
    def minimum(self) -> int:
        return self.elements[0]

    def orbit(self) -> tuple[int, ...]:
        """The full cycle: the representative, followed by its negation if non-split."""
        if self.kind is CycleKind.NONSPLIT:
            return self.elements + tuple(-x for x in self.elements)
        return self.elements

    def __str__(self) -> str:
        body = "(" + ",".join(str(x) for x in self.elements) + ")"
        return body + ("*" if self.kind is CycleKind.NONSPLIT else "")


@dataclass(frozen=True)
class CycleDecomposition:
    """Representative cycles in standard form, ordered by minimal absolute value."""

    cycles: tuple[SignedCycle, ...]

    @property
    def n(self) -> int:
        return sum(len(c.elements) for c in self.cycles)

    @property
    def nonsplit_count(self) -> int:
        return sum(1 for c in self.cycles if c.kind is CycleKind.NONSPLIT)

    def validate(self) -> None:
        """Raise ValidationError unless this is a decomposition in standard form."""
        seen: set[int] = set()
        previous = 0
        for index, cycle in enumerate(self.cycles, start=1):
            if not cycle.elements:
                raise ValidationError(f"cycle {index} is empty")
            first = cycle.elements[0]
            if first <= 0:
                raise ValidationError(f"cycle {index} does not start with a positive element")
            if first != min(abs(x) for x in cycle.elements):
                raise ValidationError(
                    f"cycle {index} does not start with its minimal absolute value"
                )
            if first <= previous:
                raise ValidationError(f"cycle {index} breaks the increasing-minimum order")
            previous = first
            for x in cycle.elements:
                if x == 0 or abs(x) in seen:
                    raise ValidationError(
                        f"absolute value {abs(x)} repeated or zero in cycle {index}"
                    )
                seen.add(abs(x))
        if seen != set(range(1, len(seen) + 1)):
            raise ValidationError(f"absolute values {sorted(seen)} do not cover 1..{len(seen)}")

    @classmethod
    def parse(cls, text: str) -> "CycleDecomposition":
        """Parse "(1,-3)(2)(4,5)*" where a trailing "*" marks a non-split cycle."""
        compact = re.sub(r"\s+", "", text)
        matches = list(_CYCLE.finditer(compact))
        if not matches or "".join(m.group(0) for m in matches) != compact:
            raise ParseError(f"not a cycle form: {text!r}")
        cycles = tuple(
            SignedCycle(
                tuple(_parse_ints(m.group(1))),
                CycleKind.NONSPLIT if m.group(2) else CycleKind.SPLIT,
            )
            for m in matches
        )
        return cls(cycles)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.cycles)


def _signed_windows(n: int) -> Iterator[tuple[int, ...]]:
    """Windows in lexicographic order over the alphabet -n < ... < -1 < 1 < ... < n."""
    alphabet = [-v for v in range(n, 0, -1)] + list(range(1, n + 1))
    window: list[int] = []
    used = [False] * (n + 1)

    def extend() -> Iterator[tuple[int, ...]]:
        if len(window) == n:
            yield tuple(window)
            return
        for letter in alphabet:
            if used[abs(letter)]:
                continue
            used[abs(letter)] = True
            window.append(letter)
            yield from extend()
            window.pop()
            used[abs(letter)] = False

    return extend()


def enumerate_signed_permutations(
    n: int, shard: int = 0, shards: int = 1
) -> Iterator[SignedPermutation]:
    """Stream all 2^n * n! elements of B_n in lexicographic window order."""
    get_guards().check(Family.SIGNED_PERMUTATIONS, n)
    windows = shard_stream(_signed_windows(n), shard, shards)
    return (SignedPermutation(w) for w in windows)


def enumerate_plain_permutations(
    n: int, shard: int = 0, shards: int = 1
) -> Iterator[PlainPermutation]:
    """Stream all n! permutations of {1..n} in lexicographic order."""
    get_guards().check(Family.PLAIN_PERMUTATIONS, n)
    perms = shard_stream(itertools.permutations(range(1, n + 1)), shard, shards)
    return (PlainPermutation(p) for p in perms)


def cycle_decompose(p: SignedPermutation) -> CycleDecomposition:
    """Decompose a signed permutation into representative cycles in standard form."""
    seen: set[int] = set()
    cycles = []
    for m in range(1, p.n + 1):
        if m in seen:
            continue
        orbit = [m]
        x = p(m)
        while x != m:
            orbit.append(x)
            x = p(x)
        seen.update(abs(y) for y in orbit)
        if -m in orbit:
            cycles.append(SignedCycle(tuple(orbit[: len(orbit) // 2]), CycleKind.NONSPLIT))
        else:
            cycles.append(SignedCycle(tuple(orbit), CycleKind.SPLIT))
    return CycleDecomposition(tuple(cycles))


def cycles_to_perm(d: CycleDecomposition) -> SignedPermutation:
    """Rebuild the signed permutation of a standard-form decomposition."""
    d.validate()
    window = [0] * d.n
    for cycle in d.cycles:
        orbit = cycle.orbit()
        for pos, x in enumerate(orbit):
            y = orbit[(pos + 1) % len(orbit)]
            if x > 0:
                window[x - 1] = y
            else:
                window[-x - 1] = -y
    return SignedPermutation(tuple(window))
