"""Sagan-Swanson standard form of a signed permutation and its inversion number.

Every unit (a split pair C, -C or a non-split cycle) is written with its
minimal absolute value m last. A split pair is written as two pieces, the one
holding -m first; a non-split cycle is one piece ending in -m. Removing the
parentheses gives the 2n-letter word w; keeping only the first half of each
unit gives the shortened form sigma.
"""

from dataclasses import dataclass

from stirlingb.combinat.permutations import (
    CycleDecomposition,
    CycleKind,
    SignedCycle,
    SignedPermutation,
    cycle_decompose,
    cycles_to_perm,
)


@dataclass(frozen=True)
class SSUnit:
    """One unit of the standard form.

    For a split pair the halves are the two pieces; for a non-split cycle they
    are the two halves of the single piece. Either way the second half is the
    negation of the first.
    """

    first_half: tuple[int, ...]
    second_half: tuple[int, ...]
    kind: CycleKind

    @property
    def minimum(self) -> int:
        return abs(self.second_half[-1])

    def pieces(self) -> list[tuple[int, ...]]:
        if self.kind is CycleKind.SPLIT:
            return [self.first_half, self.second_half]
        return [self.first_half + self.second_half]

    def __str__(self) -> str:
        return "".join("(" + ",".join(str(x) for x in piece) + ")" for piece in self.pieces())


@dataclass(frozen=True)
class SSForm:
    """Units ordered by increasing minimal absolute value."""

    units: tuple[SSUnit, ...]

    def word(self) -> list[int]:
        return [
            x for unit in self.units for half in (unit.first_half, unit.second_half) for x in half
        ]

    def shortened(self) -> list[int]:
        return [x for unit in self.units for x in unit.first_half]

    def to_permutation(self) -> SignedPermutation:
        """Rebuild the signed permutation written by this form."""
        cycles = []
        for unit in self.units:
            if unit.kind is CycleKind.SPLIT:
                piece = unit.second_half
                start = len(piece) - 1
                rep = piece[start:] + piece[:start]
            else:
                orbit = unit.first_half + unit.second_half
                start = orbit.index(unit.minimum)
                rep = (orbit[start:] + orbit[:start])[: len(unit.first_half)]
            cycles.append(SignedCycle(rep, unit.kind))
        return cycles_to_perm(CycleDecomposition(tuple(cycles)))

    def __str__(self) -> str:
        return "".join(str(unit) for unit in self.units)


def _rotate_to_end(orbit: tuple[int, ...], last: int) -> tuple[int, ...]:
    pos = orbit.index(last) + 1
    return orbit[pos:] + orbit[:pos]


def ss_standard_form(p: SignedPermutation) -> SSForm:
    units = []
    for cycle in cycle_decompose(p).cycles:
        m = cycle.minimum
        if cycle.kind is CycleKind.SPLIT:
            negated = tuple(-x for x in cycle.elements)
            first = _rotate_to_end(negated, -m)
            second = _rotate_to_end(cycle.elements, m)
        else:
            piece = _rotate_to_end(cycle.orbit(), -m)
            half = len(cycle.elements)
            first, second = piece[:half], piece[half:]
        units.append(SSUnit(first, second, cycle.kind))
    return SSForm(tuple(units))


def ss_word(p: SignedPermutation) -> list[int]:
    """The 2n-letter word of the standard form with parentheses removed."""
    return ss_standard_form(p).word()


def ss_inv(p: SignedPermutation) -> int:
    """Number of pairs i < j with w_i > |w_j|."""
    w = ss_word(p)
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > abs(w[b]))


def shortened_form(p: SignedPermutation) -> list[int]:
    """sigma: the first half of every unit."""
    return ss_standard_form(p).shortened()


def abs_form(p: SignedPermutation) -> list[int]:
    return [abs(x) for x in shortened_form(p)]


@dataclass(frozen=True)
class FlagParts:
    """Counts of the pair classes A-D over sigma."""

    p_a: int
    p_b: int
    p_c: int
    p_d: int
    cd_overlap: int = 0

    @property
    def total(self) -> int:
        """2(p_A + p_B) + (p_C + p_D), which equals ss_inv."""
        return 2 * (self.p_a + self.p_b) + self.p_c + self.p_d

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "p_A": self.p_a,
            "p_B": self.p_b,
            "p_C": self.p_c,
            "p_D": self.p_d,
            "cd_overlap": self.cd_overlap,
        }


def flag_parts(p: SignedPermutation) -> FlagParts:
    """Classify the pairs i < j of sigma.

    A: different units, |sigma(i)| > |sigma(j)|.
    B: same unit, |sigma(i)| > |sigma(j)|, sigma(i) > 0.
    C: same unit, |sigma(i)| > |sigma(j)|, sigma(i) < 0.
    D: same unit, sigma(i) < sigma(j) and |sigma(i)| < |sigma(j)|.

    Same-unit pairs with sigma(i) < sigma(j) but |sigma(i)| > |sigma(j)| are
    already in C and describe the same inversion of w; they are reported as
    ``cd_overlap`` and not counted in D.
    """
    form = ss_standard_form(p)
    sigma: list[int] = []
    unit_of: list[int] = []
    for index, unit in enumerate(form.units):
        sigma.extend(unit.first_half)
        unit_of.extend([index] * len(unit.first_half))

    p_a = p_b = p_c = p_d = overlap = 0
    for a in range(len(sigma)):
        for b in range(a + 1, len(sigma)):
            x, y = sigma[a], sigma[b]
            bigger = abs(x) > abs(y)
            if unit_of[a] != unit_of[b]:
                p_a += bigger
            elif bigger:
                if x > 0:
                    p_b += 1
                else:
                    p_c += 1
                    overlap += x < y
            elif x < y:
                p_d += 1
    return FlagParts(p_a, p_b, p_c, p_d, overlap)
