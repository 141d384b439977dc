"""Generation and canonical forms of permutations and type-B set partitions."""

from stirlingb.combinat.partitions import SignedSetPartition, enumerate_signed_partitions
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

__all__ = [
    "CycleDecomposition",
    "CycleKind",
    "PlainPermutation",
    "SignedCycle",
    "SignedPermutation",
    "SignedSetPartition",
    "cycle_decompose",
    "cycles_to_perm",
    "enumerate_plain_permutations",
    "enumerate_signed_partitions",
    "enumerate_signed_permutations",
]
