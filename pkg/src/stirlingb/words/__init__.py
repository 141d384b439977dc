"""Restricted growth words of the first and second kind."""

from stirlingb.words.first_kind import (
    FirstKindStats,
    RGWordA1,
    RGWordB1,
    enumerate_rgA_words,
    enumerate_rgB_words,
    first_kind_stats,
    inv_A,
    inv_B,
    phiA,
    phiA_inverse,
    phiB,
    phiB_inverse,
    validate_rgA,
    validate_rgB,
)
from stirlingb.words.second_kind import (
    RGWord2,
    enumerate_rg2_words,
    partition_to_rg2,
    rg2_to_partition,
    validate_rg2,
    weight_exponent,
    weight_exponents,
)
from stirlingb.words.violations import Violation

__all__ = [
    "FirstKindStats",
    "RGWord2",
    "RGWordA1",
    "RGWordB1",
    "Violation",
    "enumerate_rg2_words",
    "enumerate_rgA_words",
    "enumerate_rgB_words",
    "first_kind_stats",
    "inv_A",
    "inv_B",
    "partition_to_rg2",
    "phiA",
    "phiA_inverse",
    "phiB",
    "phiB_inverse",
    "rg2_to_partition",
    "validate_rg2",
    "validate_rgA",
    "validate_rgB",
    "weight_exponent",
    "weight_exponents",
]
