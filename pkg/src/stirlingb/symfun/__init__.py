"""Odd q-bracket specializations of symmetric polynomials."""

from stirlingb.symfun.specialization import (
    OddSpecialization,
    convolution_residual,
    elementary_spec,
    homogeneous_spec,
    orthogonality_residual,
    power_spec,
    power_sum_residual,
    printed_homogeneous_residual,
    printed_orthogonality_residual,
    weighted_convolution_residual,
)

__all__ = [
    "OddSpecialization",
    "convolution_residual",
    "elementary_spec",
    "homogeneous_spec",
    "orthogonality_residual",
    "power_spec",
    "power_sum_residual",
    "printed_homogeneous_residual",
    "printed_orthogonality_residual",
    "weighted_convolution_residual",
]
