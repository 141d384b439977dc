"""Sagan-Swanson inversion statistic and its flag decomposition."""

from stirlingb.ssinv.standard_form import (
    FlagParts,
    SSForm,
    SSUnit,
    abs_form,
    flag_parts,
    shortened_form,
    ss_inv,
    ss_standard_form,
    ss_word,
)

__all__ = [
    "FlagParts",
    "SSForm",
    "SSUnit",
    "abs_form",
    "flag_parts",
    "shortened_form",
    "ss_inv",
    "ss_standard_form",
    "ss_word",
]
