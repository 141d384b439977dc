"""q-Stirling numbers by recursion and by enumeration."""

from stirlingb.stirling.first_kind import (
    product_first_kind,
    product_first_kind_qr,
    product_shifted,
    split_boundary,
    split_boundary_product,
    sstirlingB1_q,
    sstirlingB1_q_enum,
    sstirlingB1_q_enum_row,
    stirlingA_q,
    stirlingA_q_enum,
    stirlingA_q_enum_row,
    stirlingA_q_r,
    stirlingA_q_r_enum,
    stirlingB1_q,
    stirlingB1_q_enum,
    stirlingB1_q_enum_row,
    stirlingB1_q_r,
    stirlingB1_q_r_enum,
)
from stirlingb.stirling.second_kind import (
    stirling2_q,
    stirling2_q_enum,
    stirling2_q_r,
    stirling2_q_r_enum,
    stirling2_row,
)

__all__ = [
    "product_first_kind",
    "product_first_kind_qr",
    "product_shifted",
    "split_boundary",
    "split_boundary_product",
    "sstirlingB1_q",
    "sstirlingB1_q_enum",
    "sstirlingB1_q_enum_row",
    "stirling2_q",
    "stirling2_q_enum",
    "stirling2_q_r",
    "stirling2_q_r_enum",
    "stirling2_row",
    "stirlingA_q",
    "stirlingA_q_enum",
    "stirlingA_q_enum_row",
    "stirlingA_q_r",
    "stirlingA_q_r_enum",
    "stirlingB1_q",
    "stirlingB1_q_enum",
    "stirlingB1_q_enum_row",
    "stirlingB1_q_r",
    "stirlingB1_q_r_enum",
]
