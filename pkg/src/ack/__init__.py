"""
ACK Conjecture Verification
Witness search, brute-force oracle, zero-sum subsets and class-C report
"""

from .zero_sum import (
    orthogonal_subsets,
    zero_sum_subsets,
    is_zero_sum,
    neighborhood_zero_sum,
    degree_free_zero_sum,
)
from .search import (
    AckStatus,
    AckMethod,
    AckReport,
    is_in_row_space,
    is_row,
    witness_checks,
    searchable_sizes,
    ack_witness,
    ack_brute_oracle,
)
from .class_c import ClassCReport, class_c_report

__all__ = [
    "orthogonal_subsets",
    "zero_sum_subsets",
    "is_zero_sum",
    "neighborhood_zero_sum",
    "degree_free_zero_sum",
    "AckStatus",
    "AckMethod",
    "AckReport",
    "is_in_row_space",
    "is_row",
    "witness_checks",
    "searchable_sizes",
    "ack_witness",
    "ack_brute_oracle",
    "ClassCReport",
    "class_c_report",
]
