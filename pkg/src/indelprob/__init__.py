"""Exact unique-decoding probabilities for insertion/deletion channels."""

from .balls import (enumerate_deletion_ball, enumerate_insertion_ball, insertion_ball_size,
                    intersection_bruteforce, intersection_recursive)
from .bounds import (bound_udc, bound_uic, bound_usc, count_histories_covering,
                     maxdist_pair_intersection, min_intersection, weight_bound_udc_0n1n,
                     weight_bound_uic_0n, weight_bound_uic_0n1n)
from .channels import (Channel, ChannelKind, DecodingReport, f_ubc, f_udc, f_uic, f_usc,
                       has_unique_supersequence_witness, monte_carlo_f, report)
from .vt import (VTParams, decode_one_deletion, decode_one_insertion,
                 decode_two_insertions_scan, vt_checksum, vt_code)
from .words import (Code, Word, apply_deletion_history, apply_insertion_history,
                    history_to_pattern, indel_distance, is_subsequence, parse_code,
                    pattern_to_history, read_code, runs)

__all__ = [
    "enumerate_deletion_ball", "enumerate_insertion_ball", "insertion_ball_size",
    "intersection_bruteforce", "intersection_recursive", "bound_udc", "bound_uic",
    "bound_usc", "count_histories_covering", "maxdist_pair_intersection",
    "min_intersection", "weight_bound_udc_0n1n", "weight_bound_uic_0n",
    "weight_bound_uic_0n1n", "Channel", "ChannelKind", "DecodingReport", "f_ubc", "f_udc",
    "f_uic", "f_usc", "has_unique_supersequence_witness", "monte_carlo_f", "report",
    "VTParams", "decode_one_deletion", "decode_one_insertion", "decode_two_insertions_scan",
    "vt_checksum", "vt_code", "Code", "Word", "apply_deletion_history",
    "apply_insertion_history", "history_to_pattern", "indel_distance", "is_subsequence",
    "parse_code", "pattern_to_history", "read_code", "runs",
]

__version__ = "0.1.0"
