"""Exact combinatorics of the Young and Schur graphs.

Diagrams are tuples (or lists) of parts, probabilities are ``fractions.Fraction``.
"""

from ._youngschur import (
    Error,
    count_d_paths,
    dim_f,
    dim_g,
    double,
    forced_trace,
    frobenius,
    hook_lengths,
    is_d_symmetric,
    kerov_coords,
    measure,
    partitions,
    r_up,
    r_up_shifted,
    sample,
    shifted_kerov_coords,
    strict_partitions,
    undouble,
    up_residues,
    up_residues_shifted,
    verification_names,
    verify,
)

__all__ = [
    "Error",
    "count_d_paths",
    "dim_f",
    "dim_g",
    "double",
    "forced_trace",
    "frobenius",
    "hook_lengths",
    "is_d_symmetric",
    "kerov_coords",
    "measure",
    "partitions",
    "r_up",
    "r_up_shifted",
    "sample",
    "shifted_kerov_coords",
    "strict_partitions",
    "total_variation",
    "undouble",
    "up_residues",
    "up_residues_shifted",
    "verification_names",
    "verify",
]


def total_variation(counts, table):
    """Half the L1 distance between a histogram and an exact table, as a Fraction."""
    from fractions import Fraction

    total = sum(counts.values())
    keys = set(counts) | set(table)
    return sum(abs(Fraction(counts.get(k, 0), total) - table.get(k, 0)) for k in keys) / 2
