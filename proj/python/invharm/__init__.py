"""Graded Frobenius images of involution loci.

Partitions are lists of ints, Schur expansions are dicts mapping partition
tuples to q-coefficient lists (lowest degree first).
"""

from ._invharm import (
    DomainViolation,
    InvariantViolation,
    ResourceLimit,
    check_bijections,
    check_dim_bijection,
    check_formulas,
    check_width,
    conjugate,
    dim_bijection,
    enumerate_locus,
    frob_total,
    grfrob,
    hilbert,
    left_shadow,
    lattice_path,
    locus_size,
    partitions_of,
    phi,
    phi_inverse,
    reflection_pairs,
    right_shadow,
    rsk_symmetric,
    syt_count,
    verify_basis,
    width,
)

__all__ = [
    "DomainViolation",
    "InvariantViolation",
    "ResourceLimit",
    "check_bijections",
    "check_dim_bijection",
    "check_formulas",
    "check_width",
    "conjugate",
    "dim_bijection",
    "enumerate_locus",
    "frob_total",
    "grfrob",
    "hilbert",
    "left_shadow",
    "lattice_path",
    "locus_size",
    "partitions_of",
    "phi",
    "phi_inverse",
    "reflection_pairs",
    "right_shadow",
    "rsk_symmetric",
    "syt_count",
    "verify_basis",
    "width",
]
