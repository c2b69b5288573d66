"""Simultaneous diagonalization via congruence of complex symmetric matrices."""

from ._core import (
    FormatError,
    MaxRankWitness,
    SdcCertificate,
    ToleranceConfig,
    decide_evolution,
    decide_sdc,
    eig,
    kernel_intersection,
    max_rank_point,
    nullspace_basis,
    numerical_rank,
    read_matrix_set,
    synthesize,
    takagi,
    verify_certificate,
    write_matrix_set,
)

__all__ = [
    "FormatError",
    "MaxRankWitness",
    "SdcCertificate",
    "ToleranceConfig",
    "decide_evolution",
    "decide_sdc",
    "eig",
    "kernel_intersection",
    "max_rank_point",
    "nullspace_basis",
    "numerical_rank",
    "read_matrix_set",
    "synthesize",
    "takagi",
    "verify_certificate",
    "write_matrix_set",
]
