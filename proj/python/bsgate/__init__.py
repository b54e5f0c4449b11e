"""Beam-splitter network gate simulator."""

from ._bsgate import (
    ConfigError,
    ConsistencyError,
    closed_form_block,
    continuous_angle_search,
    enumerate_sign_solutions,
    orthogonality_residual,
    permanent,
    simulate,
    target_matrix,
    transfer_matrix,
    two_photon_distribution,
    verify,
)

__all__ = [
    "ConfigError",
    "ConsistencyError",
    "closed_form_block",
    "continuous_angle_search",
    "enumerate_sign_solutions",
    "orthogonality_residual",
    "permanent",
    "simulate",
    "target_matrix",
    "transfer_matrix",
    "two_photon_distribution",
    "verify",
]
