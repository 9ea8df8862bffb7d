"""Harmonic and biharmonic splines on annuli.

Thin wrapper over the compiled ``_core`` extension.
"""

from ._core import (
    DomainError,
    SingularSystemError,
    SplineExpansion,
    ValidationError,
    b_d,
    basis_dimension,
    bound_certificate,
    convergence_study,
    eval_harmonic,
    h_d,
    interpolate,
    l2_error,
    lk_consistency_check,
    orthogonality_check,
    sphere_area,
    standard_field_names,
    sup_norm_error,
    torsion_constant,
    torsion_function,
    verify_hd_shape,
)

__all__ = [
    "DomainError",
    "SingularSystemError",
    "SplineExpansion",
    "ValidationError",
    "b_d",
    "basis_dimension",
    "bound_certificate",
    "convergence_study",
    "eval_harmonic",
    "h_d",
    "interpolate",
    "l2_error",
    "lk_consistency_check",
    "orthogonality_check",
    "sphere_area",
    "standard_field_names",
    "sup_norm_error",
    "torsion_constant",
    "torsion_function",
    "verify_hd_shape",
]
