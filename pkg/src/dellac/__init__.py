"""Exact combinatorics of Dellac configurations and flag-cell dimensions."""

__version__ = "0.1.0"

from .configurations import (
    DellacConfiguration,
    InversionClassification,
    MalformedConfiguration,
    NotSymmetricError,
    central_reflection,
    classify_inversions,
    enumerate_dellac,
    enumerate_symmetric,
    inv,
    inv_prime,
    inv_tilde,
    inversions,
    is_symmetric,
    is_valid,
    validate_configuration,
)

__all__ = [
    "__version__",
    "DellacConfiguration",
    "InversionClassification",
    "MalformedConfiguration",
    "NotSymmetricError",
    "central_reflection",
    "classify_inversions",
    "enumerate_dellac",
    "enumerate_symmetric",
    "inv",
    "inv_prime",
    "inv_tilde",
    "inversions",
    "is_symmetric",
    "is_valid",
    "validate_configuration",
]
