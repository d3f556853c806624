"""Faces of the supermodular cone and their combinatorial descriptions."""
from .config import Settings, get_settings
from .exceptions import (
    FacewiseError,
    GroundSetMismatchError,
    GuardExceededError,
    InvalidInputError,
    NotPolymatroidError,
    NotPosetError,
    NotPreposetError,
    NotSupermodularError,
    NotTopologyError,
    VerificationError,
)

__all__ = [
    "FacewiseError",
    "GroundSetMismatchError",
    "GuardExceededError",
    "InvalidInputError",
    "NotPolymatroidError",
    "NotPosetError",
    "NotPreposetError",
    "NotSupermodularError",
    "NotTopologyError",
    "Settings",
    "VerificationError",
    "get_settings",
]
