class FacewiseError(Exception):
    """Base class for every error raised by the facewise package."""

    exit_code = 1


class InvalidInputError(FacewiseError, ValueError):
    """Malformed values or documents (bad labels, missing game entries, ...)."""

    exit_code = 2


class GroundSetMismatchError(InvalidInputError):
    """Two objects that must live over the same ground set do not."""


class NotPosetError(InvalidInputError):
    pass


class NotPreposetError(InvalidInputError):
    pass


class NotTopologyError(InvalidInputError):
    pass


class NotSupermodularError(InvalidInputError):
    pass


class NotPolymatroidError(InvalidInputError):
    pass


class GuardExceededError(FacewiseError):
    """The requested size is beyond what the brute-force machinery accepts."""

    exit_code = 3


class VerificationError(FacewiseError):
    """An internal cross-check between two equivalent computations failed."""

    exit_code = 1
