"""
Domain exceptions. Every error carries a stable ``code`` so the CLI and the
HTTP routers can emit a machine-readable error object.
"""
from typing import Any, Dict


class SeshadriError(Exception):
    """Base class for every domain error raised by the services."""

    code = "seshadri_error"
    http_status = 400

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message}


class DimensionMismatchError(SeshadriError):
    """Raised when two divisor classes live on lattices of different rank."""

    code = "dimension_mismatch"

    def __init__(self, r1: int, r2: int):
        super().__init__(f"Divisor classes live on X_{r1} and X_{r2}")
        self.r1 = r1
        self.r2 = r2


class UnsupportedSurfaceError(SeshadriError):
    """Raised when an operation is asked for a point count it does not handle."""

    code = "unsupported_surface"

    def __init__(self, r: int, reason: str):
        super().__init__(f"r = {r} is not supported: {reason}")
        self.r = r


class InvalidPointSpecError(SeshadriError):
    code = "invalid_point_spec"


class InvalidLinearSystemError(SeshadriError):
    code = "invalid_linear_system"
    http_status = 422


class NotAttainedError(SeshadriError):
    """
    Raised when a witness is requested for a Seshadri constant that no
    rational curve attains (r = 8 at a general point).
    """

    code = "not_attained"
    http_status = 404


class DegenerateConfigurationError(SeshadriError):
    code = "degenerate_configuration"
    http_status = 422


class NonReducedPencilError(SeshadriError):
    code = "non_reduced_pencil"
    http_status = 422
