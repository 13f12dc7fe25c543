"""ErrorResponse, error codes."""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field

from tmsverify.core.exceptions import (
    ConfigurationError,
    ContractViolation,
    EnumerationBoundError,
    GenusError,
    PoleError,
    PolynomialParseError,
    TMSVerifyError,
    UnknownCheckError,
    UnknownFormulaError,
)


class ErrorCode(str, Enum):
    """Error code categories."""

    # Usage errors
    INVALID_GENUS = "INVALID_GENUS"
    UNKNOWN_CHECK = "UNKNOWN_CHECK"
    UNKNOWN_FORMULA = "UNKNOWN_FORMULA"
    ENUMERATION_BOUND_EXCEEDED = "ENUMERATION_BOUND_EXCEEDED"
    INVALID_CONFIGURATION = "INVALID_CONFIGURATION"

    # Computation errors
    CONTRACT_VIOLATION = "CONTRACT_VIOLATION"
    POLE = "POLE"
    PARSE_ERROR = "PARSE_ERROR"
    INTERNAL_ERROR = "INTERNAL_ERROR"


_CODES: dict[type[TMSVerifyError], ErrorCode] = {
    GenusError: ErrorCode.INVALID_GENUS,
    UnknownCheckError: ErrorCode.UNKNOWN_CHECK,
    UnknownFormulaError: ErrorCode.UNKNOWN_FORMULA,
    EnumerationBoundError: ErrorCode.ENUMERATION_BOUND_EXCEEDED,
    ConfigurationError: ErrorCode.INVALID_CONFIGURATION,
    ContractViolation: ErrorCode.CONTRACT_VIOLATION,
    PoleError: ErrorCode.POLE,
    PolynomialParseError: ErrorCode.PARSE_ERROR,
}


class ErrorDetail(BaseModel):
    """Error detail structure."""

    code: ErrorCode = Field(..., description="Error code")
    message: str = Field(..., description="Human-readable error message")
    details: Optional[dict[str, Any]] = Field(
        default=None, description="Additional error context"
    )

    model_config = {"extra": "forbid"}


class ErrorResponse(BaseModel):
    """Standardized error envelope printed by the CLI in JSON mode."""

    error: ErrorDetail = Field(..., description="Error information")
    run_id: str = Field(..., description="Run ID for correlating with logs")

    model_config = {"extra": "forbid"}


def error_code_for(exc: BaseException) -> ErrorCode:
    """Map an exception to its error code (most specific class wins)."""
    for cls in type(exc).__mro__:
        if cls in _CODES:
            return _CODES[cls]  # type: ignore[index]
    return ErrorCode.INTERNAL_ERROR


def error_response(exc: BaseException, run_id: str) -> ErrorResponse:
    details: dict[str, Any] = {}
    if isinstance(exc, EnumerationBoundError):
        details = {"requested": exc.requested, "bound": exc.bound}
    elif isinstance(exc, GenusError):
        details = {"genus": exc.genus, "minimum": exc.minimum}
    return ErrorResponse(
        error=ErrorDetail(code=error_code_for(exc), message=str(exc), details=details or None),
        run_id=run_id,
    )
