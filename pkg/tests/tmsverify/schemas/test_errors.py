"""Tests for error codes and the JSON error envelope."""

import pytest

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
from tmsverify.schemas.errors import ErrorCode, error_code_for, error_response


@pytest.mark.parametrize(
    ("exc", "code"),
    [
        (GenusError(1), ErrorCode.INVALID_GENUS),
        (UnknownCheckError("x", ["tms-kappa"]), ErrorCode.UNKNOWN_CHECK),
        (UnknownFormulaError("x", ["ie_dol_sl2_kappa"]), ErrorCode.UNKNOWN_FORMULA),
        (EnumerationBoundError(26, 24), ErrorCode.ENUMERATION_BOUND_EXCEEDED),
        (ConfigurationError("bad"), ErrorCode.INVALID_CONFIGURATION),
        (ContractViolation("bad"), ErrorCode.CONTRACT_VIOLATION),
        (PoleError("u", -1), ErrorCode.POLE),
        (PolynomialParseError("bad"), ErrorCode.PARSE_ERROR),
        (TMSVerifyError("bad"), ErrorCode.INTERNAL_ERROR),
        (RuntimeError("bad"), ErrorCode.INTERNAL_ERROR),
    ],
)
def test_error_codes(exc: BaseException, code: ErrorCode) -> None:
    """Test each exception maps to its code."""
    assert error_code_for(exc) == code


def test_subclass_uses_most_specific_code() -> None:
    """Test subclasses of a mapped exception inherit its code."""

    class NarrowContract(ContractViolation):
        pass

    assert error_code_for(NarrowContract("x")) == ErrorCode.CONTRACT_VIOLATION


def test_bound_error_envelope() -> None:
    """Test the envelope carries the bound and the run id."""
    response = error_response(EnumerationBoundError(26, 24), run_id="run-1")
    payload = response.model_dump(mode="json")
    assert payload["run_id"] == "run-1"
    assert payload["error"]["code"] == "ENUMERATION_BOUND_EXCEEDED"
    assert payload["error"]["details"] == {"requested": 26, "bound": 24}
    assert "2g = 26" in payload["error"]["message"]


def test_genus_error_envelope() -> None:
    """Test genus errors report the minimum."""
    response = error_response(GenusError(0), run_id="run-2")
    assert response.error.details == {"genus": 0, "minimum": 2}
    assert response.error.message == "genus must be ≥ 2 (got 0)"


def test_envelope_without_details() -> None:
    """Test other errors have no details."""
    assert error_response(ConfigurationError("bad"), run_id="r").error.details is None
