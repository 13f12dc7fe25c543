"""VerificationReport schema."""

import json
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from tmsverify.algebra.laurent import LaurentPoly
from tmsverify.algebra.text import parse
from tmsverify.schemas.enums import CheckName, Mode, Side


class VerificationReport(BaseModel):
    """Outcome of one identity check on one (genus, side) cell."""

    identity: CheckName = Field(..., description="Check that produced the report")
    genus: Optional[int] = Field(default=None, ge=2, description="Genus, null for free-standing polynomials")
    side: Optional[Side] = Field(default=None, description="Side for side-aware checks")
    passed: bool = Field(..., description="Whether difference equals expected_difference")
    difference: LaurentPoly = Field(..., description="Exact left side minus right side")
    expected_difference: LaurentPoly = Field(
        default_factory=LaurentPoly.zero,
        description="Difference that counts as reproducing the identity (zero except for predicted gaps)",
    )
    elapsed_ms: float = Field(default=0.0, ge=0.0, description="Wall time of the check")
    provenance: str = Field(..., description="Where the compared statement comes from")
    mode: Mode = Field(default=Mode.CLOSED_FORM, description="Group sum assembly mode")
    term_count: int = Field(default=0, ge=0, description="Terms in the checked polynomial")
    max_total_degree: Optional[int] = Field(
        default=None, description="Largest total degree in the checked polynomial"
    )
    notes: list[str] = Field(default_factory=list, description="Free-form observations")

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    @field_validator("difference", "expected_difference", mode="before")
    @classmethod
    def _parse_polynomial(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse(value)
        return value

    @field_serializer("difference", "expected_difference")
    def _serialize_polynomial(self, value: LaurentPoly) -> str:
        return str(value)

    @model_validator(mode="after")
    def _verdict_matches_difference(self) -> "VerificationReport":
        if self.passed != (self.difference == self.expected_difference):
            raise ValueError(
                f"passed={self.passed} contradicts difference {self.difference} "
                f"(expected {self.expected_difference})"
            )
        return self

    def without_timing(self) -> "VerificationReport":
        return self.model_copy(update={"elapsed_ms": 0.0})

    def to_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        # polynomials are plain Python objects, so validate in python mode
        return cls.model_validate(json.loads(text))
