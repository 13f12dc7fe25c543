"""Bigraded cohomology models: CohClass, BigradedSpace, PerverseRule."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CohClass(BaseModel):
    """
    A block of compactly supported cohomology classes sharing all gradings.

    (p, q) is the Hodge type, d the cohomological degree, k the perverse
    degree once assigned, sign the character of the inversion involution.
    """

    p: int = Field(..., ge=0, description="First Hodge index")
    q: int = Field(..., ge=0, description="Second Hodge index")
    d: int = Field(..., ge=0, description="Compactly supported cohomological degree")
    k: Optional[int] = Field(default=None, description="Perverse degree (None until assigned)")
    sign: Literal[1, -1] = Field(default=1, description="Character of the inversion involution")
    mult: int = Field(default=1, ge=1, description="Multiplicity")

    model_config = ConfigDict(frozen=True, extra="forbid")

    def key(self) -> tuple[int, int, int, Optional[int], int]:
        return (self.p, self.q, self.d, self.k, self.sign)


def _sort_key(c: CohClass) -> tuple[int, int, int, bool, int, int]:
    return (c.d, c.p, c.q, c.k is not None, c.k or 0, c.sign)


class BigradedSpace(BaseModel):
    """Finite multiset of cohomology classes; duplicate gradings are merged on construction."""

    classes: tuple[CohClass, ...] = Field(default=(), description="Classes, merged and sorted")
    label: str = Field(default="", description="Provenance of the model")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("classes")
    @classmethod
    def _merge_multiplicities(cls, classes: tuple[CohClass, ...]) -> tuple[CohClass, ...]:
        merged: dict[tuple[int, int, int, Optional[int], int], int] = {}
        for c in classes:
            merged[c.key()] = merged.get(c.key(), 0) + c.mult
        result = [
            CohClass(p=p, q=q, d=d, k=k, sign=sign, mult=mult)
            for (p, q, d, k, sign), mult in merged.items()
        ]
        return tuple(sorted(result, key=_sort_key))

    def dimension(self) -> int:
        """Total dimension Σ mult."""
        return sum(c.mult for c in self.classes)

    def to_json(self) -> str:
        """Diagnostic listing of (p, q, d, k, sign, mult) rows."""
        return self.model_dump_json(indent=2)


class PerverseRule(BaseModel):
    """Perverse degree assignment k = d - offset."""

    offset: int = Field(default=0, description="k = d - offset")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @classmethod
    def k_equals_d(cls) -> "PerverseRule":
        return cls(offset=0)

    @classmethod
    def k_equals_d_minus(cls, c: int) -> "PerverseRule":
        return cls(offset=c)
