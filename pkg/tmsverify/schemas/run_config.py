"""RunConfig: the validated description of one verify/sweep invocation."""

from typing import Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from tmsverify.core.config import Settings
from tmsverify.core.exceptions import ConfigurationError, EnumerationBoundError, UnknownCheckError
from tmsverify.core.guards import MIN_GENUS, require_genus
from tmsverify.schemas.enums import CheckName, Mode, OutputFormat, Side


def parse_check_names(names: list[str]) -> list[CheckName]:
    """
    Resolve check names; an empty list selects every check.

    Raises:
        UnknownCheckError: If a name is not a registered check
    """
    if not names:
        return list(CheckName)
    known = [c.value for c in CheckName]
    resolved: list[CheckName] = []
    for name in names:
        if name not in known:
            raise UnknownCheckError(name, known)
        check = CheckName(name)
        if check not in resolved:
            resolved.append(check)
    return resolved


def parse_sides(names: list[str]) -> list[Side]:
    """
    Resolve side names.

    Raises:
        ConfigurationError: If a name is neither dolbeault nor betti
    """
    known = [s.value for s in Side]
    unknown = [name for name in names if name not in known]
    if unknown:
        raise ConfigurationError(f"unknown side '{unknown[0]}'; known sides: {', '.join(known)}")
    return [Side(name) for name in names]


class RunConfig(BaseModel):
    """Genus range, sides, checks and output options for a run."""

    genus_min: int = Field(..., description="Lowest genus")
    genus_max: int = Field(..., description="Highest genus")
    sides: list[Side] = Field(..., min_length=1, description="Sides for side-aware checks")
    checks: list[CheckName] = Field(..., min_length=1, description="Checks to run, in sweep order")
    mode: Mode = Field(default=Mode.CLOSED_FORM, description="Group sum assembly mode")
    output: OutputFormat = Field(default=OutputFormat.TABLE, description="Report format")
    show_provenance: bool = Field(default=False, description="Print provenance strings")
    report_timing: bool = Field(default=True, description="Record elapsed time")
    enumerate_bound: int = Field(default=24, ge=2, description="Largest 2g for enumerate mode")

    model_config = {"extra": "forbid"}

    @field_validator("genus_min", "genus_max")
    @classmethod
    def _genus_in_domain(cls, value: int) -> int:
        if value < MIN_GENUS:
            raise ValueError(f"genus must be ≥ {MIN_GENUS} (got {value})")
        return value

    @field_validator("sides")
    @classmethod
    def _dedupe_sides(cls, sides: list[Side]) -> list[Side]:
        return [side for side in Side if side in sides]

    @field_validator("checks")
    @classmethod
    def _sweep_order(cls, checks: list[CheckName]) -> list[CheckName]:
        return [check for check in CheckName if check in checks]

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.genus_min > self.genus_max:
            raise ValueError(
                f"empty genus range {self.genus_min}..{self.genus_max}; lower bound exceeds upper"
            )
        if self.mode == Mode.ENUMERATE and 2 * self.genus_max > self.enumerate_bound:
            raise EnumerationBoundError(requested=2 * self.genus_max, bound=self.enumerate_bound)
        return self

    @property
    def genera(self) -> range:
        return range(self.genus_min, self.genus_max + 1)

    @classmethod
    def from_settings(
        cls,
        settings: Settings,
        genus_range: Optional[tuple[int, int]] = None,
        sides: Optional[list[str]] = None,
        checks: Optional[list[str]] = None,
        mode: Optional[Mode] = None,
        output: Optional[OutputFormat] = None,
        show_provenance: Optional[bool] = None,
        report_timing: Optional[bool] = None,
    ) -> "RunConfig":
        """
        Overlay explicit values (command-line flags) on top of settings.

        Raises:
            GenusError: If either end of the genus range is below 2
            UnknownCheckError: If a check name is not registered
            EnumerationBoundError: If enumerate mode exceeds the bound
            ConfigurationError: For any other invalid combination
        """
        genus_min, genus_max = genus_range or (settings.genus_min, settings.genus_max)
        require_genus(genus_min)
        require_genus(genus_max)
        if (mode or settings.mode) == Mode.ENUMERATE and 2 * genus_max > settings.enumerate_bound:
            raise EnumerationBoundError(requested=2 * genus_max, bound=settings.enumerate_bound)
        # an empty setting means every check; an explicit empty selection is a mistake
        if checks is not None and not checks:
            raise ConfigurationError("no checks selected; omit --checks to run every check")
        side_names = sides if sides is not None else settings.get_sides()
        try:
            return cls(
                genus_min=genus_min,
                genus_max=genus_max,
                sides=parse_sides(side_names),
                checks=parse_check_names(checks if checks is not None else settings.get_checks()),
                mode=mode or settings.mode,
                output=output or settings.output,
                show_provenance=settings.show_provenance if show_provenance is None else show_provenance,
                report_timing=settings.report_timing if report_timing is None else report_timing,
                enumerate_bound=settings.enumerate_bound,
            )
        except ValidationError as e:
            problems = "; ".join(err["msg"] for err in e.errors())
            raise ConfigurationError(f"invalid run configuration: {problems}") from e
