"""Custom exception classes."""


class TMSVerifyError(Exception):
    """Base exception for tmsverify errors."""

    pass


class GenusError(TMSVerifyError, ValueError):
    """Exception raised when a genus outside the supported domain is requested."""

    def __init__(self, genus: int, minimum: int = 2) -> None:
        super().__init__(f"genus must be ≥ {minimum} (got {genus})")
        self.genus = genus
        self.minimum = minimum


class ContractViolation(TMSVerifyError, ValueError):
    """Exception raised when an operation is called outside its pre-conditions."""

    pass


class PoleError(TMSVerifyError, ZeroDivisionError):
    """Exception raised when a negative exponent is evaluated at zero."""

    def __init__(self, variable: str, exponent: int) -> None:
        super().__init__(
            f"cannot evaluate {variable}^{exponent} at {variable}=0 (pole)"
        )
        self.variable = variable
        self.exponent = exponent


class PolynomialParseError(TMSVerifyError, ValueError):
    """Exception raised when canonical polynomial text cannot be parsed."""

    pass


class EnumerationBoundError(TMSVerifyError):
    """Exception raised when enumerate mode would exceed the configured bound."""

    def __init__(self, requested: int, bound: int) -> None:
        super().__init__(
            f"enumerate mode needs 2g ≤ {bound} but 2g = {requested}; "
            "use --mode closed_form or raise --enumerate-bound"
        )
        self.requested = requested
        self.bound = bound


class UnknownFormulaError(TMSVerifyError, ValueError):
    """Exception raised for a formula id the catalog does not know."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(f"unknown formula '{name}'; known formulas: {', '.join(known)}")
        self.name = name


class UnknownCheckError(TMSVerifyError, ValueError):
    """Exception raised for a check name the verifier does not know."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(f"unknown check '{name}'; known checks: {', '.join(known)}")
        self.name = name


class ConfigurationError(TMSVerifyError):
    """Exception raised for invalid settings, config files or run configurations."""

    pass
