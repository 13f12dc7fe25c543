"""Enumerations shared by the library and the command line."""

from enum import Enum


class Side(str, Enum):
    """Moduli space realisation an identity is checked on."""

    DOLBEAULT = "dolbeault"
    BETTI = "betti"


class Mode(str, Enum):
    """How sums over the group Γ are assembled."""

    CLOSED_FORM = "closed_form"
    ENUMERATE = "enumerate"


class OutputFormat(str, Enum):
    """Report output formats."""

    TABLE = "table"
    JSON = "json"


class ShowFormat(str, Enum):
    """Polynomial output formats for ``show``."""

    PRETTY = "pretty"
    CANONICAL = "canonical"
    JSON = "json"


class CheckName(str, Enum):
    """Identity checks, in sweep order."""

    TMS_KAPPA = "tms-kappa"
    TMS_TOTAL = "tms-total"
    ORDINARY_FAILURE = "ordinary-failure"
    PERVERSE_KAPPA = "perverse-kappa"
    PERVERSE_TOTAL = "perverse-total"
    RHL_KAPPA = "rhl-kappa"
    Q1_SPECIALIZATION = "q1-specialization"
    ORACLE_AGREEMENT = "oracle-agreement"
    FERMIONIC_SHIFT = "fermionic-shift"
