"""Identity checks."""

from tmsverify.verification.checks import (
    PROVENANCE,
    check_fermionic_shift,
    check_oracle_agreement,
    check_ordinary_failure,
    check_perverse_kappa,
    check_perverse_total,
    check_q1_specialization,
    check_rhl_kappa,
    check_rhl_symmetry,
    check_tms_kappa,
    check_tms_total,
)

__all__ = [
    "PROVENANCE",
    "check_fermionic_shift",
    "check_oracle_agreement",
    "check_ordinary_failure",
    "check_perverse_kappa",
    "check_perverse_total",
    "check_q1_specialization",
    "check_rhl_kappa",
    "check_rhl_symmetry",
    "check_tms_kappa",
    "check_tms_total",
]
