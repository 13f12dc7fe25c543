"""Closed-form polynomials stated for the rank-two mirror pair."""

from tmsverify.catalog.formulas import (
    e_betti_sl2_kappa_ordinary,
    fermionic_shift,
    fixed_locus_dimension,
    ie_betti_sl2_kappa,
    ie_dol_sl2_kappa,
    ie_fixed_quotient,
    ie_sl2_kappa,
    pie_dol_sl2_kappa,
    pie_fixed_quotient,
    total_dimension,
)
from tmsverify.catalog.registry import (
    CATALOG,
    Formula,
    FormulaArgs,
    FormulaId,
    get_formula,
    provenance,
)

__all__ = [
    "CATALOG",
    "Formula",
    "FormulaArgs",
    "FormulaId",
    "e_betti_sl2_kappa_ordinary",
    "fermionic_shift",
    "fixed_locus_dimension",
    "get_formula",
    "ie_betti_sl2_kappa",
    "ie_dol_sl2_kappa",
    "ie_fixed_quotient",
    "ie_sl2_kappa",
    "pie_dol_sl2_kappa",
    "pie_fixed_quotient",
    "provenance",
    "total_dimension",
]
