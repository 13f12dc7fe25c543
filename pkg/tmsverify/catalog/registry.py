"""Formula identifiers, provenance records and lookup."""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

from tmsverify.algebra.laurent import LaurentPoly
from tmsverify.catalog import formulas
from tmsverify.core.exceptions import UnknownFormulaError
from tmsverify.schemas.enums import Side

FormulaValue = Union[LaurentPoly, int]


class FormulaId(str, Enum):
    """Identifiers of the closed forms (see docs/formulas.md)."""

    IE_DOL_SL2_KAPPA = "ie_dol_sl2_kappa"
    IE_BETTI_SL2_KAPPA = "ie_betti_sl2_kappa"
    E_BETTI_SL2_KAPPA_ORDINARY = "e_betti_sl2_kappa_ordinary"
    IE_DOL_FIXED_QUOTIENT = "ie_dol_fixed_quotient"
    IE_BETTI_FIXED_QUOTIENT = "ie_betti_fixed_quotient"
    PIE_DOL_SL2_KAPPA = "pie_dol_sl2_kappa"
    PIE_FIXED_QUOTIENT = "pie_fixed_quotient"
    FERMIONIC_SHIFT = "fermionic_shift"
    TOTAL_DIMENSION = "total_dimension"
    FIXED_LOCUS_DIMENSION = "fixed_locus_dimension"


@dataclass(frozen=True)
class FormulaArgs:
    """Arguments a formula may consume; each formula reads what it needs."""

    genus: int
    rank: int = 2
    gamma_is_trivial: bool = False


@dataclass(frozen=True)
class Formula:
    """A catalog entry: callable, value kind and provenance."""

    formula_id: FormulaId
    compute: Callable[[FormulaArgs], FormulaValue]
    provenance: str

    @property
    def is_polynomial(self) -> bool:
        return self.formula_id not in _INTEGER_FORMULAS

    def __call__(self, args: FormulaArgs) -> FormulaValue:
        return self.compute(args)


_INTEGER_FORMULAS = {
    FormulaId.FERMIONIC_SHIFT,
    FormulaId.TOTAL_DIMENSION,
    FormulaId.FIXED_LOCUS_DIMENSION,
}

CATALOG: dict[FormulaId, Formula] = {
    formula.formula_id: formula
    for formula in (
        Formula(
            FormulaId.IE_DOL_SL2_KAPPA,
            lambda a: formulas.ie_dol_sl2_kappa(a.genus),
            "Rank-two mirror symmetry: kappa-isotypic intersection E-polynomial of the "
            "Dolbeault SL2 moduli space, from the Prym quotient description of the fixed loci",
        ),
        Formula(
            FormulaId.IE_BETTI_SL2_KAPPA,
            lambda a: formulas.ie_betti_sl2_kappa(a.genus),
            "Rank-two mirror symmetry: kappa-isotypic intersection E-polynomial "
            "of the Betti SL2 moduli space, from the torus quotient description of the fixed loci",
        ),
        Formula(
            FormulaId.E_BETTI_SL2_KAPPA_ORDINARY,
            lambda a: formulas.e_betti_sl2_kappa_ordinary(a.genus),
            "Failure for ordinary cohomology: kappa-isotypic ordinary "
            "E-polynomial of the Betti SL2 moduli space, with q = uv",
        ),
        Formula(
            FormulaId.IE_DOL_FIXED_QUOTIENT,
            lambda a: formulas.ie_fixed_quotient(a.genus, Side.DOLBEAULT),
            "Rank-two mirror symmetry: IE of the Dolbeault fixed-locus quotient T*Prym/(Z/2), "
            "the kappa-part divided by (uv)^(2g-2)",
        ),
        Formula(
            FormulaId.IE_BETTI_FIXED_QUOTIENT,
            lambda a: formulas.ie_fixed_quotient(a.genus, Side.BETTI),
            "Rank-two mirror symmetry: IE of the torus quotient (C*)^(2g-2)/(Z/2), "
            "the kappa-part divided by (uv)^(2g-2)",
        ),
        Formula(
            FormulaId.PIE_DOL_SL2_KAPPA,
            lambda a: formulas.pie_dol_sl2_kappa(a.genus),
            "Perverse mirror symmetry: perverse filtration on the kappa-part "
            "concentrated in degree d - 2g + 2, realised by substitution",
        ),
        Formula(
            FormulaId.PIE_FIXED_QUOTIENT,
            lambda a: formulas.pie_fixed_quotient(a.genus),
            "Perverse mirror symmetry: perverse filtration on the fixed-locus "
            "quotient concentrated in degree d, realised by substitution",
        ),
        Formula(
            FormulaId.FERMIONIC_SHIFT,
            lambda a: formulas.fermionic_shift(a.genus, a.gamma_is_trivial),
            "Rank-two mirror symmetry: F(gamma) equals half of the codimension, 2g-2",
        ),
        Formula(
            FormulaId.TOTAL_DIMENSION,
            lambda a: formulas.total_dimension(a.rank, a.genus),
            "Perverse mirror symmetry: Relative Hard Lefschetz with dim = 2(r^2-1)(g-1)",
        ),
        Formula(
            FormulaId.FIXED_LOCUS_DIMENSION,
            lambda a: formulas.fixed_locus_dimension(a.genus),
            "Rank-two mirror symmetry: the Dolbeault fixed locus is the Z/2 quotient "
            "of the cotangent bundle of an abelian variety of dimension g-1",
        ),
    )
}


def get_formula(name: Union[str, FormulaId]) -> Formula:
    """
    Look up a catalog entry by identifier.

    Raises:
        UnknownFormulaError: If the identifier is not in the catalog
    """
    try:
        return CATALOG[FormulaId(name)]
    except ValueError as e:
        raise UnknownFormulaError(str(name), [f.value for f in FormulaId]) from e


def provenance(name: Union[str, FormulaId]) -> str:
    return get_formula(name).provenance
