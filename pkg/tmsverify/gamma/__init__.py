"""The 2-torsion group Γ, its Weil pairing and sums over it."""

from tmsverify.gamma.group import (
    GroupCharacter,
    GroupElement,
    all_elements,
    bit_rows,
    character_to_element,
    element_to_character,
    group_order,
    pairing_matrix,
    radical,
    swap_halves,
    symplectic_form,
    weil_pairing,
)
from tmsverify.gamma.stringy import (
    ElementTerm,
    EnumerationOptions,
    OpaqueSum,
    fixed_locus_term,
    isotypic_perverse_sum,
    isotypic_sum,
    perverse_fixed_locus_term,
    stringy_perverse_sum,
    stringy_sum,
)

__all__ = [
    "ElementTerm",
    "EnumerationOptions",
    "GroupCharacter",
    "GroupElement",
    "OpaqueSum",
    "all_elements",
    "bit_rows",
    "character_to_element",
    "element_to_character",
    "fixed_locus_term",
    "group_order",
    "isotypic_perverse_sum",
    "isotypic_sum",
    "pairing_matrix",
    "perverse_fixed_locus_term",
    "radical",
    "stringy_perverse_sum",
    "stringy_sum",
    "swap_halves",
    "symplectic_form",
    "weil_pairing",
]
