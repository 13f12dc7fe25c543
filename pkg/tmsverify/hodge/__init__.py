"""Bigraded cohomology models of the fixed loci and their E-polynomials."""

from tmsverify.hodge.models import (
    POINT,
    abelian_variety_cohomology,
    anti_invariant_part,
    assign_perverse,
    betti_fixed_model,
    complex_dimension,
    dolbeault_fixed_model,
    e_polynomial,
    elliptic_curve,
    invariant_part,
    pie_polynomial,
    product,
    product_of,
    punctured_line,
    tate_twist,
    top_degree,
    torus_cohomology,
)
from tmsverify.hodge.spaces import BigradedSpace, CohClass, PerverseRule

__all__ = [
    "POINT",
    "BigradedSpace",
    "CohClass",
    "PerverseRule",
    "abelian_variety_cohomology",
    "anti_invariant_part",
    "assign_perverse",
    "betti_fixed_model",
    "complex_dimension",
    "dolbeault_fixed_model",
    "e_polynomial",
    "elliptic_curve",
    "invariant_part",
    "pie_polynomial",
    "product",
    "product_of",
    "punctured_line",
    "tate_twist",
    "top_degree",
    "torus_cohomology",
]
