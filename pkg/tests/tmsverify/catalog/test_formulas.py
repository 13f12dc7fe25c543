"""Tests for the closed-form catalog."""

import pytest
import sympy

from tmsverify.algebra import ONE, UV, LaurentPoly, evaluate, parse, power, specialize_q, to_sympy
from tmsverify.algebra.text import SYMBOLS
from tmsverify.catalog import (
    e_betti_sl2_kappa_ordinary,
    fermionic_shift,
    fixed_locus_dimension,
    ie_betti_sl2_kappa,
    ie_dol_sl2_kappa,
    ie_fixed_quotient,
    pie_dol_sl2_kappa,
    pie_fixed_quotient,
    total_dimension,
)
from tmsverify.core.exceptions import ContractViolation, GenusError
from tmsverify.schemas.enums import Side


def test_genus_two_values() -> None:
    """Test the g = 2 expansions."""
    assert ie_dol_sl2_kappa(2) == parse("u^4 v^4 + u^3 v^3")
    assert ie_betti_sl2_kappa(2) == parse("u^4 v^4 + u^2 v^2")
    assert e_betti_sl2_kappa_ordinary(2) == parse("u^4 v^4")
    assert ie_fixed_quotient(2, Side.DOLBEAULT) == parse("u^2 v^2 + u v")
    assert ie_fixed_quotient(2, Side.BETTI) == parse("u^2 v^2 + 1")
    assert pie_dol_sl2_kappa(2) == parse("u^4 v^4 q^6 + u^3 v^3 q^4")
    assert pie_fixed_quotient(2) == parse("u^2 v^2 q^4 + u v q^2")


def test_genus_three_dolbeault_kappa() -> None:
    """Test the g = 3 Dolbeault κ-part in canonical form."""
    assert str(ie_dol_sl2_kappa(3)) == "u^8 v^8 + u^8 v^6 + 4 * u^7 v^7 + u^6 v^8 + u^6 v^6"


@pytest.mark.parametrize("g", range(2, 7))
def test_dolbeault_kappa_against_sympy(g: int) -> None:
    """Test the Dolbeault κ-part against an independent sympy expansion."""
    u, v, _ = SYMBOLS
    n = g - 1
    expected = sympy.expand(
        sympy.Rational(1, 2)
        * (u * v) ** (3 * g - 3)
        * ((u + 1) ** n * (v + 1) ** n + (u - 1) ** n * (v - 1) ** n)
    )
    assert sympy.expand(to_sympy(ie_dol_sl2_kappa(g)) - expected) == 0


@pytest.mark.parametrize("g", range(2, 7))
def test_betti_kappa_against_sympy(g: int) -> None:
    """Test the Betti κ-part against an independent sympy expansion."""
    u, v, _ = SYMBOLS
    x = u * v
    n = 2 * g - 2
    expected = sympy.expand(sympy.Rational(1, 2) * x**n * ((x + 1) ** n + (x - 1) ** n))
    assert sympy.expand(to_sympy(ie_betti_sl2_kappa(g)) - expected) == 0


@pytest.mark.parametrize("g", range(2, 13))
def test_ordinary_gap_is_single_monomial(g: int) -> None:
    """Test IE_κ - E_κ on the Betti side is exactly (uv)^(2g-2)."""
    assert ie_betti_sl2_kappa(g) - e_betti_sl2_kappa_ordinary(g) == power(UV, 2 * g - 2)


@pytest.mark.parametrize("g", range(2, 9))
def test_perverse_polynomials_specialize_to_intersection_ones(g: int) -> None:
    """Test q := 1 recovers the intersection E-polynomials."""
    assert specialize_q(pie_dol_sl2_kappa(g)) == ie_dol_sl2_kappa(g)
    assert specialize_q(pie_fixed_quotient(g)) == ie_fixed_quotient(g, Side.DOLBEAULT)


@pytest.mark.parametrize("g", range(2, 9))
def test_values_have_integer_coefficients(g: int) -> None:
    """Test the halved sums are integral polynomials."""
    for p in (ie_dol_sl2_kappa(g), ie_betti_sl2_kappa(g), e_betti_sl2_kappa_ordinary(g)):
        assert p.is_polynomial()
        assert p.has_integer_coefficients()


@pytest.mark.parametrize("g", range(2, 8))
def test_fixed_quotient_point_count(g: int) -> None:
    """Test u = v = 1 gives 2^(2g-3) on the Dolbeault side."""
    assert evaluate(ie_fixed_quotient(g, Side.DOLBEAULT), 1, 1, 1) == 2 ** (2 * g - 3)


def test_kappa_piece_factors_through_fixed_quotient() -> None:
    """Test IE_κ = IE(fixed quotient)·(uv)^(2g-2) on both sides."""
    for g in range(2, 9):
        shift = power(UV, fermionic_shift(g, gamma_is_trivial=False))
        assert ie_dol_sl2_kappa(g) == ie_fixed_quotient(g, Side.DOLBEAULT) * shift
        assert ie_betti_sl2_kappa(g) == ie_fixed_quotient(g, Side.BETTI) * shift


def test_integer_formulas() -> None:
    """Test dimensions and the Fermionic shift."""
    assert fermionic_shift(4, gamma_is_trivial=False) == 6
    assert fermionic_shift(4, gamma_is_trivial=True) == 0
    assert total_dimension(2, 3) == 12
    assert total_dimension(3, 2) == 16
    assert fixed_locus_dimension(5) == 8


def test_total_dimension_rejects_rank_one() -> None:
    """Test r < 2 raises ContractViolation."""
    with pytest.raises(ContractViolation):
        total_dimension(1, 3)


@pytest.mark.parametrize(
    "formula",
    [ie_dol_sl2_kappa, ie_betti_sl2_kappa, e_betti_sl2_kappa_ordinary, pie_dol_sl2_kappa, pie_fixed_quotient],
)
def test_low_genus_rejected(formula: object) -> None:
    """Test g < 2 raises GenusError."""
    with pytest.raises(GenusError):
        formula(1)  # type: ignore[operator]


def test_results_are_shared_immutable_values() -> None:
    """Test memoized results are the same object and arithmetic does not mutate them."""
    first = ie_dol_sl2_kappa(4)
    assert ie_dol_sl2_kappa(4) is first
    before = str(first)
    _ = first + ONE
    assert str(first) == before
    assert isinstance(first, LaurentPoly)
