"""Closed-form polynomials for the rank-two SL2/PGL2 mirror pair, parametrised by genus."""

from fractions import Fraction
from functools import lru_cache

from tmsverify.algebra.laurent import (
    ONE,
    U,
    UV,
    V,
    LaurentPoly,
    mul,
    power,
    scale,
    substitute_scaled,
)
from tmsverify.core.exceptions import ContractViolation
from tmsverify.core.guards import require_genus
from tmsverify.schemas.enums import Side

HALF = Fraction(1, 2)


def _half_sum(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return scale(a + b, HALF)


def _torus_quotient(n: int, variable: LaurentPoly) -> LaurentPoly:
    # ½((x+1)^n + (x-1)^n)
    return _half_sum(power(variable + ONE, n), power(variable - ONE, n))


def _prym_quotient(n: int) -> LaurentPoly:
    # ½((u+1)^n (v+1)^n + (u-1)^n (v-1)^n)
    return _half_sum(
        mul(power(U + ONE, n), power(V + ONE, n)),
        mul(power(U - ONE, n), power(V - ONE, n)),
    )


@lru_cache(maxsize=128)
def ie_dol_sl2_kappa(g: int) -> LaurentPoly:
    """IE(M_Dol(C, SL2))_κ = ½ (uv)^(3g-3) ((u+1)^(g-1)(v+1)^(g-1) + (u-1)^(g-1)(v-1)^(g-1)), κ ≠ 1."""
    require_genus(g)
    return mul(power(UV, 3 * g - 3), _prym_quotient(g - 1))


@lru_cache(maxsize=128)
def ie_betti_sl2_kappa(g: int) -> LaurentPoly:
    """IE(M_B(C, SL2))_κ = ½ (uv)^(2g-2) ((uv+1)^(2g-2) + (uv-1)^(2g-2)), κ ≠ 1."""
    require_genus(g)
    return mul(power(UV, 2 * g - 2), _torus_quotient(2 * g - 2, UV))


def ie_sl2_kappa(g: int, side: Side) -> LaurentPoly:
    if side == Side.DOLBEAULT:
        return ie_dol_sl2_kappa(g)
    return ie_betti_sl2_kappa(g)


@lru_cache(maxsize=128)
def e_betti_sl2_kappa_ordinary(g: int) -> LaurentPoly:
    """Ordinary E(M_B(C, SL2))_κ = ½ q^(2g-2) ((q+1)^(2g-2) + (q-1)^(2g-2) - 2) with q = uv."""
    require_genus(g)
    n = 2 * g - 2
    bracket = power(UV + ONE, n) + power(UV - ONE, n) - LaurentPoly.constant(2)
    return scale(mul(power(UV, n), bracket), HALF)


@lru_cache(maxsize=256)
def ie_fixed_quotient(g: int, side: Side) -> LaurentPoly:
    """
    IE of the fixed-locus quotient M(C, SL2)_γ/Γ for γ ≠ 0.

    Dolbeault: (uv)^(g-1) · ½((u+1)^(g-1)(v+1)^(g-1) + (u-1)^(g-1)(v-1)^(g-1)).
    Betti: ½((uv+1)^(2g-2) + (uv-1)^(2g-2)).
    """
    require_genus(g)
    if side == Side.DOLBEAULT:
        return mul(power(UV, g - 1), _prym_quotient(g - 1))
    return _torus_quotient(2 * g - 2, UV)


def fermionic_shift(g: int, gamma_is_trivial: bool) -> int:
    """F(γ): 0 for the identity, otherwise half the codimension of the fixed locus, 2g-2."""
    require_genus(g)
    return 0 if gamma_is_trivial else 2 * g - 2


def total_dimension(r: int, g: int) -> int:
    """dim = 2(r²-1)(g-1), the complex dimension of M_Dol(C, SL_r)."""
    if r < 2:
        raise ContractViolation(f"rank must be ≥ 2 (got {r})")
    require_genus(g)
    return 2 * (r * r - 1) * (g - 1)


def fixed_locus_dimension(g: int) -> int:
    """Complex dimension of M_Dol(C, SL2)_γ for γ ≠ 0: T*Prym has dimension 2(g-1)."""
    require_genus(g)
    return 2 * g - 2


@lru_cache(maxsize=128)
def pie_dol_sl2_kappa(g: int) -> LaurentPoly:
    """
    Perverse IE(M_Dol(C, SL2))_κ for κ ≠ 1.

    The perverse filtration is concentrated in degree d - (2g-2); with a
    monomial u^a v^b sitting in degree a + b this is q^(-(2g-2))·IE(uq, vq).
    """
    shifted = substitute_scaled(ie_dol_sl2_kappa(g), True, True)
    return mul(LaurentPoly.monomial(0, 0, -(2 * g - 2)), shifted)


@lru_cache(maxsize=128)
def pie_fixed_quotient(g: int) -> LaurentPoly:
    """Perverse IE of the Dolbeault fixed-locus quotient: perversity equals degree, IE(uq, vq)."""
    return substitute_scaled(ie_fixed_quotient(g, Side.DOLBEAULT), True, True)
