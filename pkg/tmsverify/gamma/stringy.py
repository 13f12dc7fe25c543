"""Stringy and isotypic sums over Γ with the trivial contribution kept symbolic."""

import operator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Optional

import numpy as np
import structlog

from tmsverify.algebra.laurent import UV, UVQ, ZERO, LaurentPoly, mul, power, scale
from tmsverify.catalog.formulas import (
    fermionic_shift,
    ie_fixed_quotient,
    ie_sl2_kappa,
    pie_dol_sl2_kappa,
    pie_fixed_quotient,
)
from tmsverify.core.config import get_settings
from tmsverify.core.exceptions import ContractViolation, EnumerationBoundError
from tmsverify.core.guards import require_genus
from tmsverify.gamma.group import GroupElement, bit_rows, group_order, swap_halves
from tmsverify.schemas.enums import Mode, Side

logger = structlog.get_logger(__name__)

ElementTerm = Callable[[GroupElement], LaurentPoly]
"""Contribution of one nontrivial group element (or of the character it corresponds to)."""

RowMap = Callable[[np.ndarray, int], np.ndarray]


@dataclass(frozen=True)
class OpaqueSum:
    """
    known + opaque_multiplicity · T, where T stands for IE(M(C, SL2)/Γ).

    T has no closed form here; it only ever cancels against another T.
    """

    known: LaurentPoly
    opaque_multiplicity: int = 0

    @classmethod
    def zero(cls) -> "OpaqueSum":
        return cls(known=ZERO, opaque_multiplicity=0)

    def __add__(self, other: "OpaqueSum") -> "OpaqueSum":
        if not isinstance(other, OpaqueSum):
            return NotImplemented
        return OpaqueSum(
            known=self.known + other.known,
            opaque_multiplicity=self.opaque_multiplicity + other.opaque_multiplicity,
        )

    def __mul__(self, factor: int) -> "OpaqueSum":
        if not isinstance(factor, int) or isinstance(factor, bool):
            return NotImplemented
        return OpaqueSum(known=scale(self.known, factor), opaque_multiplicity=self.opaque_multiplicity * factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.known} + {self.opaque_multiplicity}·T"


@dataclass(frozen=True)
class EnumerationOptions:
    bound: int
    chunk_size: int
    sample_size: int
    workers: int

    @classmethod
    def from_settings(cls) -> "EnumerationOptions":
        settings = get_settings()
        return cls(
            bound=settings.enumerate_bound,
            chunk_size=settings.enumerate_chunk_size,
            sample_size=settings.enumerate_sample_size,
            workers=settings.enumerate_workers,
        )


# Term handles


def fixed_locus_term(g: int, side: Side) -> ElementTerm:
    """IE(M_γ/Γ)·(uv)^F(γ) for a nontrivial γ."""
    require_genus(g)

    def term(element: GroupElement) -> LaurentPoly:
        _require_nontrivial(element, g)
        shift = fermionic_shift(g, gamma_is_trivial=False)
        return mul(ie_fixed_quotient(g, side), power(UV, shift))

    return term


def perverse_fixed_locus_term(g: int) -> ElementTerm:
    """PIE(M_γ/Γ)·(uvq)^F(γ) for a nontrivial γ (Dolbeault side)."""
    require_genus(g)

    def term(element: GroupElement) -> LaurentPoly:
        _require_nontrivial(element, g)
        shift = fermionic_shift(g, gamma_is_trivial=False)
        return mul(pie_fixed_quotient(g), power(UVQ, shift))

    return term


def _constant_term(g: int, value: Callable[[], LaurentPoly]) -> ElementTerm:
    def term(element: GroupElement) -> LaurentPoly:
        _require_nontrivial(element, g)
        return value()

    return term


def _require_nontrivial(element: GroupElement, g: int) -> None:
    if element.genus != g:
        raise ContractViolation(f"element of genus {element.genus} used in a genus {g} sum")
    if element.is_identity():
        raise ContractViolation("the identity contributes the opaque term, not a polynomial")


# Sums


def stringy_sum(
    g: int,
    side: Side,
    mode: Mode = Mode.CLOSED_FORM,
    term: Optional[ElementTerm] = None,
    options: Optional[EnumerationOptions] = None,
) -> OpaqueSum:
    """
    Σ_γ IE(M_γ/Γ)(uv)^F(γ) over Γ = (Z/2)^(2g), with the γ = 0 summand opaque.

    Args:
        g: Genus
        side: Dolbeault or Betti fixed loci
        mode: closed_form multiplies one representative term by 2^(2g) - 1;
            enumerate walks every element
        term: Per-element contribution; defaults to fixed_locus_term(g, side)
        options: Enumeration limits; defaults to the global settings

    Returns:
        OpaqueSum with opaque multiplicity 1

    Raises:
        EnumerationBoundError: If enumerate mode is asked for 2g above the bound
    """
    require_genus(g)
    handle = term or fixed_locus_term(g, side)
    return _group_sum(g, mode, handle, _identity_rows, options, label="stringy")


def isotypic_sum(
    g: int,
    side: Side,
    mode: Mode = Mode.CLOSED_FORM,
    options: Optional[EnumerationOptions] = None,
) -> OpaqueSum:
    """Σ_κ IE(M(C, SL2))_κ; enumerate mode walks characters and classifies w⁻¹(κ)."""
    require_genus(g)
    handle = _constant_term(g, lambda: ie_sl2_kappa(g, side))
    return _group_sum(g, mode, handle, swap_halves, options, label="isotypic")


def stringy_perverse_sum(
    g: int,
    mode: Mode = Mode.CLOSED_FORM,
    term: Optional[ElementTerm] = None,
    options: Optional[EnumerationOptions] = None,
) -> OpaqueSum:
    """Σ_γ PIE(M_γ/Γ)(uvq)^F(γ), Dolbeault side, γ = 0 opaque."""
    require_genus(g)
    handle = term or perverse_fixed_locus_term(g)
    return _group_sum(g, mode, handle, _identity_rows, options, label="stringy_perverse")


def isotypic_perverse_sum(
    g: int,
    mode: Mode = Mode.CLOSED_FORM,
    options: Optional[EnumerationOptions] = None,
) -> OpaqueSum:
    """Σ_κ PIE(M_Dol(C, SL2))_κ with κ = 1 opaque."""
    require_genus(g)
    handle = _constant_term(g, lambda: pie_dol_sl2_kappa(g))
    return _group_sum(g, mode, handle, swap_halves, options, label="isotypic_perverse")


def _identity_rows(rows: np.ndarray, g: int) -> np.ndarray:
    return rows


def _group_sum(
    g: int,
    mode: Mode,
    term: ElementTerm,
    to_elements: RowMap,
    options: Optional[EnumerationOptions],
    label: str,
) -> OpaqueSum:
    if mode == Mode.CLOSED_FORM:
        representative = term(GroupElement.basis(g, 0))
        return OpaqueSum(known=scale(representative, group_order(g) - 1), opaque_multiplicity=1)
    return _enumerate(g, term, to_elements, options or EnumerationOptions.from_settings(), label)


def _enumerate(
    g: int,
    term: ElementTerm,
    to_elements: RowMap,
    options: EnumerationOptions,
    label: str,
) -> OpaqueSum:
    if 2 * g > options.bound:
        raise EnumerationBoundError(requested=2 * g, bound=options.bound)

    order = group_order(g)
    starts = range(0, order, options.chunk_size)
    log = logger.bind(sum=label, genus=g, elements=order, chunks=len(starts))
    log.debug("Enumeration started")

    def run(start: int) -> OpaqueSum:
        stop = min(start + options.chunk_size, order)
        partial = _enumerate_chunk(g, start, stop, term, to_elements, options.sample_size)
        log.debug(
            "Chunk classified",
            start=start,
            stop=stop,
            trivial=partial.opaque_multiplicity,
        )
        return partial

    if options.workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            partials = list(pool.map(run, starts))
    else:
        partials = [run(start) for start in starts]

    total = reduce(operator.add, partials, OpaqueSum.zero())
    log.debug("Enumeration finished", opaque_multiplicity=total.opaque_multiplicity)
    return total


def _enumerate_chunk(
    g: int,
    start: int,
    stop: int,
    term: ElementTerm,
    to_elements: RowMap,
    sample_size: int,
) -> OpaqueSum:
    elements = to_elements(bit_rows(g, start, stop), g)
    trivial = ~elements.any(axis=1)
    nontrivial = elements[~trivial]
    trivial_count = int(trivial.sum())
    if len(nontrivial) == 0:
        return OpaqueSum(known=ZERO, opaque_multiplicity=trivial_count)

    picks = np.unique(np.linspace(0, len(nontrivial) - 1, num=min(sample_size, len(nontrivial))).astype(np.int64))
    sampled = [term(GroupElement.from_array(nontrivial[i])) for i in picks]
    first = sampled[0]
    for index, value in zip(picks[1:], sampled[1:]):
        if value != first:
            element = GroupElement.from_array(nontrivial[index])
            raise ContractViolation(
                f"nontrivial elements disagree: term at {element} differs from the chunk's first sample"
            )
    return OpaqueSum(known=scale(first, len(nontrivial)), opaque_multiplicity=trivial_count)
