"""
Cohomology models of the fixed loci, built from first principles.

Tori and abelian varieties are assembled as Künneth products of their
one-dimensional building blocks (the punctured line and an elliptic curve),
so the E-polynomials extracted here are independent of the closed forms in
tmsverify.catalog.

Conventions:
- compactly supported cohomology throughout;
- every class carries the character of the inversion involution, and the
  intersection cohomology of a quotient by inversion is the invariant part
  (the quotients only have quotient singularities);
- models are pure: a class of Hodge type (p, q) sits in degree p + q, except
  for the torus whose classes of type (j, j) sit in degree n + j.
"""

from functools import lru_cache
from typing import Iterable

from tmsverify.algebra.laurent import LaurentPoly
from tmsverify.core.exceptions import ContractViolation
from tmsverify.core.guards import require_genus, require_non_negative
from tmsverify.hodge.spaces import BigradedSpace, CohClass, PerverseRule

POINT = BigradedSpace(classes=(CohClass(p=0, q=0, d=0),), label="point")


def punctured_line() -> BigradedSpace:
    """H*_c(C*): a degree-1 class negated by inversion and the degree-2 class of type (1,1)."""
    return BigradedSpace(
        classes=(
            CohClass(p=0, q=0, d=1, sign=-1),
            CohClass(p=1, q=1, d=2, sign=1),
        ),
        label="C*",
    )


def elliptic_curve() -> BigradedSpace:
    """H*(E) with inversion acting by -1 on degree 1."""
    return BigradedSpace(
        classes=(
            CohClass(p=0, q=0, d=0, sign=1),
            CohClass(p=1, q=0, d=1, sign=-1),
            CohClass(p=0, q=1, d=1, sign=-1),
            CohClass(p=1, q=1, d=2, sign=1),
        ),
        label="E",
    )


def product(a: BigradedSpace, b: BigradedSpace) -> BigradedSpace:
    """
    Künneth product.

    Hodge types, degrees and perverse degrees add; involution characters
    multiply (the involution acts diagonally). A perverse degree survives only
    when both factors carry one.
    """
    classes = [
        CohClass(
            p=x.p + y.p,
            q=x.q + y.q,
            d=x.d + y.d,
            k=x.k + y.k if x.k is not None and y.k is not None else None,
            sign=x.sign * y.sign,
            mult=x.mult * y.mult,
        )
        for x in a.classes
        for y in b.classes
    ]
    return BigradedSpace(classes=tuple(classes), label=f"{a.label} × {b.label}")


def product_of(spaces: Iterable[BigradedSpace], label: str | None = None) -> BigradedSpace:
    result = POINT
    for space in spaces:
        result = product(result, space)
    return result.model_copy(update={"label": label}) if label else result


@lru_cache(maxsize=64)
def torus_cohomology(n: int) -> BigradedSpace:
    """H*_c((C*)^n): classes indexed by subsets S, type (|S|,|S|), degree n+|S|, sign (-1)^(n-|S|)."""
    require_non_negative(n, "n")
    return product_of((punctured_line() for _ in range(n)), label=f"(C*)^{n}")


@lru_cache(maxsize=64)
def abelian_variety_cohomology(n: int) -> BigradedSpace:
    """H* of an n-dimensional abelian variety: type (r,s) with multiplicity C(n,r)·C(n,s)."""
    require_non_negative(n, "n")
    return product_of((elliptic_curve() for _ in range(n)), label=f"abelian variety of dimension {n}")


def tate_twist(s: BigradedSpace, m: int) -> BigradedSpace:
    """Product with an affine factor C^m: (p, q, d) -> (p+m, q+m, d+2m)."""
    require_non_negative(m, "m")
    if m == 0:
        return s
    return BigradedSpace(
        classes=tuple(
            c.model_copy(update={"p": c.p + m, "q": c.q + m, "d": c.d + 2 * m})
            for c in s.classes
        ),
        label=f"{s.label} × C^{m}",
    )


def invariant_part(s: BigradedSpace) -> BigradedSpace:
    """Classes fixed by the involution, i.e. the cohomology of the quotient."""
    return BigradedSpace(
        classes=tuple(c for c in s.classes if c.sign == 1),
        label=f"({s.label})/(Z/2)",
    )


def anti_invariant_part(s: BigradedSpace) -> BigradedSpace:
    return BigradedSpace(
        classes=tuple(c for c in s.classes if c.sign == -1),
        label=f"({s.label})^-",
    )


def e_polynomial(s: BigradedSpace) -> LaurentPoly:
    """Σ mult·(-1)^d·u^p v^q."""
    terms: dict[tuple[int, int, int], int] = {}
    for c in s.classes:
        key = (c.p, c.q, 0)
        terms[key] = terms.get(key, 0) + (-1) ** c.d * c.mult
    return LaurentPoly(terms)


def assign_perverse(s: BigradedSpace, rule: PerverseRule) -> BigradedSpace:
    """Give every class the perverse degree k = d - rule.offset."""
    return BigradedSpace(
        classes=tuple(c.model_copy(update={"k": c.d - rule.offset}) for c in s.classes),
        label=s.label,
    )


def pie_polynomial(s: BigradedSpace) -> LaurentPoly:
    """
    Σ mult·(-1)^d·u^p v^q q^k.

    Raises:
        ContractViolation: If some class has no perverse degree
    """
    terms: dict[tuple[int, int, int], int] = {}
    for c in s.classes:
        if c.k is None:
            raise ContractViolation(
                f"class (p={c.p}, q={c.q}, d={c.d}) of '{s.label}' has no perverse degree; "
                "call assign_perverse first"
            )
        key = (c.p, c.q, c.k)
        terms[key] = terms.get(key, 0) + (-1) ** c.d * c.mult
    return LaurentPoly(terms)


def top_degree(s: BigradedSpace) -> int:
    if not s.classes:
        raise ContractViolation(f"'{s.label}' has no classes")
    return max(c.d for c in s.classes)


def complex_dimension(s: BigradedSpace) -> int:
    """Complex dimension read off the top compactly supported degree."""
    return top_degree(s) // 2


@lru_cache(maxsize=64)
def dolbeault_fixed_model(g: int) -> BigradedSpace:
    """
    Model of the Dolbeault fixed locus quotient for a nontrivial γ.

    The fixed locus is T*Prym = Prym × C^(g-1) with Prym of dimension g-1,
    divided by the inversion of the group law.

    Raises:
        GenusError: If g < 2
    """
    require_genus(g)
    n = g - 1
    model = invariant_part(tate_twist(abelian_variety_cohomology(n), n))
    return model.model_copy(update={"label": f"T*Prym/(Z/2), g={g}"})


@lru_cache(maxsize=64)
def betti_fixed_model(g: int) -> BigradedSpace:
    """
    Model of the Betti fixed locus quotient (C*)^(2g-2)/(Z/2) for a nontrivial γ.

    Raises:
        GenusError: If g < 2
    """
    require_genus(g)
    model = invariant_part(torus_cohomology(2 * g - 2))
    return model.model_copy(update={"label": f"(C*)^{2 * g - 2}/(Z/2), g={g}"})
