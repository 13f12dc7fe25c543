"""Exact sparse Laurent polynomials in u, v, q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, NamedTuple, Union

from tmsverify.core.exceptions import ContractViolation, PoleError
from tmsverify.core.guards import require_non_negative

Coefficient = Union[int, Fraction, Rational]

VARIABLES = ("u", "v", "q")


class Exponent(NamedTuple):
    """Exponents of a monomial u^e_u v^e_v q^e_q; ordered lexicographically."""

    e_u: int
    e_v: int
    e_q: int


def _as_fraction(value: Coefficient) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ContractViolation(f"coefficients must be exact rationals, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise ContractViolation(f"coefficients must be exact rationals, got {value!r}")


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial with rational coefficients.

    Terms are stored as a mapping Exponent -> Fraction with no zero coefficient,
    so two polynomials are equal exactly when their term mappings are equal.
    Iteration yields terms in canonical order: descending lexicographic on
    (e_u, e_v, e_q).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], Coefficient] | None = None) -> None:
        canonical: dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            if len(exponent) != 3:
                raise ContractViolation(f"exponent must have three entries, got {exponent!r}")
            value = _as_fraction(coeff)
            if value:
                canonical[Exponent(*(int(e) for e in exponent))] = value
        self._terms = canonical
        self._hash: int | None = None

    @classmethod
    def _from_raw(cls, raw: dict[tuple[int, int, int], Fraction]) -> LaurentPoly:
        # raw keys are trusted int triples, values Fractions; only zeros are dropped
        poly = cls.__new__(cls)
        poly._terms = {Exponent(*key): value for key, value in raw.items() if value}
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._from_raw({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Coefficient) -> LaurentPoly:
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, e_u: int = 0, e_v: int = 0, e_q: int = 0, coeff: Coefficient = 1) -> LaurentPoly:
        return cls({(e_u, e_v, e_q): coeff})

    # Inspection

    def terms(self) -> list[tuple[Exponent, Fraction]]:
        """Return the terms in canonical order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, e_u: int = 0, e_v: int = 0, e_q: int = 0) -> Fraction:
        return self._terms.get(Exponent(e_u, e_v, e_q), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(min(exponent) >= 0 for exponent in self._terms)

    def has_integer_coefficients(self) -> bool:
        return all(coeff.denominator == 1 for coeff in self._terms.values())

    def total_degree(self) -> int | None:
        """Largest e_u + e_v + e_q over the terms; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(exponent) for exponent in self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to their int/Fraction value, so hash like it
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and (0, 0, 0) in self._terms:
                self._hash = hash(self._terms[(0, 0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Arithmetic

    def __add__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return add(self, other_poly)

    __radd__ = __add__

    def __sub__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return sub(self, other_poly)

    def __rsub__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return sub(other_poly, self)

    def __neg__(self) -> LaurentPoly:
        return neg(self)

    def __mul__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return mul(self, other_poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        return power(self, n)

    def __str__(self) -> str:
        from tmsverify.algebra.text import serialize

        return serialize(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _coerce(value: object) -> LaurentPoly | None:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentPoly.constant(value)
    return None


U = LaurentPoly.monomial(1, 0, 0)
V = LaurentPoly.monomial(0, 1, 0)
Q = LaurentPoly.monomial(0, 0, 1)
UV = LaurentPoly.monomial(1, 1, 0)
UVQ = LaurentPoly.monomial(1, 1, 1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Coefficientwise sum."""
    result: dict[tuple[int, int, int], Fraction] = dict(a._terms)
    for exponent, coeff in b._terms.items():
        result[exponent] = result.get(exponent, Fraction(0)) + coeff
    return LaurentPoly._from_raw(result)


def neg(a: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._from_raw({exponent: -coeff for exponent, coeff in a._terms.items()})


def sub(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return add(a, neg(b))


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Convolution product."""
    result: dict[tuple[int, int, int], Fraction] = {}
    for (au, av, aq), ca in a._terms.items():
        for (bu, bv, bq), cb in b._terms.items():
            key = (au + bu, av + bv, aq + bq)
            result[key] = result.get(key, Fraction(0)) + ca * cb
    return LaurentPoly._from_raw(result)


def scale(a: LaurentPoly, factor: Coefficient) -> LaurentPoly:
    value = _as_fraction(factor)
    return LaurentPoly._from_raw({exponent: coeff * value for exponent, coeff in a._terms.items()})


def power(a: LaurentPoly, n: int) -> LaurentPoly:
    """
    Raise to a non-negative integer power by repeated squaring.

    Raises:
        ContractViolation: If n is negative
    """
    require_non_negative(n, "exponent")
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def substitute_scaled(p: LaurentPoly, scale_u_by_q: bool, scale_v_by_q: bool) -> LaurentPoly:
    """Substitute u -> uq and/or v -> vq: u^a v^b q^c maps to u^a v^b q^(c + a·[u] + b·[v])."""
    fu = 1 if scale_u_by_q else 0
    fv = 1 if scale_v_by_q else 0
    return LaurentPoly._from_raw(
        {(a, b, c + a * fu + b * fv): coeff for (a, b, c), coeff in p._terms.items()}
    )


def rhl_transform(p: LaurentPoly, dim: int) -> LaurentPoly:
    """
    Relative Hard Lefschetz transform (uvq)^dim · p(u, v, 1/(uvq)).

    Each term u^a v^b q^c maps to u^(dim+a-c) v^(dim+b-c) q^(dim-c). Applying
    the transform twice multiplies by (uv)^dim, so it is an involution only
    for dim = 0.
    """
    require_non_negative(dim, "dim")
    return LaurentPoly._from_raw(
        {
            (dim + a - c, dim + b - c, dim - c): coeff
            for (a, b, c), coeff in p._terms.items()
        }
    )


def _power_of(value: Fraction, exponent: int, variable: str) -> Fraction:
    if exponent < 0 and value == 0:
        raise PoleError(variable, exponent)
    return value**exponent


def evaluate(p: LaurentPoly, u0: Coefficient, v0: Coefficient, q0: Coefficient) -> Fraction:
    """
    Evaluate exactly at a rational point.

    Raises:
        PoleError: If a negative exponent meets a zero value
    """
    point = (_as_fraction(u0), _as_fraction(v0), _as_fraction(q0))
    total = Fraction(0)
    for exponent, coeff in p._terms.items():
        term = coeff
        for variable, value, e in zip(VARIABLES, point, exponent):
            if e:
                term *= _power_of(value, e, variable)
        total += term
    return total


def specialize_q(p: LaurentPoly, q0: Coefficient = 1) -> LaurentPoly:
    """Set q to a rational value, keeping u and v symbolic."""
    value = _as_fraction(q0)
    result: dict[tuple[int, int, int], Fraction] = {}
    for (a, b, c), coeff in p._terms.items():
        key = (a, b, 0)
        result[key] = result.get(key, Fraction(0)) + coeff * _power_of(value, c, "q")
    return LaurentPoly._from_raw(result)
