"""Canonical text form of Laurent polynomials (the golden-file contract)."""

import re
from fractions import Fraction

import sympy

from tmsverify.algebra.laurent import VARIABLES, Exponent, LaurentPoly
from tmsverify.core.exceptions import PolynomialParseError

_TERM_SEPARATOR = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^([uvq])(?:\^(-?\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def _format_monomial(exponent: Exponent) -> str:
    factors = []
    for variable, e in zip(VARIABLES, exponent):
        if e == 1:
            factors.append(variable)
        elif e:
            factors.append(f"{variable}^{e}")
    return " ".join(factors)


def _format_term(exponent: Exponent, magnitude: Fraction) -> str:
    monomial = _format_monomial(exponent)
    if not monomial:
        return str(magnitude)
    if magnitude == 1:
        return monomial
    return f"{magnitude} * {monomial}"


def serialize(p: LaurentPoly) -> str:
    """
    Render in canonical form, e.g. ``u^4 v^4 - 2 * u^3 v^3 q + 1/2``.

    Terms appear in descending lexicographic (e_u, e_v, e_q) order; unit
    coefficients and zero exponents are omitted and exponent 1 is written as
    the bare variable. The zero polynomial renders as ``0``.
    """
    terms = p.terms()
    if not terms:
        return "0"
    pieces: list[str] = []
    for index, (exponent, coeff) in enumerate(terms):
        text = _format_term(exponent, abs(coeff))
        if index == 0:
            pieces.append(f"-{text}" if coeff < 0 else text)
        else:
            pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
    return "".join(pieces)


def _parse_monomial(text: str) -> tuple[int, int, int]:
    exponents = dict.fromkeys(VARIABLES, 0)
    for factor in text.split():
        match = _FACTOR.match(factor)
        if not match:
            raise PolynomialParseError(f"bad factor '{factor}'")
        variable, e = match.group(1), match.group(2)
        exponents[variable] += int(e) if e is not None else 1
    return exponents["u"], exponents["v"], exponents["q"]


def _parse_term(text: str) -> tuple[tuple[int, int, int], Fraction]:
    text = text.strip()
    if not text:
        raise PolynomialParseError("empty term")
    if " * " in text:
        coeff_text, monomial_text = text.split(" * ", 1)
        coeff_text = coeff_text.strip()
        if not _NUMBER.match(coeff_text):
            raise PolynomialParseError(f"bad coefficient '{coeff_text}'")
        return _parse_monomial(monomial_text), Fraction(coeff_text)
    if _NUMBER.match(text):
        return (0, 0, 0), Fraction(text)
    return _parse_monomial(text), Fraction(1)


def parse(text: str) -> LaurentPoly:
    """
    Parse the canonical form produced by serialize.

    Raises:
        PolynomialParseError: If the text is not in canonical form
    """
    body = text.strip()
    if not body:
        raise PolynomialParseError("empty polynomial text")
    if body == "0":
        return LaurentPoly.zero()

    sign = 1
    if body.startswith("-"):
        sign = -1
        body = body[1:].lstrip()

    parts = _TERM_SEPARATOR.split(body)
    accumulated: dict[tuple[int, int, int], Fraction] = {}
    signs = [sign] + [1 if op == "+" else -1 for op in parts[1::2]]
    for term_sign, term_text in zip(signs, parts[0::2]):
        try:
            exponent, coeff = _parse_term(term_text)
        except ZeroDivisionError as e:
            raise PolynomialParseError(f"zero denominator in '{term_text}'") from e
        accumulated[exponent] = accumulated.get(exponent, Fraction(0)) + term_sign * coeff
    return LaurentPoly(accumulated)


SYMBOLS = sympy.symbols("u v q")


def to_sympy(p: LaurentPoly) -> sympy.Expr:
    """Convert to a sympy expression in the symbols u, v, q."""
    u, v, q = SYMBOLS
    return sympy.Add(
        *(
            sympy.Rational(coeff.numerator, coeff.denominator) * u**a * v**b * q**c
            for (a, b, c), coeff in p.terms()
        )
    )


def from_sympy(expr: sympy.Expr) -> LaurentPoly:
    """
    Convert an expanded sympy Laurent polynomial in u, v, q.

    Raises:
        PolynomialParseError: If the expression has non-rational coefficients
            or is not a Laurent polynomial in u, v, q
    """
    u, v, q = SYMBOLS
    expanded = sympy.expand(expr)
    terms: dict[tuple[int, int, int], Fraction] = {}
    for term in sympy.Add.make_args(expanded):
        coeff, monomial = term.as_coeff_Mul()
        powers = monomial.as_powers_dict() if monomial != 1 else {}
        exponents = {u: 0, v: 0, q: 0}
        for base, e in powers.items():
            if base not in exponents or not e.is_Integer:
                raise PolynomialParseError(f"not a Laurent monomial in u, v, q: {term}")
            exponents[base] += int(e)
        if not coeff.is_Rational:
            raise PolynomialParseError(f"non-rational coefficient: {coeff}")
        key = (exponents[u], exponents[v], exponents[q])
        terms[key] = terms.get(key, Fraction(0)) + Fraction(int(coeff.p), int(coeff.q))
    return LaurentPoly(terms)


def pretty(p: LaurentPoly) -> str:
    """Two-dimensional rendering through sympy's pretty printer."""
    return sympy.pretty(to_sympy(p), order="lex", use_unicode=True)
