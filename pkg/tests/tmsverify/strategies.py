"""Hypothesis strategies for Laurent polynomials and group elements."""

from hypothesis import strategies as st

from tmsverify.algebra import LaurentPoly
from tmsverify.gamma import GroupElement

exponents = st.tuples(
    st.integers(min_value=-3, max_value=4),
    st.integers(min_value=-3, max_value=4),
    st.integers(min_value=-3, max_value=4),
)

coefficients = st.one_of(
    st.integers(min_value=-6, max_value=6),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
).filter(lambda c: c != 0)

polynomials = st.dictionaries(exponents, coefficients, max_size=5).map(LaurentPoly)

genuine_polynomials = st.dictionaries(
    st.tuples(
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=0, max_value=4),
    ),
    st.integers(min_value=-6, max_value=6),
    max_size=5,
).map(LaurentPoly)

nonzero_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(
    lambda x: x != 0
)


def group_elements(g: int) -> st.SearchStrategy[GroupElement]:
    return st.lists(st.integers(min_value=0, max_value=1), min_size=2 * g, max_size=2 * g).map(
        lambda bits: GroupElement(bits=tuple(bits))
    )