from hypothesis import strategies as st

from sl21inv.ring import ColorForm, LaurentPoly

exps = st.lists(st.integers(-6, 6), min_size=1, max_size=3)


@st.composite
def polys(draw, nvars=3, max_terms=5):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(-5, 5)] * nvars), st.integers(-7, 7), max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def color_forms(draw, nvars=3):
    lin = draw(st.lists(st.tuples(st.integers(1, nvars), st.integers(-3, 3)), max_size=3))
    return ColorForm(draw(st.integers(-4, 4)), tuple(lin))


@st.composite
def generic_forms(draw, nvars=3):
    """Forms with a nonzero linear part (never atypical)."""
    i = draw(st.integers(1, nvars))
    c = draw(st.integers(1, 3)) * draw(st.sampled_from([1, -1]))
    return ColorForm(draw(st.integers(-3, 3)), ((i, c),))
