from fractions import Fraction

from hypothesis import strategies as st

from hzfock.series import LaurentSeries

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=9)
nonzero = rationals.filter(bool)


@st.composite
def series(draw, vars=("x",), min_lower=-2, max_lower=2, max_span=5):
    lower = tuple(draw(st.integers(min_lower, max_lower)) for _ in vars)
    upper = tuple(lo + draw(st.integers(0, max_span)) for lo in lower)
    n_terms = draw(st.integers(0, 6))
    coeffs = {}
    for _ in range(n_terms):
        e = tuple(draw(st.integers(lo, up)) for lo, up in zip(lower, upper))
        coeffs[e] = draw(rationals)
    return LaurentSeries(vars, coeffs, lower, upper)


@st.composite
def unit_series(draw, vars=("x",), max_span=6):
    """c * x^e * (1 + h) with h in the positive-exponent ideal."""
    e = tuple(draw(st.integers(-2, 2)) for _ in vars)
    upper = tuple(x + draw(st.integers(0, max_span)) for x in e)
    coeffs = {e: draw(nonzero)}
    for _ in range(draw(st.integers(0, 5))):
        k = tuple(draw(st.integers(x, up)) for x, up in zip(e, upper))
        if k != e:
            coeffs[k] = draw(rationals)
    return LaurentSeries(vars, coeffs, e, upper)


def from_list(coeffs, order, var="x", lower=0):
    """Univariate series sum coeffs[k] x^(lower+k), truncated at ``order``."""
    return LaurentSeries(
        (var,),
        {(lower + k,): Fraction(c) for k, c in enumerate(coeffs) if lower + k <= order},
        (lower,),
        (order,),
    )
