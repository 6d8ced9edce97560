from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hzfock.errors import NonInvertibleError, WindowError
from hzfock.series import (
    LaurentSeries,
    add,
    coefficient,
    cosh_half_series,
    invert,
    mul,
    pow,
    s_series,
    substitute_linear,
    substitute_monomial,
    varsigma_series,
    x_over_sinh,
    x_over_tanh,
)

from .strategies import from_list, series, unit_series

X = sympy.Symbol("x")


def taylor(expr, order):
    """Coefficients of a sympy expression around 0, as Fractions (oracle)."""
    poly = sympy.series(expr, X, 0, order + 1).removeO()
    out = {}
    for k in range(-3, order + 1):
        c = sympy.Rational(poly.coeff(X, k))
        if c:
            out[k] = Fraction(int(c.p), int(c.q))
    return out


def as_dict(s):
    return {e[0]: c for e, c in s.terms()}


x = LaurentSeries.variable("x")
one = LaurentSeries.constant(1)


# -- operation examples ---------------------------------------------------------

def test_add_examples():
    S = s_series(8)
    assert add(0, S) == S
    vs = varsigma_series(8)
    assert (vs + (-vs)).is_zero()
    a = LaurentSeries.univariate("x", {1: 1, 3: Fraction(1, 24)}, 5)
    b = LaurentSeries.univariate("x", {3: Fraction(1, 24)}, 5)
    assert as_dict(add(a, b)) == {1: 1, 3: Fraction(1, 12)}


def test_add_window_is_min():
    a = LaurentSeries.univariate("x", {0: 1}, 3)
    b = LaurentSeries.univariate("x", {0: 1}, 7)
    assert (a + b).upper == (3,)


def test_mul_examples():
    vs = varsigma_series(9)
    assert mul(one, vs) == vs
    assert mul(LaurentSeries.monomial({"x": -1}), x) == 1
    assert coefficient(vs * vs, (4,)) == Fraction(1, 12)


def test_mul_window_exact():
    a = varsigma_series(5)  # lower 1, upper 5
    b = s_series(6)  # lower 0, upper 6
    p = a * b
    assert p.lower == (1,)
    assert p.upper == (min(5 + 0, 6 + 1),)


def test_pow_examples():
    assert pow(varsigma_series(5), 0) == 1
    assert pow(x, 3) == LaurentSeries.monomial({"x": 3})
    assert coefficient(pow(s_series(6), 2), (2,)) == Fraction(1, 12)
    with pytest.raises(ValueError):
        pow(x, -1)


def test_invert_examples():
    assert invert(one) == 1
    assert coefficient(invert(s_series(8)), (2,)) == Fraction(-1, 24)
    inv = invert(varsigma_series(9))
    assert inv.lower == (-1,)
    assert coefficient(inv, (-1,)) == 1
    assert coefficient(inv, (1,)) == Fraction(-1, 24)
    assert as_dict(inv) == taylor(1 / (2 * sympy.sinh(X / 2)), inv.upper[0])


def test_invert_errors():
    with pytest.raises(NonInvertibleError, match="non-invertible"):
        invert(LaurentSeries.zero())
    two_lowest = LaurentSeries(("x", "y"), {(1, 0): 1, (0, 1): 1}, (0, 0), (3, 3))
    with pytest.raises(NonInvertibleError, match="non-invertible"):
        invert(two_lowest)
    with pytest.raises(NonInvertibleError):
        invert(one + x)  # exact polynomial: inverse has no finite window


def test_coefficient_examples():
    vs = varsigma_series(7)
    assert coefficient(vs, (1,)) == 1
    assert coefficient(vs, (2,)) == 0
    assert coefficient(vs, (3,)) == Fraction(1, 24)
    assert coefficient(vs, {"x": -4}) == 0


def test_coefficient_outside_window():
    with pytest.raises(WindowError, match="outside truncation window"):
        coefficient(varsigma_series(5), (6,))


def test_substitute_monomial_examples():
    x2 = LaurentSeries.univariate("x", {2: 1}, 4)
    img = substitute_monomial(x2, 1, {"u": 1, "z": 1})
    assert dict(img.terms()) == {(2, 2): 1}
    assert coefficient(substitute_monomial(varsigma_series(7), 2, {"x": 1}), (3,)) == Fraction(1, 3)
    img = substitute_monomial(s_series(6), 1, {"u": 1, "z": 1})
    assert img.coefficient({"u": 2, "z": 2}) == Fraction(1, 24)
    assert img.upper == (6, 6)


def test_substitute_monomial_window_overflow():
    with pytest.raises(WindowError, match="window overflow"):
        substitute_monomial(s_series(4), 1, {"u": 1}, window={"u": 5})
    assert substitute_monomial(s_series(4), 1, {"u": 1}, window={"u": 2}).upper == (2,)


def test_substitute_linear_matches_product_of_exponentials():
    # exp(x) at x = z + w equals exp(z) exp(w)
    e = from_list([Fraction(1, sympy.factorial(k)) for k in range(12)], 11)
    both = substitute_linear(e, {"z": 1, "w": 1}, {"z": 5, "w": 5})
    ez = from_list([Fraction(1, sympy.factorial(k)) for k in range(6)], 5, "z")
    ew = from_list([Fraction(1, sympy.factorial(k)) for k in range(6)], 5, "w")
    assert both == ez * ew
    with pytest.raises(WindowError):
        substitute_linear(e, {"z": 1, "w": 1}, {"z": 6, "w": 6})


# -- builders --------------------------------------------------------------------

@pytest.mark.parametrize(
    "builder, expr",
    [
        (varsigma_series, 2 * sympy.sinh(X / 2)),
        (s_series, 2 * sympy.sinh(X / 2) / X),
        (cosh_half_series, sympy.cosh(X / 2)),
        (x_over_sinh, X / sympy.sinh(X)),
        (x_over_tanh, X / sympy.tanh(X)),
    ],
)
def test_builders_match_taylor(builder, expr):
    s = builder(10)
    assert s.upper == (10,)
    assert as_dict(s) == taylor(expr, 10)


def test_builder_examples():
    assert coefficient(x_over_sinh(4), (2,)) == Fraction(-1, 6)
    assert coefficient(x_over_tanh(4), (2,)) == Fraction(1, 3)
    assert coefficient(s_series(0), (0,)) == 1


@pytest.mark.parametrize("builder, parity", [
    (varsigma_series, 1), (s_series, 0), (x_over_sinh, 0), (x_over_tanh, 0), (cosh_half_series, 0),
])
def test_builder_parity(builder, parity):
    assert all(e[0] % 2 == parity for e, _ in builder(15).terms())


def test_exact_rationals_only():
    for s in (varsigma_series(9), x_over_tanh(9), invert(s_series(9))):
        assert all(type(c) is Fraction for _, c in s.terms())
    with pytest.raises(TypeError):
        LaurentSeries(("x",), {(0,): 0.5}, (0,), (3,))


def test_immutable():
    with pytest.raises(AttributeError):
        one.vars = ("y",)


# -- ring properties ----------------------------------------------------------------

uni = series()
bi = series(vars=("x", "y"), max_span=3)
mixed = st.one_of(uni, bi, series(vars=("y",)))


@settings(max_examples=200, deadline=None)
@given(mixed, mixed)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=200, deadline=None)
@given(mixed, mixed, mixed)
def test_associative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=200, deadline=None)
@given(mixed, mixed, mixed)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(st.one_of(unit_series(), unit_series(vars=("x", "y"), max_span=4)))
def test_invert_two_sided(a):
    b = a.invert()
    assert a * b == 1
    assert b * a == 1
    assert a * b == LaurentSeries(a.vars, {(0,) * len(a.vars): 1}, (0,) * len(a.vars), (a * b).upper)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(max_denominator=5, min_value=-3, max_value=3), min_size=16, max_size=16),
       st.lists(st.fractions(max_denominator=5, min_value=-3, max_value=3), min_size=16, max_size=16),
       st.integers(-2, 2), st.integers(-1, 2), st.integers(3, 8))
def test_window_honesty(ca, cb, la, lb, order):
    """Coefficients inside a window do not change when operands get longer."""
    cb[0] = cb[0] or Fraction(1)

    def build(extra):
        a = from_list(ca, order + extra, lower=la)
        b = from_list(cb, order + extra, lower=lb)
        return a * b + a, a * b.invert(), b**3, (a - b) * (a + b)

    small = build(0)
    large = build(6)
    for s, big in zip(small, large):
        lo, up = s.lower[0] if s.vars else 0, s.upper[0] if s.vars else 0
        assert up < float("inf")
        for k in range(lo, int(up) + 1):
            assert s.coefficient((k,)) == big.coefficient((k,))


def test_window_honesty_multivariate():
    S_small = substitute_monomial(s_series(6), 1, {"u": 1, "z": 1})
    S_big = substitute_monomial(s_series(14), 1, {"u": 1, "z": 1})
    pole = LaurentSeries.monomial({"u": -1, "z": -1})
    small = S_small.invert() ** 5 * pole * substitute_monomial(s_series(6), 2, {"u": 1, "z": 1})
    big = S_big.invert() ** 5 * pole * substitute_monomial(s_series(14), 2, {"u": 1, "z": 1})
    for i in range(small.lower[0], small.upper[0] + 1):
        for j in range(small.lower[1], small.upper[1] + 1):
            assert small.coefficient((i, j)) == big.coefficient((i, j))


def test_equality_on_window_intersection():
    assert s_series(4) == s_series(10)
    assert s_series(4) != varsigma_series(4)
