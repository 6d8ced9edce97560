from fractions import Fraction

import pytest

from hzfock.errors import GuardrailError
from hzfock.gluing import epsilon_bruteforce
from hzfock.hurwitz import (
    HurwitzSpec,
    _sandwich,
    fact1_check,
    fact2_check,
    h_grothendieck,
    h_monotone,
    h_monotone_direct,
    sandwich_naive,
)
from hzfock.symgroup import esym_jm, length_class_sum


def test_spec_derived_fields():
    s = HurwitzSpec(1, 3)
    assert (s.n, s.m, s.length) == (6, 4, 2)
    assert HurwitzSpec(0, 1).m == 0
    with pytest.raises(ValueError):
        HurwitzSpec(-1, 2)
    with pytest.raises(ValueError):
        HurwitzSpec(0, 0)


def test_grothendieck_examples():
    assert h_grothendieck(HurwitzSpec(0, 1)) == Fraction(1, 2)
    assert h_grothendieck(0, 2) == Fraction(1, 2)
    assert h_grothendieck(1, 2) == Fraction(1, 4)


def test_monotone_examples():
    assert h_monotone(0, 1) == Fraction(1, 2)
    assert h_monotone(1, 2) == Fraction(1, 4)
    assert h_monotone(3, 2) == 0  # m = 7 > n - 1


def test_direct_examples():
    assert h_monotone_direct(0, 1) == Fraction(1, 2)
    spec = HurwitzSpec(0, 1)
    assert spec.m == 0
    assert h_monotone_direct(spec) == Fraction(1, 2)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_direct_matches_algebra(d):
    for g in range(d // 2 + 2):
        assert h_monotone_direct(g, d) == h_monotone(g, d)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_sandwich_fast_equals_naive(d):
    n = 2 * d
    for length in range(1, n + 1):
        middle = length_class_sum(n, length)
        assert _sandwich(middle, d, None) == sandwich_naive(middle, d)
    for k in range(n):
        middle = esym_jm(k, n)
        assert _sandwich(middle, d, None) == sandwich_naive(middle, d)


def test_facts():
    assert fact1_check(1) and fact1_check(2) and fact1_check(3)
    for d in range(1, 5):
        for g in range(d // 2 + 2):
            assert fact2_check(g, d)


def test_integrality_against_gluing():
    for d in range(1, 5):
        hist = epsilon_bruteforce(d)
        for g in range(d // 2 + 1):
            v = 2 * d * h_grothendieck(g, d)
            assert v.denominator == 1 and v >= 0 and v == hist[g]


def test_vanishing():
    for d in range(1, 4):
        for g in range(d // 2 + 2, d + 3):
            s = HurwitzSpec(g, d)
            assert s.vanishes()
            assert h_grothendieck(s) == h_monotone(s) == 0


def test_linear_scaling():
    middle = length_class_sum(6, 2)
    base = _sandwich(middle, 3, None)
    for c in (Fraction(3), Fraction(-2, 7), Fraction(0)):
        assert _sandwich(middle.scale(c), 3, None) == c * base


def test_guardrails():
    with pytest.raises(GuardrailError):
        h_grothendieck(0, 6)
    with pytest.raises(GuardrailError):
        h_monotone_direct(0, 5)
    assert h_grothendieck(0, 1, limit=2) == Fraction(1, 2)
