import pytest

from hzfock.errors import GuardrailError
from hzfock.gluing import (
    _matchings,
    catalan,
    double_factorial,
    enumerate_matchings,
    epsilon_bruteforce,
    genus_of,
)
from hzfock.symgroup import Permutation, _num_cycles


def hz_recursion_table(dmax):
    """Harer-Zagier three-term recursion (independent oracle).

    (n+1) e_g(n) = 2(2n-1) e_g(n-1) + (n-1)(2n-1)(2n-3) e_{g-1}(n-2),
    with e_0(0) = 1.
    """
    eps = {(0, 0): 1}
    for n in range(1, dmax + 1):
        for g in range(n // 2 + 1):
            rhs = 2 * (2 * n - 1) * eps.get((g, n - 1), 0)
            if g and n >= 2:
                rhs += (n - 1) * (2 * n - 1) * (2 * n - 3) * eps.get((g - 1, n - 2), 0)
            assert rhs % (n + 1) == 0
            eps[(g, n)] = rhs // (n + 1)
    return eps


def cyc(n, *c):
    return Permutation.from_cycles(n, *c)


def test_enumerate_examples():
    assert list(enumerate_matchings(1)) == [cyc(2, (1, 2))]
    assert list(enumerate_matchings(2)) == [
        cyc(4, (1, 2), (3, 4)),
        cyc(4, (1, 3), (2, 4)),
        cyc(4, (1, 4), (2, 3)),
    ]
    assert sum(1 for _ in enumerate_matchings(5)) == 945


@pytest.mark.parametrize("d", range(1, 7))
def test_matchings_distinct_and_valid(d):
    ms = list(enumerate_matchings(d))
    assert len(ms) == len(set(ms)) == double_factorial(2 * d - 1)
    for m in ms:
        assert all(m(x) != x and m(m(x)) == x for x in range(1, 2 * d + 1))


def test_genus_examples():
    assert genus_of(cyc(2, (1, 2)), 1) == 0
    assert genus_of(cyc(4, (1, 3), (2, 4)), 2) == 1
    assert genus_of(cyc(4, (1, 2), (3, 4)), 2) == 0


def test_genus_rejects_bad_input():
    with pytest.raises(ValueError):
        genus_of(cyc(4, (1, 2)), 2)
    with pytest.raises(ValueError):
        genus_of(cyc(4, (1, 2), (3, 4)), 3)


def test_histogram_examples():
    assert epsilon_bruteforce(1).counts == {0: 1}
    assert epsilon_bruteforce(2).counts == {0: 2, 1: 1}
    assert epsilon_bruteforce(3).counts == {0: 5, 1: 10}


def test_histograms_match_recursion():
    table = hz_recursion_table(8)
    for d in range(1, 8):
        hist = epsilon_bruteforce(d)
        assert hist.as_list() == [table[(g, d)] for g in range(d // 2 + 1)]
        assert hist.total() == double_factorial(2 * d - 1)
        assert hist[0] == catalan(d)
        assert all(2 * g <= d for g in hist.counts)


def test_convention_independence():
    """cycles(gamma o alpha) and cycles(alpha o gamma) give the same census."""
    for d in range(1, 6):
        n = 2 * d
        gamma = tuple(range(1, n)) + (0,)
        left, right = {}, {}
        for a in _matchings(n):
            ga = tuple(gamma[a[x]] for x in range(n))
            ag = tuple(a[gamma[x]] for x in range(n))
            for store, p in ((left, ga), (right, ag)):
                g = (d + 1 - _num_cycles(p)) // 2
                store[g] = store.get(g, 0) + 1
        assert left == right == epsilon_bruteforce(d).counts


def test_parallel_equals_sequential():
    assert epsilon_bruteforce(6, workers=3).counts == epsilon_bruteforce(6).counts


def test_guardrail():
    with pytest.raises(GuardrailError):
        epsilon_bruteforce(9)
    with pytest.raises(ValueError):
        epsilon_bruteforce(0)


def test_catalan_and_double_factorial():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [double_factorial(n) for n in (-1, 0, 1, 5, 7, 15)] == [1, 1, 1, 15, 105, 2027025]
