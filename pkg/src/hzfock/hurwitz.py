"""One-part Hurwitz numbers with a (2,...,2) profile.

Two group-algebra evaluations are provided:

* ``h_grothendieck``: dessins with profiles (2d') over 0, (2,...,2) over
  infinity and any mu with l(mu) = d' + 1 - 2g over 1;
* ``h_monotone``: the same profiles over 0 and infinity plus
  m = 2g - 1 + d' strictly monotone transpositions, via sigma_m of the
  Jucys-Murphy elements.

``h_monotone_direct`` counts the monotone factorisations by search and is the
independent check on ``h_monotone``.  All products follow the apply-right-first
convention of :mod:`hzfock.symgroup`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import config
from .gluing import epsilon_bruteforce
from .symgroup import (
    AlgebraElement,
    _inverse,
    _num_cycles,
    alg_mul,
    class_sum,
    coeff_identity,
    esym_jm,
    length_class_sum,
)


@dataclass(frozen=True)
class HurwitzSpec:
    g: int
    dprime: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.g!r}")
        if not isinstance(self.dprime, int) or self.dprime < 1:
            raise ValueError(f"d' must be a positive integer, got {self.dprime!r}")

    @property
    def n(self) -> int:
        return 2 * self.dprime

    @property
    def m(self) -> int:
        """Number of monotone transpositions (Riemann-Hurwitz)."""
        return 2 * self.g - 1 + self.dprime

    @property
    def length(self) -> int:
        """Required number of parts of the profile over 1."""
        return self.dprime + 1 - 2 * self.g

    def vanishes(self) -> bool:
        return self.m < 0 or self.m > self.n - 1 or not 1 <= self.length <= self.n


def _as_spec(spec, dprime=None) -> HurwitzSpec:
    if isinstance(spec, HurwitzSpec):
        return spec
    return HurwitzSpec(spec, dprime)


def _involution_class(dprime: int, limit) -> AlgebraElement:
    return class_sum((2,) * dprime, limit=limit)


def _sandwich(middle: AlgebraElement, dprime: int, limit) -> Fraction:
    """(1/(2d')!) [id] C_{(2)^d'} * middle * C_{(2d')}.

    Uses [id](X * C_mu) = sum_{h in C_mu} X(h^-1) to skip the last product.
    """
    n = 2 * dprime
    x = alg_mul(_involution_class(dprime, limit), middle)
    cycles = class_sum((n,), limit=limit)
    total = sum(x._coeff_raw(_inverse(h)) for h in cycles._t)
    return Fraction(total, math.factorial(n))


def sandwich_naive(middle: AlgebraElement, dprime: int, *, limit=None) -> Fraction:
    """Same as the fast path but with both products expanded (for testing)."""
    n = 2 * dprime
    full = alg_mul(alg_mul(_involution_class(dprime, limit), middle), class_sum((n,), limit=limit))
    return Fraction(coeff_identity(full), math.factorial(n))


def h_grothendieck(spec, dprime=None, *, limit: Optional[int] = None) -> Fraction:
    spec = _as_spec(spec, dprime)
    config.check(spec.n, limit, config.LIMITS.sym_n, "symmetric group size n")
    if spec.vanishes():
        return Fraction(0)
    middle = length_class_sum(spec.n, spec.length, limit=limit)
    return _sandwich(middle, spec.dprime, limit)


def h_monotone(spec, dprime=None, *, limit: Optional[int] = None) -> Fraction:
    spec = _as_spec(spec, dprime)
    config.check(spec.n, limit, config.LIMITS.sym_n, "symmetric group size n")
    if spec.vanishes():
        return Fraction(0)
    return _sandwich(esym_jm(spec.m, spec.n, limit=limit), spec.dprime, limit)


def h_monotone_direct(spec, dprime=None, *, limit: Optional[int] = None) -> Fraction:
    """Count (alpha, tau_1..tau_m) with alpha o tau_m o ... o tau_1 o gamma = id.

    gamma = (1 2 ... 2d') is fixed, tau_i = (x_i y_i) with x_i < y_i and
    y_1 < ... < y_m, and alpha must be a fixed-point-free involution.  Since
    alpha is determined by the word, the search runs over monotone words and
    tests whether P = tau_m ... tau_1 gamma is a fixed-point-free involution.
    The fixed-gamma count times |C_(2d')|/(2d')! gives count/(2d').
    """
    spec = _as_spec(spec, dprime)
    config.check(spec.n, limit, config.LIMITS.direct_n, "direct search size n")
    if spec.m < 0:
        return Fraction(0)
    n, m, target = spec.n, spec.m, spec.dprime
    gamma = tuple(range(1, n)) + (0,)

    def is_fpf_involution(p) -> bool:
        return all(p[x] != x and p[p[x]] == x for x in range(n))

    count = 0

    def search(p: list, ncyc: int, last_y: int, left: int) -> None:
        nonlocal count
        if left == 0:
            if is_fpf_involution(p):
                count += 1
            return
        # each transposition changes the cycle count by exactly one
        if abs(ncyc - target) > left or (n - 1 - last_y) < left:
            return
        for y in range(last_y + 1, n):
            for x in range(y):
                # left-multiply by (x y): swap the values x and y in p
                ix, iy = p.index(x), p.index(y)
                p[ix], p[iy] = y, x
                search(p, _num_cycles(p), y, left - 1)
                p[ix], p[iy] = x, y

    search(list(gamma), 1, 0, m)
    return Fraction(count, n)


def fact1_check(dprime: int, *, limit: Optional[int] = None) -> bool:
    """eps_g(d') from the gluing census equals 2d' * h_grothendieck for all g."""
    hist = epsilon_bruteforce(dprime)
    for g in range(dprime // 2 + 2):
        if hist[g] != 2 * dprime * h_grothendieck(g, dprime, limit=limit):
            return False
    return True


def fact2_check(g: int, dprime: int, *, limit: Optional[int] = None) -> bool:
    return h_grothendieck(g, dprime, limit=limit) == h_monotone(g, dprime, limit=limit)
