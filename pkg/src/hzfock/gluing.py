"""Brute-force genus census of side pairings of a 2d'-gon.

Sides are labelled 1..2d' counterclockwise and the boundary rotation is the
standard cycle gamma = (1 2 ... 2d').  Gluing the sides according to a
fixed-point-free involution alpha gives a closed orientable surface with one
face, d' edges and c vertices, where c is the number of cycles of
gamma o alpha.  Euler's formula c - d' + 1 = 2 - 2g gives the genus.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

from . import config
from .symgroup import Permutation, _num_cycles


def double_factorial(n: int) -> int:
    """n!! with the convention (-1)!! = 0!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass
class GenusHistogram:
    dprime: int
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, g: int) -> int:
        return self.counts.get(g, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def as_list(self) -> List[int]:
        """[eps_0, eps_1, ...] up to the largest genus allowed by d'."""
        return [self[g] for g in range((self.dprime + 1) // 2 + 1) if 2 * g <= self.dprime]


def _check(dprime: int, limit: Optional[int]) -> None:
    if not isinstance(dprime, int) or dprime < 1:
        raise ValueError(f"d' must be a positive integer, got {dprime!r}")
    config.check(dprime, limit, config.LIMITS.gluing_dprime, "d'")


def _matchings(n: int, first: Optional[int] = None) -> Iterator[tuple]:
    """Fixed-point-free involutions of range(n) as 0-based image tuples.

    Pairs the smallest unpaired label with each larger candidate in turn.
    ``first`` pins the partner of 0 (used to split work).
    """
    img = [-1] * n

    def rec():
        try:
            i = img.index(-1)
        except ValueError:
            yield tuple(img)
            return
        candidates = range(i + 1, n) if (i or first is None) else (first,)
        for j in candidates:
            if img[j] == -1:
                img[i], img[j] = j, i
                yield from rec()
                img[i] = img[j] = -1

    yield from rec()


def enumerate_matchings(dprime: int, *, limit: Optional[int] = None) -> Iterator[Permutation]:
    """All (2d'-1)!! side pairings, as involutions of {1..2d'}."""
    _check(dprime, limit)
    for m in _matchings(2 * dprime):
        yield Permutation._raw(m)


def _genus_raw(alpha: tuple, dprime: int) -> int:
    n = 2 * dprime
    # gamma o alpha: x -> alpha(x) + 1 (mod n)
    rot = tuple((a + 1) % n for a in alpha)
    c = _num_cycles(rot)
    twice = dprime + 1 - c
    assert twice >= 0 and twice % 2 == 0, "Euler characteristic parity violated"
    return twice // 2


def genus_of(alpha: Permutation, dprime: int) -> int:
    n = 2 * dprime
    if alpha.n != n:
        raise ValueError(f"matching acts on {alpha.n} labels, expected {n}")
    a = alpha._img
    if any(a[x] == x or a[a[x]] != x for x in range(n)):
        raise ValueError("not a fixed-point-free involution")
    return _genus_raw(a, dprime)


def _histogram_part(dprime: int, first: Optional[int]) -> Counter:
    return Counter(_genus_raw(m, dprime) for m in _matchings(2 * dprime, first))


def epsilon_bruteforce(
    dprime: int, *, workers: int = 1, limit: Optional[int] = None
) -> GenusHistogram:
    """Histogram g -> number of pairings giving genus g.

    With ``workers > 1`` the enumeration is split on the partner of side 1
    and counted in a process pool; the merged result is identical.
    """
    _check(dprime, limit)
    n = 2 * dprime
    if workers <= 1 or n <= 2:
        counts = _histogram_part(dprime, None)
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_histogram_part, [dprime] * (n - 1), range(1, n)):
                counts.update(part)
    hist = GenusHistogram(dprime, dict(sorted(counts.items())))
    assert hist.total() == double_factorial(2 * dprime - 1)
    return hist


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)
