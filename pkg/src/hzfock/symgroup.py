"""Permutations, class sums and Jucys-Murphy elements in Q[S_n].

Composition convention (used by every module in the package): ``p * q`` and
``compose(p, q)`` apply ``q`` first, i.e. ``(p*q)(x) = p(q(x))``.  Products in
the group algebra are the bilinear extension of this rule.

Permutations are stored 0-based internally; the public surface (one-line
images, cycle notation) is 1-based.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from . import config
from .errors import GuardrailError

Number = Union[int, Fraction]
Raw = Tuple[int, ...]  # 0-based one-line images


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int]):
        img = tuple(int(x) - 1 for x in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {tuple(images)}")
        self._img = img

    @classmethod
    def _raw(cls, img: Raw) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from 1-based cycles, e.g. ``from_cycles(4, (1, 2), (3, 4))``."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise ValueError(f"bad cycle {cyc} for n={n}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        return cls.from_cycles(n, (i, j))

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """The standard cycle (1 2 ... n)."""
        return cls._raw(tuple(range(1, n)) + (0,))

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> Tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    def __call__(self, x: int) -> int:
        return self._img[x - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation._raw(_inverse(self._img))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        return [
            tuple(x + 1 for x in c)
            for c in _cycles(self._img)
            if include_fixed or len(c) > 1
        ]

    def cycle_type(self) -> "Partition":
        return cycle_type(self)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other):
        return self._img < other._img

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "id"
        return f"<{body} in S{self.n}>"


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition{tuple(self)}"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


# -- raw helpers ------------------------------------------------------------

def _compose(p: Raw, q: Raw) -> Raw:
    return tuple(map(p.__getitem__, q))


def _inverse(p: Raw) -> Raw:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _cycles(p: Raw) -> List[Tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def _num_cycles(p: Raw) -> int:
    seen = [False] * len(p)
    count = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
    return count


def _cycle_type(p: Raw) -> Partition:
    return Partition(len(c) for c in _cycles(p))


# -- group operations -------------------------------------------------------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: S{p.n} vs S{q.n}")
    return Permutation._raw(_compose(p._img, q._img))


def cycle_type(p: Permutation) -> Partition:
    return _cycle_type(p._img)


def class_size(mu: Sequence[int]) -> int:
    """n! / prod_j (j^m_j m_j!)."""
    mu = Partition(mu)
    denom = 1
    for j, m in Counter(mu).items():
        denom *= j**m * math.factorial(m)
    return math.factorial(mu.n) // denom


@lru_cache(maxsize=4)
def _classes(n: int) -> Dict[Partition, Tuple[Raw, ...]]:
    buckets: Dict[Partition, List[Raw]] = {}
    for p in _all_perms(range(n)):
        buckets.setdefault(_cycle_type(p), []).append(p)
    return {mu: tuple(ps) for mu, ps in buckets.items()}


def _check_n(n: int, limit: int | None) -> None:
    config.check(n, limit, config.LIMITS.sym_n, "symmetric group size n")


# -- group algebra ----------------------------------------------------------

class AlgebraElement:
    """Sparse formal Q-linear combination of permutations of {1..n}.

    Coefficients are kept as ``int`` while they are integral (the common case
    here) and promoted to ``Fraction`` otherwise.
    """

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[Permutation, Number] | None = None):
        self.n = n
        self._t: Dict[Raw, Number] = {}
        for p, c in (terms or {}).items():
            if p.n != n:
                raise ValueError(f"size mismatch: S{p.n} term in S{n} element")
            if c:
                self._t[p._img] = self._t.get(p._img, 0) + c
        self._t = {k: v for k, v in self._t.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: Dict[Raw, Number]) -> "AlgebraElement":
        a = object.__new__(cls)
        a.n = n
        a._t = {k: v for k, v in terms.items() if v}
        return a

    @classmethod
    def identity(cls, n: int) -> "AlgebraElement":
        return cls._raw(n, {tuple(range(n)): 1})

    @classmethod
    def of(cls, p: Permutation, c: Number = 1) -> "AlgebraElement":
        return cls._raw(p.n, {p._img: c})

    def items(self) -> Iterator[Tuple[Permutation, Number]]:
        for k in sorted(self._t):
            yield Permutation._raw(k), self._t[k]

    def __len__(self) -> int:
        return len(self._t)

    def __contains__(self, p: Permutation) -> bool:
        return p._img in self._t

    def coefficient(self, p: Permutation) -> Number:
        return self._t.get(p._img, 0)

    def _coeff_raw(self, p: Raw) -> Number:
        return self._t.get(p, 0)

    def support(self) -> List[Permutation]:
        return [Permutation._raw(k) for k in sorted(self._t)]

    def class_counts(self) -> Dict[Partition, int]:
        """Number of terms per conjugacy class."""
        return dict(Counter(_cycle_type(k) for k in self._t))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _same_n(self, other)
        out = dict(self._t)
        for k, v in other._t.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement._raw(self.n, out)

    def __neg__(self):
        return AlgebraElement._raw(self.n, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Number) -> "AlgebraElement":
        return AlgebraElement._raw(self.n, {k: c * v for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.n == other.n and self._t == other._t

    __hash__ = None

    def __repr__(self):
        if len(self._t) > 8:
            return f"<AlgebraElement S{self.n}, {len(self._t)} terms>"
        body = " + ".join(f"{c}*{p!r}" for p, c in self.items())
        return f"<AlgebraElement S{self.n}: {body or '0'}>"


def _same_n(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: S{a.n} vs S{b.n}")


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _same_n(a, b)
    out: Dict[Raw, Number] = {}
    get = out.get
    bitems = list(b._t.items())
    for p, x in a._t.items():
        pg = p.__getitem__
        for q, y in bitems:
            r = tuple(map(pg, q))
            out[r] = get(r, 0) + x * y
    return AlgebraElement._raw(a.n, out)


def coeff_identity(a: AlgebraElement) -> Number:
    return a._t.get(tuple(range(a.n)), 0)


def class_sum(mu: Sequence[int], *, limit: int | None = None) -> AlgebraElement:
    """C_mu: the sum of all permutations of cycle type ``mu``."""
    mu = Partition(mu)
    if mu.n < 1:
        raise ValueError("empty partition")
    _check_n(mu.n, limit)
    return AlgebraElement._raw(mu.n, dict.fromkeys(_classes(mu.n).get(mu, ()), 1))


def length_class_sum(n: int, length: int, *, limit: int | None = None) -> AlgebraElement:
    """Sum of C_mu over all mu |- n with exactly ``length`` parts."""
    _check_n(n, limit)
    out: Dict[Raw, Number] = {}
    for mu, perms in _classes(n).items():
        if len(mu) == length:
            out.update(dict.fromkeys(perms, 1))
    return AlgebraElement._raw(n, out)


def jm(k: int, n: int) -> AlgebraElement:
    """Jucys-Murphy element J_k = (1 k) + (2 k) + ... + (k-1 k)."""
    if not 2 <= k <= n:
        raise ValueError(f"Jucys-Murphy index k={k} out of range 2..{n}")
    return AlgebraElement._raw(
        n, {Permutation.transposition(n, i, k)._img: 1 for i in range(1, k)}
    )


def esym_jm_all(n: int, *, limit: int | None = None) -> List[AlgebraElement]:
    """[sigma_0(J), ..., sigma_{n-1}(J)] for J = (J_2, ..., J_n).

    Uses e_k^(m) = e_k^(m-1) + e_{k-1}^(m-1) * J_m, so every product is an
    ascending word J_{y_1} J_{y_2} ... with y_1 < y_2 < ...
    """
    _check_n(n, limit)
    e = [AlgebraElement.identity(n)]
    for m in range(2, n + 1):
        j = jm(m, n)
        new = [e[0]]
        for k in range(1, len(e) + 1):
            shifted = alg_mul(e[k - 1], j)
            new.append(e[k] + shifted if k < len(e) else shifted)
        e = new
    return e


def esym_jm(k: int, n: int, *, limit: int | None = None) -> AlgebraElement:
    """sigma_k(J_2, ..., J_n); sigma_0 is the identity."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    return esym_jm_all(n, limit=limit)[k]


def jucys_verify(n: int, k: int, *, limit: int | None = None) -> bool:
    """Check sigma_k(J_2..J_n) == sum of C_mu over mu with n-k parts."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    return esym_jm(k, n, limit=limit) == length_class_sum(n, n - k, limit=limit)


def all_permutations(n: int, *, limit: int | None = None) -> Iterator[Permutation]:
    _check_n(n, limit)
    for p in _all_perms(range(n)):
        yield Permutation._raw(p)


__all__ = [
    "Permutation",
    "Partition",
    "AlgebraElement",
    "GuardrailError",
    "partitions",
    "compose",
    "cycle_type",
    "class_size",
    "class_sum",
    "length_class_sum",
    "jm",
    "esym_jm",
    "esym_jm_all",
    "alg_mul",
    "coeff_identity",
    "jucys_verify",
    "all_permutations",
]
