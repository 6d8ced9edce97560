"""Energy operators E_a(z) and their vacuum expectations.

Only two rules are used:

    [E_a(z), E_b(w)] = a * delta_{a+b,0}                 if z = w = 0
                     = varsigma(a w - b z) E_{a+b}(z + w)  otherwise

    <E_a(z)> = delta_{a,0} / varsigma(z)

together with the vanishing of <E_{a_1}(z_1) ... E_{a_n}(z_n)> whenever
a_1 < 0 or a_n > 0.  Expectations are evaluated by bubble-sorting the
energies into ascending order; each adjacent swap costs one commutator.  A
product of energy-zero operators is evaluated from the right, E_0(z)|0> being
|0>/varsigma(z).

Intermediate results are kept symbolically as sums of rational multiples of
products of varsigma(L)^k for linear forms L (:class:`SigmaExpr`), so that
exact cancellations happen before any series is expanded.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DivergentExpectation, WindowError
from .series import LaurentSeries, s_series, varsigma_series

Number = Union[int, Fraction]
Window = Union[int, Mapping[str, int]]


class LinearForm:
    """Finite Q-linear combination of named variables; the argument of E_a."""

    __slots__ = ("_items",)

    def __init__(self, coeffs: Mapping[str, Number] | None = None):
        acc: Dict[str, Fraction] = {}
        for v, c in (coeffs or {}).items():
            acc[v] = acc.get(v, Fraction(0)) + Fraction(c)
        self._items = tuple(sorted((v, c) for v, c in acc.items() if c))

    @classmethod
    def var(cls, name: str, c: Number = 1) -> "LinearForm":
        return cls({name: c})

    @classmethod
    def zero(cls) -> "LinearForm":
        return cls()

    @property
    def coeffs(self) -> Dict[str, Fraction]:
        return dict(self._items)

    @property
    def vars(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self._items)

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self):
        return bool(self._items)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        d = self.coeffs
        for v, c in other._items:
            d[v] = d.get(v, 0) + c
        return LinearForm(d)

    def scale(self, c: Number) -> "LinearForm":
        return LinearForm({v: c * x for v, x in self._items})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def leading(self) -> Fraction:
        return self._items[0][1]

    def normalized(self) -> Tuple[Fraction, "LinearForm"]:
        """(c, D) with self = c * D and the leading coefficient of D equal to 1."""
        c = self.leading()
        return c, self.scale(1 / c)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __lt__(self, other):
        return self._items < other._items

    def __str__(self):
        if not self._items:
            return "0"
        out = ""
        for v, c in self._items:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else (f"{mag}*" if mag.denominator == 1 else f"({mag})*")
            out += f"{sign}{coef}{v}"
        return out[1:] if out[0] == "+" else out

    def __repr__(self):
        return f"LinearForm({self})"


def _as_form(x) -> LinearForm:
    if isinstance(x, LinearForm):
        return x
    if x == 0:
        return LinearForm.zero()
    if isinstance(x, str):
        return LinearForm.var(x)
    if isinstance(x, Mapping):
        return LinearForm(x)
    raise TypeError(f"cannot interpret {x!r} as a linear form")


@dataclass(frozen=True)
class EOp:
    energy: int
    arg: LinearForm = field(default_factory=LinearForm.zero)

    def __post_init__(self):
        if not isinstance(self.energy, int):
            raise TypeError("energy must be an integer")
        object.__setattr__(self, "arg", _as_form(self.arg))

    def __str__(self):
        return f"E({self.energy}; {self.arg})"


# -- symbolic scalars ---------------------------------------------------------

Factors = Tuple[Tuple[LinearForm, int], ...]


class SigmaExpr:
    """Sum of terms  q * prod_L varsigma(L)^k_L  with q rational.

    Forms are stored with positive leading coefficient, using
    varsigma(-L) = -varsigma(L).
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Factors, Number] | None = None):
        self._t: Dict[Factors, Fraction] = {
            k: Fraction(v) for k, v in (terms or {}).items() if v
        }

    @classmethod
    def one(cls, c: Number = 1) -> "SigmaExpr":
        return cls({(): c})

    @classmethod
    def sigma(cls, form: LinearForm, power: int = 1) -> "SigmaExpr":
        """varsigma(form)^power; the zero form gives 0 for positive powers."""
        if form.is_zero():
            if power > 0:
                return cls()
            if power < 0:
                raise DivergentExpectation("1/varsigma(0) is undefined")
            return cls.one()
        sign = 1
        if form.leading() < 0:
            form = -form
            sign = (-1) ** power
        return cls({((form, power),): sign})

    def terms(self) -> List[Tuple[Fraction, Factors]]:
        return [(c, k) for k, c in sorted(self._t.items(), key=lambda kv: repr(kv[0]))]

    def is_zero(self) -> bool:
        return not self._t

    def __add__(self, other: "SigmaExpr") -> "SigmaExpr":
        out = dict(self._t)
        for k, v in other._t.items():
            out[k] = out.get(k, 0) + v
        return SigmaExpr(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SigmaExpr({k: v * other for k, v in self._t.items()})
        out: Dict[Factors, Fraction] = {}
        for ka, va in self._t.items():
            for kb, vb in other._t.items():
                k = _merge(ka, kb)
                out[k] = out.get(k, 0) + va * vb
        return SigmaExpr(out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return isinstance(other, SigmaExpr) and self._t == other._t

    __hash__ = None

    def __repr__(self):
        if not self._t:
            return "SigmaExpr(0)"
        parts = []
        for c, k in self.terms():
            fs = "".join(f" s({f})" + (f"^{p}" if p != 1 else "") for f, p in k)
            parts.append(f"{c}{fs}")
        return "SigmaExpr(" + " + ".join(parts) + ")"

    def variables(self) -> Tuple[str, ...]:
        vs = set()
        for k in self._t:
            for f, _ in k:
                vs.update(f.vars)
        return tuple(sorted(vs))

    def to_series(self, window: Window) -> LaurentSeries:
        """Expand as a truncated Laurent series on the box ``window``.

        A genuine pole along a form with two or more variables, e.g.
        1/varsigma(z+w), is expressed in an auxiliary variable named after the
        form, such as ``(w+z)``; its order is the largest order of the form's
        variables.
        """
        total = LaurentSeries.zero()
        for c, factors in self.terms():
            total = total + _term_series(c, factors, window)
        return total


def _merge(a: Factors, b: Factors) -> Factors:
    d: Dict[LinearForm, int] = dict(a)
    for f, p in b:
        d[f] = d.get(f, 0) + p
    return tuple(sorted((f, p) for f, p in d.items() if p))


def _win(window: Window, v: str) -> int:
    if isinstance(window, int):
        return window
    try:
        return window[v]
    except KeyError:
        raise WindowError(f"no truncation order given for variable {v}") from None


def aux_name(form: LinearForm) -> str:
    return f"({form})"


def _univariate_product(pieces: Sequence[Tuple[Fraction, int]], need: int) -> LaurentSeries:
    """prod varsigma(c x)^k in x, exact at least up to x^need."""
    poles = sum(abs(k) for _, k in pieces)
    order = need + 2 * poles + 2
    while True:
        s = LaurentSeries.constant(1)
        for c, k in pieces:
            base = varsigma_series(order).substitute_monomial(c, {"x": 1})
            s = s * (base ** k if k > 0 else base.invert() ** (-k))
        if s.vars and s.upper[0] >= need:
            return s.truncate({"x": need})
        if not s.vars:
            return s
        order += need + 2


def _term_series(c: Fraction, factors: Factors, window: Window) -> LaurentSeries:
    groups: Dict[LinearForm, List[Tuple[Fraction, int]]] = defaultdict(list)
    for form, power in factors:
        lead, direction = form.normalized()
        groups[direction].append((lead, power))

    plan = []  # (direction, pieces, target var or None for a power series)
    final: Dict[str, int] = {}
    pole: Dict[str, int] = defaultdict(int)
    for direction, pieces in groups.items():
        net = sum(k for _, k in pieces)
        dvars = direction.vars
        for v in dvars:
            final[v] = _win(window, v)
        if len(dvars) == 1:
            target = dvars[0]
        elif net < 0:
            target = aux_name(direction)
            final[target] = max(_win(window, v) for v in dvars)
        else:
            target = None
        if net < 0:
            pole[target] += -net
        plan.append((direction, pieces, target))

    inner = {v: w + pole.get(v, 0) for v, w in final.items()}
    result = LaurentSeries.constant(c)
    for direction, pieces, target in plan:
        if target is None:
            box = {v: inner[v] for v in direction.vars}
            s = _univariate_product(pieces, sum(box.values()))
            s = s.substitute_linear(direction.coeffs, box) if s.vars else s
        else:
            s = _univariate_product(pieces, inner[target])
            if s.vars:
                s = s.substitute_monomial(1, {target: 1}, {target: inner[target]})
        result = result * s
    return result.truncate({v: w for v, w in final.items() if v in result.vars})


# -- commutators and expectations ----------------------------------------------

Bracket = List[Tuple[SigmaExpr, Optional[EOp]]]


def bracket(x: EOp, y: EOp) -> Bracket:
    """[x, y] with symbolic scalar coefficients."""
    a, z = x.energy, x.arg
    b, w = y.energy, y.arg
    if z.is_zero() and w.is_zero():
        return [(SigmaExpr.one(a), None)] if a + b == 0 and a else []
    form = w.scale(a) - z.scale(b)
    if form.is_zero():
        return []
    return [(SigmaExpr.sigma(form), EOp(a + b, z + w))]


def commutator(x: EOp, y: EOp, order: int = 8) -> List[Tuple[LaurentSeries, Optional[EOp]]]:
    """[x, y] as (scalar series, operator or None) pairs, scalars to ``order``."""
    return [(s.to_series(order), op) for s, op in bracket(x, y)]


def _inversions(energies: Sequence[int]) -> List[int]:
    return [i for i in range(len(energies) - 1) if energies[i] > energies[i + 1]]


def vev_symbolic(
    ops: Sequence[EOp], *, policy: str = "leftmost", seed: Optional[int] = None
) -> SigmaExpr:
    """<ops> as a :class:`SigmaExpr`.

    ``policy`` picks which out-of-order adjacent pair is swapped first:
    ``leftmost`` (default), ``rightmost`` or ``random``.
    """
    ops = tuple(EOp(o.energy, o.arg) if not isinstance(o, EOp) else o for o in ops)
    if policy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown swap policy {policy!r}")
    rng = random.Random(seed)
    cache: Dict[Tuple[EOp, ...], SigmaExpr] = {}

    def ev(ops: Tuple[EOp, ...]) -> SigmaExpr:
        if ops in cache:
            return cache[ops]
        energies = [o.energy for o in ops]
        if not ops:
            out = SigmaExpr.one()
        elif sum(energies) != 0 or energies[0] < 0 or energies[-1] > 0:
            out = SigmaExpr()
        elif not any(energies):
            last = ops[-1]
            if last.arg.is_zero():
                raise DivergentExpectation("divergent expectation <E_0(0)>")
            out = SigmaExpr.sigma(last.arg, -1) * ev(ops[:-1])
        else:
            inv = _inversions(energies)
            if policy == "leftmost":
                i = inv[0]
            elif policy == "rightmost":
                i = inv[-1]
            else:
                i = rng.choice(inv)
            x, y = ops[i], ops[i + 1]
            out = ev(ops[:i] + (y, x) + ops[i + 2 :])
            for scalar, op in bracket(x, y):
                rest = ops[:i] + ((op,) if op is not None else ()) + ops[i + 2 :]
                out = out + scalar * ev(rest)
        if policy != "random":
            cache[ops] = out
        return out

    return ev(ops)


@dataclass(frozen=True)
class EProduct:
    ops: Tuple[EOp, ...]
    prefactor: LaurentSeries = field(default_factory=lambda: LaurentSeries.constant(1))

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))

    def total_energy(self) -> int:
        return sum(o.energy for o in self.ops)

    def variables(self) -> Tuple[str, ...]:
        vs = set(self.prefactor.vars)
        for o in self.ops:
            vs.update(o.arg.vars)
        return tuple(sorted(vs))

    def __str__(self):
        return " ".join(map(str, self.ops))


def vev(p: Union[EProduct, Sequence[EOp]], window: Window = 8, *, policy: str = "leftmost") -> LaurentSeries:
    """Vacuum expectation of an operator product as a truncated Laurent series."""
    if not isinstance(p, EProduct):
        p = EProduct(tuple(p))
    expr = vev_symbolic(p.ops, policy=policy)
    if expr.is_zero():
        return LaurentSeries.zero()
    return p.prefactor * expr.to_series(window)


# -- the operator route to eps_g(d') -----------------------------------------

def fact4_expansion(dprime: int, window: int) -> List[Tuple[LaurentSeries, int]]:
    """Coefficient series P_t(u, z) of E_{2t-2d'}(uz), for t = 0..2d'.

    The conjugated operator equals [z^0] sum_t P_t(u, z) E_{2t-2d'}(uz) with

        P_t = u^t sum_v (2d')!/(t!(2d'-v)!) z^(t-v) S(2uz)^t S(uz)^(-2d'-1),

    v running from t-1 to 2d'.  Moving the z-extraction into the negative
    z-powers keeps the operator's own z-dependence inside the bracket.  The
    v = t-1 term pairs with the (uz)^-1 pole of <E_0(uz)> and is the one
    that produces genus zero.  ``window`` bounds u and z in the S-factors.
    """
    if not isinstance(dprime, int) or dprime < 1:
        raise ValueError(f"d' must be a positive integer, got {dprime!r}")
    n = 2 * dprime
    s = s_series(window)
    s_uz = s.substitute_monomial(1, {"u": 1, "z": 1})
    s_2uz = s.substitute_monomial(2, {"u": 1, "z": 1})
    s_uz_inv = s_uz.invert() ** (n + 1)
    out = []
    for t in range(n + 1):
        zpoly = LaurentSeries.zero()
        for v in range(t - 1, n + 1):
            c = Fraction(math.factorial(n), math.factorial(t) * math.factorial(n - v))
            zpoly = zpoly + LaurentSeries.monomial({"z": t - v}, c)
        coeff = LaurentSeries.monomial({"u": t}) * zpoly * (s_2uz ** t) * s_uz_inv
        out.append((coeff, 2 * t - n))
    return out


def one_point_uz(energy: int, order: int) -> LaurentSeries:
    """<E_energy(uz)> via the symbolic one-point rule, through x -> u*z."""
    expr = vev_symbolic((EOp(energy, LinearForm.var("x")),))
    if expr.is_zero():
        return LaurentSeries.zero()
    return expr.to_series({"x": order}).substitute_monomial(1, {"u": 1, "z": 1})


def epsilon_fock(g: int, dprime: int) -> Fraction:
    """eps_g(d') = [u^(2g-1+d') z^0] sum_t P_t(u,z) <E_{2t-2d'}(uz)>."""
    if not isinstance(g, int) or g < 0:
        raise ValueError(f"genus must be a nonnegative integer, got {g!r}")
    target = 2 * g - 1 + dprime
    window = 2 * g + dprime + 2
    total = LaurentSeries.zero()
    for coeff, energy in fact4_expansion(dprime, window):
        point = one_point_uz(energy, window)
        if not point.is_zero():
            total = total + coeff * point
    if total.is_zero():
        return Fraction(0)
    return total.coefficient({"u": target, "z": 0})
