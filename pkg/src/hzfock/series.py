"""Truncated multivariate Laurent series over the rationals.

A series knows its coefficients exactly on a box window: for every variable
``v`` the exponent lies in ``[lower[v], upper[v]]``.  ``lower`` is a true lower
bound of the support (so the series is ``x^lower`` times a power series) and
``upper`` is the largest exponent whose coefficient is known.  An upper bound
of ``math.inf`` means the series is exact (a polynomial) in that variable.

Every operation computes the largest window on which its result is still
exact; reading a coefficient above the window raises :class:`WindowError`
instead of silently returning zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .errors import NonInvertibleError, WindowError

Exponent = Tuple[int, ...]
Number = Union[int, Fraction]
INF = math.inf

__all__ = [
    "LaurentSeries",
    "add",
    "mul",
    "pow",
    "invert",
    "coefficient",
    "substitute_monomial",
    "substitute_linear",
    "varsigma_series",
    "s_series",
    "cosh_half_series",
    "exp_series",
    "sinh_over_x",
    "x_over_sinh",
    "x_over_tanh",
]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


class LaurentSeries:
    """Immutable truncated Laurent series in a few named variables.

    Variables are kept in lexicographic order of their names; exponent
    vectors are tuples aligned with :attr:`vars`.
    """

    __slots__ = ("vars", "lower", "upper", "_c")

    def __init__(
        self,
        vars: Iterable[str],
        coeffs: Mapping[Exponent, Number],
        lower: Iterable[int],
        upper: Iterable[float],
    ):
        vars = tuple(vars)
        lower = tuple(lower)
        upper = tuple(upper)
        if not (len(vars) == len(lower) == len(upper)):
            raise ValueError("vars, lower and upper must have the same length")
        if len(set(vars)) != len(vars):
            raise ValueError(f"repeated variable in {vars}")
        order = sorted(range(len(vars)), key=lambda i: vars[i])
        if order != list(range(len(vars))):
            vars = tuple(vars[i] for i in order)
            lower = tuple(lower[i] for i in order)
            upper = tuple(upper[i] for i in order)
            coeffs = {tuple(e[i] for i in order): c for e, c in coeffs.items()}
        for lo, up in zip(lower, upper):
            if up < lo:
                raise ValueError(f"empty window [{lo}, {up}]")
        clean: Dict[Exponent, Fraction] = {}
        for e, c in coeffs.items():
            if len(e) != len(vars):
                raise ValueError(f"exponent {e} does not match variables {vars}")
            if any(x > up for x, up in zip(e, upper)):
                continue
            if any(x < lo for x, lo in zip(e, lower)):
                raise ValueError(f"exponent {e} below lower bound {lower}")
            c = _frac(c)
            if c:
                clean[tuple(e)] = c
        if len(vars) == 1 and upper[0] != INF:
            # below the smallest stored exponent every coefficient is a known zero
            lower = (max(lower[0], min((e[0] for e in clean), default=upper[0])),)
        elif clean and all(up == INF for up in upper):
            lower = tuple(min(e[i] for e in clean) for i in range(len(vars)))
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "_c", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Number = 1) -> "LaurentSeries":
        return cls((), {(): c}, (), ())

    @classmethod
    def zero(cls) -> "LaurentSeries":
        return cls((), {}, (), ())

    @classmethod
    def monomial(cls, exps: Mapping[str, int], c: Number = 1) -> "LaurentSeries":
        """The exact monomial ``c * prod(v**e)``."""
        vars = tuple(sorted(exps))
        e = tuple(exps[v] for v in vars)
        return cls(vars, {e: c}, e, (INF,) * len(vars))

    @classmethod
    def variable(cls, name: str) -> "LaurentSeries":
        return cls.monomial({name: 1})

    @classmethod
    def univariate(
        cls, var: str, coeffs: Mapping[int, Number], order: int, lower: Optional[int] = None
    ) -> "LaurentSeries":
        """Series ``sum coeffs[k] var**k`` known exactly up to ``var**order``."""
        if lower is None:
            lower = min((k for k, c in coeffs.items() if c), default=0)
            lower = min(lower, order)
        return cls((var,), {(k,): c for k, c in coeffs.items()}, (lower,), (order,))

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Nonzero terms in graded-lexicographic order of the exponents."""
        for e in sorted(self._c, key=lambda e: (sum(e), e)):
            yield e, self._c[e]

    def __iter__(self):
        return self.terms()

    def __len__(self) -> int:
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def window(self) -> Dict[str, Tuple[int, float]]:
        return {v: (lo, up) for v, lo, up in zip(self.vars, self.lower, self.upper)}

    def constant_term(self) -> Fraction:
        return self.coefficient({})

    def coefficient(self, e: Union[Mapping[str, int], Exponent]) -> Fraction:
        """Coefficient of the monomial with exponent ``e``.

        ``e`` is either a mapping from variable names to exponents (missing
        variables mean exponent 0) or a tuple aligned with :attr:`vars`.
        """
        if isinstance(e, Mapping):
            for v, k in e.items():
                if v not in self.vars and k != 0:
                    return Fraction(0)
            e = tuple(e.get(v, 0) for v in self.vars)
        else:
            e = tuple(e)
            if len(e) != len(self.vars):
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
        for v, x, up in zip(self.vars, e, self.upper):
            if x > up:
                raise WindowError(
                    f"outside truncation window: exponent {x} of {v} exceeds {up}"
                )
        return self._c.get(e, Fraction(0))

    def __getitem__(self, e) -> Fraction:
        return self.coefficient(e)

    # -- alignment ----------------------------------------------------------

    def _embed(self, vars: Tuple[str, ...]) -> "LaurentSeries":
        """Same series viewed in a superset of variables."""
        if vars == self.vars:
            return self
        idx = {v: i for i, v in enumerate(self.vars)}
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise ValueError(f"cannot drop variables {missing}")
        pos = [idx.get(v) for v in vars]
        lower = tuple(0 if p is None else self.lower[p] for p in pos)
        upper = tuple(INF if p is None else self.upper[p] for p in pos)
        coeffs = {tuple(0 if p is None else e[p] for p in pos): c for e, c in self._c.items()}
        return LaurentSeries(vars, coeffs, lower, upper)

    @staticmethod
    def _align(a: "LaurentSeries", b: "LaurentSeries"):
        if a.vars == b.vars:
            return a, b
        vars = tuple(sorted(set(a.vars) | set(b.vars)))
        return a._embed(vars), b._embed(vars)

    @staticmethod
    def coerce(x) -> "LaurentSeries":
        if isinstance(x, LaurentSeries):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentSeries.constant(x)
        raise TypeError(f"cannot use {type(x).__name__} as a series")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = LaurentSeries._align(self, other)
        lower = tuple(map(min, a.lower, b.lower))
        upper = tuple(map(min, a.upper, b.upper))
        coeffs = dict(a._c)
        for e, c in b._c.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentSeries(a.vars, coeffs, lower, upper)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.vars, {e: -c for e, c in self._c.items()}, self.lower, self.upper)

    def __sub__(self, other):
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Number) -> "LaurentSeries":
        c = _frac(c)
        return LaurentSeries(self.vars, {e: c * x for e, x in self._c.items()}, self.lower, self.upper)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        a, b = LaurentSeries._align(self, other)
        lower = tuple(x + y for x, y in zip(a.lower, b.lower))
        # a coefficient is exact only if no discarded tail of either factor reaches it
        upper = tuple(
            min(ta + lb, tb + la) for la, ta, lb, tb in zip(a.lower, a.upper, b.lower, b.upper)
        )
        coeffs: Dict[Exponent, Fraction] = {}
        bitems = list(b._c.items())
        for ea, ca in a._c.items():
            for eb, cb in bitems:
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(x > up for x, up in zip(e, upper)):
                    continue
                coeffs[e] = coeffs.get(e, 0) + ca * cb
        return LaurentSeries(a.vars, coeffs, lower, upper)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        result = LaurentSeries.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _frac(other))
        if isinstance(other, LaurentSeries):
            return self * other.invert()
        return NotImplemented

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse of ``c * x^e * (1 + h)`` with ``h`` in the
        positive-exponent ideal."""
        if not self._c:
            raise NonInvertibleError("non-invertible series: zero")
        n = len(self.vars)
        e = tuple(min(k[i] for k in self._c) for i in range(n))
        if e not in self._c:
            raise NonInvertibleError(
                "non-invertible series: lowest-order part is not a single monomial"
            )
        if n > 1 and e != self.lower:
            # the unknown tail could hide terms below e in some variable
            raise NonInvertibleError(
                "non-invertible series: lower bound does not match leading monomial"
            )
        c = self._c[e]
        span = tuple(up - x for up, x in zip(self.upper, e))
        # normalised unit 1 + h on the box [0, span]
        h = {
            tuple(x - y for x, y in zip(k, e)): v / c
            for k, v in self._c.items()
            if k != e
        }
        if h and any(s == INF and any(k[i] for k in h) for i, s in enumerate(span)):
            raise NonInvertibleError("non-invertible series: infinite window in a non-constant variable")
        zero = (0,) * n
        h_series = LaurentSeries(self.vars, h, zero, span)
        one = LaurentSeries(self.vars, {zero: 1}, zero, span)
        inverse = one
        term = one
        neg_h = -h_series
        while True:
            term = LaurentSeries(self.vars, (term * neg_h)._c, zero, span)
            if term.is_zero():
                break
            inverse = inverse + term
        lower = tuple(-x for x in e)
        upper = tuple(s - x for s, x in zip(span, e))
        coeffs = {tuple(x - y for x, y in zip(k, e)): v / c for k, v in inverse._c.items()}
        return LaurentSeries(self.vars, coeffs, lower, upper)

    # -- windows ------------------------------------------------------------

    def truncate(self, window: Mapping[str, float]) -> "LaurentSeries":
        """Shrink the window to ``window[v]`` for the named variables.

        Asking for more than is known is a :class:`WindowError`.  Variables not
        present in the series are exact there and are ignored.
        """
        upper = list(self.upper)
        for i, v in enumerate(self.vars):
            if v in window:
                if window[v] > self.upper[i]:
                    raise WindowError(
                        f"window overflow: {v} known to order {self.upper[i]}, requested {window[v]}"
                    )
                upper[i] = window[v]
        lower = tuple(min(lo, up) for lo, up in zip(self.lower, upper))
        return LaurentSeries(self.vars, self._c, lower, upper)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        try:
            other = LaurentSeries.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = LaurentSeries._align(self, other)
        upper = tuple(map(min, a.upper, b.upper))

        def visible(s):
            return {
                e: c for e, c in s._c.items() if all(x <= up for x, up in zip(e, upper))
            }

        return visible(a) == visible(b)

    __hash__ = None

    def __repr__(self):
        if not self.vars:
            return f"LaurentSeries({self.constant_term()})"
        win = ", ".join(f"{v}<={up}" for v, up in zip(self.vars, self.upper))
        return f"LaurentSeries({self.format()}; {win})"

    def format(self) -> str:
        parts = []
        for e, c in self.terms():
            mono = format_monomial(self.vars, e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    # -- substitution -------------------------------------------------------

    def substitute_monomial(
        self,
        c: Number,
        monomial: Mapping[str, int],
        window: Optional[Mapping[str, float]] = None,
    ) -> "LaurentSeries":
        """Replace the single variable ``x`` by ``c * prod(v**k)``.

        Exponents of the image scale with ``k``, so the image window is the
        scaled window of ``self``.  If ``window`` is given the result is cut
        down to it; requesting beyond the image window is a window overflow.
        """
        if len(self.vars) != 1:
            raise ValueError("substitute_monomial needs a univariate series")
        c = _frac(c)
        if not c:
            raise ValueError("substitution coefficient must be nonzero")
        if not monomial or any(k <= 0 for k in monomial.values()):
            raise ValueError("monomial exponents must be positive")
        tvars = tuple(sorted(monomial))
        ks = tuple(monomial[v] for v in tvars)
        lo, up = self.lower[0], self.upper[0]
        coeffs = {tuple(k * n for k in ks): v * c**n for (n,), v in self._c.items()}
        image = LaurentSeries(tvars, coeffs, tuple(k * lo for k in ks), tuple(k * up for k in ks))
        if window is not None:
            image = image.truncate(window)
        return image

    def substitute_linear(
        self, form: Mapping[str, Number], window: Mapping[str, int]
    ) -> "LaurentSeries":
        """Replace ``x`` by the linear form ``sum form[v] * v`` in a power series.

        ``window`` gives the target order for every variable of the form; the
        target box is exact only if its total degree fits under the known
        order of ``self``.
        """
        if len(self.vars) != 1:
            raise ValueError("substitute_linear needs a univariate series")
        form = {v: _frac(c) for v, c in form.items() if c}
        if not form:
            raise ValueError("cannot substitute the zero form")
        if len(form) == 1:
            (v, c), = form.items()
            return self.substitute_monomial(c, {v: 1}, {v: window[v]})
        if self.lower[0] < 0 and any(e[0] < 0 for e in self._c):
            raise NonInvertibleError("substitute_linear: series has a pole")
        tvars = tuple(sorted(form))
        target = tuple(window[v] for v in tvars)
        need = sum(target)
        if need > self.upper[0]:
            raise WindowError(
                f"window overflow: total degree {need} exceeds known order {self.upper[0]}"
            )
        zero = (0,) * len(tvars)
        lin = LaurentSeries(
            tvars,
            {tuple(int(w == v) for w in tvars): form[v] for v in tvars},
            zero,
            (INF,) * len(tvars),
        )
        box = {v: t for v, t in zip(tvars, target)}
        result = LaurentSeries(tvars, {}, zero, target)
        power = LaurentSeries(tvars, {zero: 1}, zero, target)
        for n in range(need + 1):
            a = self._c.get((n,))
            if a:
                result = result + power.scale(a)
            power = (power * lin).truncate(box)
        return result


def format_monomial(vars: Tuple[str, ...], e: Exponent) -> str:
    out = []
    for v, k in zip(vars, e):
        if k == 0:
            continue
        out.append(v if k == 1 else f"{v}^{k}")
    return "*".join(out)


# -- functional surface -----------------------------------------------------

def add(a, b) -> LaurentSeries:
    return LaurentSeries.coerce(a) + LaurentSeries.coerce(b)


def mul(a, b) -> LaurentSeries:
    return LaurentSeries.coerce(a) * LaurentSeries.coerce(b)


def pow(a, k: int) -> LaurentSeries:  # noqa: A001 - mirrors the series API
    if k < 0:
        raise ValueError("pow needs a nonnegative exponent; use invert")
    return LaurentSeries.coerce(a) ** k


def invert(a) -> LaurentSeries:
    return LaurentSeries.coerce(a).invert()


def coefficient(a: LaurentSeries, e) -> Fraction:
    return a.coefficient(e)


def substitute_monomial(a: LaurentSeries, c: Number, monomial: Mapping[str, int], window=None):
    return a.substitute_monomial(c, monomial, window)


def substitute_linear(a: LaurentSeries, form: Mapping[str, Number], window: Mapping[str, int]):
    return a.substitute_linear(form, window)


# -- builders ---------------------------------------------------------------
#
# All builders are univariate in ``var`` (default ``x``) and exact up to
# ``var**order``.

def varsigma_series(order: int, var: str = "x") -> LaurentSeries:
    """2 sinh(x/2) = sum x^(2k+1) / (4^k (2k+1)!)."""
    _check_order(order)
    coeffs = {
        2 * k + 1: Fraction(1, 4**k * math.factorial(2 * k + 1))
        for k in range((order + 1) // 2)
    }
    return LaurentSeries.univariate(var, coeffs, order, lower=min(1, order))


def s_series(order: int, var: str = "x") -> LaurentSeries:
    """varsigma(x)/x, a unit power series with constant term 1."""
    _check_order(order)
    coeffs = {2 * k: Fraction(1, 4**k * math.factorial(2 * k + 1)) for k in range(order // 2 + 1)}
    return LaurentSeries.univariate(var, coeffs, order, lower=0)


def cosh_half_series(order: int, var: str = "x") -> LaurentSeries:
    """cosh(x/2)."""
    _check_order(order)
    return _cosh(order, Fraction(1, 2), var)


def exp_series(order: int, scale: Number = 1, var: str = "x") -> LaurentSeries:
    """exp(scale * x)."""
    _check_order(order)
    scale = _frac(scale)
    coeffs = {k: scale**k / math.factorial(k) for k in range(order + 1)}
    return LaurentSeries.univariate(var, coeffs, order, lower=0)


def sinh_over_x(order: int, var: str = "x") -> LaurentSeries:
    _check_order(order)
    coeffs = {2 * k: Fraction(1, math.factorial(2 * k + 1)) for k in range(order // 2 + 1)}
    return LaurentSeries.univariate(var, coeffs, order, lower=0)


def x_over_sinh(order: int, var: str = "x") -> LaurentSeries:
    return sinh_over_x(order, var).invert()


def x_over_tanh(order: int, var: str = "x") -> LaurentSeries:
    return _cosh(order, Fraction(1), var) * x_over_sinh(order, var)


def _cosh(order: int, scale: Fraction, var: str) -> LaurentSeries:
    coeffs = {2 * k: scale ** (2 * k) / math.factorial(2 * k) for k in range(order // 2 + 1)}
    return LaurentSeries.univariate(var, coeffs, order, lower=0)


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a nonnegative integer, got {order!r}")
