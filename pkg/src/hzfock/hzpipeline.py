"""The closed formula for eps_g(d') and cross-validation of all routes.

    eps_g(d') = (2d'-1)!! 2^(d'-2g) / (d'-2g+1)!
                * [u^2g] (u/sinh u)^2 (u/tanh u)^d'
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import config
from .errors import DomainError, HZError
from .fock import epsilon_fock
from .gluing import double_factorial, epsilon_bruteforce
from .hurwitz import h_grothendieck, h_monotone
from .series import (
    LaurentSeries,
    exp_series,
    s_series,
    x_over_sinh,
    x_over_tanh,
)

METHODS = ("formula", "gluing", "hurwitz-gr", "hurwitz-mono", "fock")


def validate(g, dprime) -> None:
    for name, value, low in (("genus", g, 0), ("d'", dprime, 1)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")
        if value < low:
            raise DomainError(f"{name} must be >= {low}, got {value}")


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise HZError(f"non-integral result {value} from {what}")
    if value < 0:
        raise HZError(f"negative result {value} from {what}")
    return int(value)


def epsilon_formula(g: int, dprime: int) -> int:
    validate(g, dprime)
    if dprime - 2 * g + 1 < 0:
        return 0
    order = 2 * g
    series = x_over_sinh(order, "u") ** 2 * x_over_tanh(order, "u") ** dprime
    prefactor = Fraction(double_factorial(2 * dprime - 1)) * Fraction(2) ** (dprime - 2 * g)
    prefactor /= math.factorial(dprime - 2 * g + 1)
    return _as_integer(prefactor * series.coefficient({"u": order}), "the closed formula")


def _line2(g: int, dprime: int) -> Fraction:
    """[u^(2g-1)] sum_w (2d')!/(d'!(d'-w)!) [z^w] S(uz)^(-2d'-2) S(2uz)^d' (uz)^-1."""
    order = 2 * g + dprime + 2
    s = s_series(order)
    s_uz = s.substitute_monomial(1, {"u": 1, "z": 1})
    s_2uz = s.substitute_monomial(2, {"u": 1, "z": 1})
    body = s_uz.invert() ** (2 * dprime + 2) * s_2uz**dprime
    body = body * LaurentSeries.monomial({"u": -1, "z": -1})
    total = Fraction(0)
    for w in range(-1, dprime + 1):
        c = Fraction(math.factorial(2 * dprime), math.factorial(dprime) * math.factorial(dprime - w))
        total += c * body.coefficient({"u": 2 * g - 1, "z": w})
    return total


def _line3(g: int, dprime: int) -> Fraction:
    """Half-angle form, assembled from exponential series only."""
    if dprime - 2 * g + 1 < 0:
        return Fraction(0)
    order = 2 * g + 4
    half_diff = exp_series(order, Fraction(1, 2), "u") - exp_series(order, Fraction(-1, 2), "u")
    full_diff = exp_series(order, 1, "u") - exp_series(order, -1, "u")
    half_u = LaurentSeries.monomial({"u": 1}, Fraction(1, 2))
    # (u/2)/sinh(u/2) = (u/2) / ((e^{u/2} - e^{-u/2})/2)
    first = half_u * half_diff.scale(Fraction(1, 2)).invert()
    second = full_diff * (half_diff**2).invert() * half_u
    series = first**2 * second**dprime
    prefactor = Fraction(double_factorial(2 * dprime - 1) * 2**dprime, math.factorial(dprime - 2 * g + 1))
    return prefactor * series.coefficient({"u": 2 * g})


def proofline_values(g: int, dprime: int) -> Dict[str, Fraction]:
    """Four equivalent series expressions for eps_g(d'), each evaluated on its own."""
    validate(g, dprime)
    return {
        "line1": epsilon_fock(g, dprime),
        "line2": _line2(g, dprime),
        "line3": _line3(g, dprime),
        "line4": Fraction(epsilon_formula(g, dprime)),
    }


def proofline_check(g: int, dprime: int) -> bool:
    values = proofline_values(g, dprime)
    first = values["line1"]
    return first.denominator == 1 and all(v == first for v in values.values())


# -- cross validation --------------------------------------------------------

@dataclass
class EpsilonResult:
    g: int
    dprime: int
    value: int
    method: str


@dataclass
class Skipped:
    g: int
    dprime: int
    method: str
    reason: str


@dataclass
class Report:
    dprime_max: int
    methods: Tuple[str, ...]
    results: List[EpsilonResult] = field(default_factory=list)
    skipped: List[Skipped] = field(default_factory=list)
    disagreements: List[Tuple[int, int]] = field(default_factory=list)
    bad_row_sums: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.disagreements and not self.bad_row_sums else "disagree"

    def value(self, g: int, dprime: int, method: str) -> Optional[int]:
        for r in self.results:
            if (r.g, r.dprime, r.method) == (g, dprime, method):
                return r.value
        return None

    def row(self, dprime: int, method: str) -> List[Optional[int]]:
        return [self.value(g, dprime, method) for g in genera(dprime)]

    def row_sum(self, dprime: int, method: str) -> Optional[int]:
        row = self.row(dprime, method)
        return None if any(v is None for v in row) else sum(row)

    def to_dict(self) -> dict:
        return {
            "dprime_max": self.dprime_max,
            "methods": list(self.methods),
            "results": [asdict(r) for r in self.results],
            "skipped": [asdict(s) for s in self.skipped],
            "verdict": self.verdict,
        }


def genera(dprime: int) -> range:
    """All g with 2g <= d' + 1."""
    return range((dprime + 1) // 2 + 1)


def _hurwitz(fn: Callable) -> Callable[[int, int], int]:
    def run(g: int, dprime: int) -> int:
        return _as_integer(2 * dprime * fn(g, dprime), fn.__name__)

    return run


def _gluing_histograms() -> Callable[[int, int], int]:
    cache: Dict[int, object] = {}

    def run(g: int, dprime: int) -> int:
        if dprime not in cache:
            cache[dprime] = epsilon_bruteforce(dprime)
        return cache[dprime][g]

    return run


def method_caps() -> Dict[str, int]:
    """Largest d' each method runs at by default inside cross-validation."""
    return {
        "formula": 10**6,
        "gluing": config.LIMITS.gluing_dprime,
        "hurwitz-gr": min(config.LIMITS.hurwitz_dprime, config.LIMITS.sym_n // 2),
        "hurwitz-mono": min(config.LIMITS.hurwitz_dprime, config.LIMITS.sym_n // 2),
        "fock": 12,
    }


def _evaluators() -> Dict[str, Callable[[int, int], int]]:
    return {
        "formula": epsilon_formula,
        "gluing": _gluing_histograms(),
        "hurwitz-gr": _hurwitz(h_grothendieck),
        "hurwitz-mono": _hurwitz(h_monotone),
        "fock": lambda g, d: _as_integer(epsilon_fock(g, d), "fock"),
    }


def evaluate(method: str, g: int, dprime: int) -> int:
    """eps_g(d') by one named method, ignoring the cross-validation caps."""
    validate(g, dprime)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    return _evaluators()[method](g, dprime)


def cross_validate(
    dprime_max: int,
    methods: Tuple[str, ...] = METHODS,
    caps: Optional[Dict[str, int]] = None,
) -> Report:
    """Compute every method on every (g, d') with d' <= dprime_max.

    Methods whose cap (default guardrail) is below d' are skipped and noted.
    The verdict is ``pass`` when all computed values agree cell by cell and
    every complete row sums to (2d'-1)!!.
    """
    validate(0, dprime_max)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    evaluators = _evaluators()
    caps = {**method_caps(), **(caps or {})}
    report = Report(dprime_max, tuple(methods))
    for d in range(1, dprime_max + 1):
        for g in genera(d):
            seen = set()
            for m in methods:
                fn = evaluators[m]
                if d > caps[m]:
                    report.skipped.append(Skipped(g, d, m, "guardrail"))
                    continue
                try:
                    value = fn(g, d)
                except HZError as exc:
                    report.skipped.append(Skipped(g, d, m, f"error: {exc}"))
                    continue
                report.results.append(EpsilonResult(g, d, value, m))
                seen.add(value)
            if len(seen) > 1:
                report.disagreements.append((g, d))
        for m in methods:
            total = report.row_sum(d, m)
            if total is not None and total != double_factorial(2 * d - 1):
                report.bad_row_sums.append((m, d))
    return report
