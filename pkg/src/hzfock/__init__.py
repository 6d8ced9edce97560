"""Exact computation and cross-validation of the Harer-Zagier numbers eps_g(d')."""

from .errors import (
    DivergentExpectation,
    DomainError,
    GuardrailError,
    HZError,
    NonInvertibleError,
    ParseError,
    WindowError,
)
from .fock import EOp, EProduct, LinearForm, commutator, epsilon_fock, fact4_expansion, vev
from .gluing import enumerate_matchings, epsilon_bruteforce, genus_of
from .hurwitz import HurwitzSpec, h_grothendieck, h_monotone, h_monotone_direct
from .hzpipeline import cross_validate, epsilon_formula, proofline_check
from .series import LaurentSeries
from .symgroup import AlgebraElement, Partition, Permutation

__version__ = "0.1.0"
