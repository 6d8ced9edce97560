"""Size limits for the brute-force routes.

Defaults keep every computation at laptop scale.  They can be raised through
environment variables (``HZFOCK_MAX_SYM_N``, ``HZFOCK_MAX_GLUING_DPRIME``,
``HZFOCK_MAX_DIRECT_N``, ``HZFOCK_MAX_HURWITZ_DPRIME``) or per call via the ``limit=`` keyword.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, fields

from .errors import GuardrailError


@dataclass
class Limits:
    sym_n: int = 10  # group algebra of S_n; |S_10| ~ 3.6M
    gluing_dprime: int = 8  # (15)!! ~ 2.0M matchings
    direct_n: int = 8  # direct monotone factorisation search
    hurwitz_dprime: int = 4  # group-algebra Hurwitz routes inside cross-validation

    @classmethod
    def from_env(cls) -> "Limits":
        limits = cls()
        for f in fields(cls):
            key = f"HZFOCK_MAX_{f.name.upper()}"
            if key in os.environ:
                value = int(os.environ[key])
                if value > getattr(limits, f.name):
                    warnings.warn(f"{key}={value} raises the default guardrail", stacklevel=2)
                setattr(limits, f.name, value)
        return limits


LIMITS = Limits.from_env()


def check(value: int, limit: int | None, default: int, what: str) -> None:
    bound = default if limit is None else limit
    if value > bound:
        raise GuardrailError(f"{what} = {value} exceeds guardrail {bound}")
