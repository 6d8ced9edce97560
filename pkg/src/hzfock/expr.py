"""Parser for operator products such as ``E(2; z1) E(-2; z1+z2)``.

Grammar::

    product := term (WS term)*
    term    := "E" "(" int ";" arg ")"
    int     := ["+" | "-"] digits
    arg     := linear                 (the literal 0 is the zero form)
    linear  := [sign] mono (sign mono)*
    mono    := digits ["*"] ident | ident | digits
    ident   := [A-Za-z_][A-Za-z0-9_]*

A bare integer inside ``arg`` is only allowed when it is 0.
"""

from __future__ import annotations

from typing import Dict, List

from .errors import ParseError
from .fock import EOp, EProduct, LinearForm


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"unexpected {self._found()}", self.pos, repr(ch))
        self.pos += 1

    def _found(self) -> str:
        return repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def ident(self) -> str:
        start = self.pos
        t = self.text
        if self.pos < len(t) and (t[self.pos].isalpha() or t[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
                self.pos += 1
        return t[start : self.pos]


def _integer(sc: _Scanner) -> int:
    sign = 1
    ch = sc.peek()
    if ch in ("+", "-"):
        sign = -1 if ch == "-" else 1
        sc.pos += 1
    sc.skip_ws()
    d = sc.digits()
    if not d:
        raise ParseError(f"unexpected {sc._found()}", sc.pos, "integer energy")
    return sign * int(d)


def _linear(sc: _Scanner) -> LinearForm:
    coeffs: Dict[str, int] = {}
    constant = 0
    first = True
    while True:
        ch = sc.peek()
        sign = 1
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            sc.pos += 1
            sc.skip_ws()
        elif not first:
            break
        start = sc.pos
        d = sc.digits()
        if d and sc.pos < len(sc.text) and sc.text[sc.pos] == "*":
            sc.pos += 1
            sc.skip_ws()
        name = sc.ident()
        if not d and not name:
            raise ParseError(f"unexpected {sc._found()}", sc.pos, "identifier or 0")
        if name:
            coeffs[name] = coeffs.get(name, 0) + sign * (int(d) if d else 1)
        else:
            constant += sign * int(d)
            if constant:
                raise ParseError("nonzero constant in argument", start, "identifier")
        first = False
    return LinearForm(coeffs)


def _term(sc: _Scanner) -> EOp:
    if sc.peek() != "E":
        raise ParseError(f"unexpected {sc._found()}", sc.pos, "'E'")
    sc.pos += 1
    sc.expect("(")
    energy = _integer(sc)
    sc.expect(";")
    arg = _linear(sc)
    sc.expect(")")
    return EOp(energy, arg)


def parse_product(text: str) -> EProduct:
    """Parse a whitespace-separated product of ``E(a; arg)`` terms."""
    sc = _Scanner(text)
    ops: List[EOp] = []
    while sc.peek():
        ops.append(_term(sc))
    if not ops:
        raise ParseError("empty product", sc.pos, "'E'")
    return EProduct(tuple(ops))
