"""Knot descriptors and their text grammar.

    D := U | T(p,q) | C(m,n)[D] | BG(w,b,t)[D] | PRETZEL(-2,3,7)

``C(m,n)`` is sugar for the torus pattern ``BG(m,0,n)``. A missing
``[D]`` after a pattern means the unknot companion. Rendering is canonical:
torus patterns print as ``C(m,n)`` and the companion is always bracketed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Union

from .errors import DescriptorSyntaxError, PreconditionError
from .laurent import LaurentPoly
from .pattern import BergeGabaiPattern, validate


@dataclass(frozen=True)
class HFKnotData:
    """Heegaard Floer data of a knot: genus, nu, s_K, tau and the L-space flag."""

    genus: int
    nu: int
    s: int
    tau: int
    lspace: bool

    def __post_init__(self):
        problems = []
        if self.genus < 0:
            problems.append("genus must be non-negative")
        if not self.tau <= self.nu <= self.genus:
            problems.append("need tau <= nu <= genus")
        if self.nu not in (self.tau, self.tau + 1):
            problems.append("nu must equal tau or tau + 1")
        if self.s < 0 or self.s % 2:
            problems.append("s_K must be a non-negative even integer")
        if self.lspace and not (self.s == 0 and self.nu == self.genus == self.tau):
            problems.append("an L-space knot has s_K = 0 and tau = nu = genus")
        if problems:
            raise PreconditionError("inconsistent HF data: " + "; ".join(problems), "hf_data_inconsistent")

    @classmethod
    def lspace_knot(cls, genus: int) -> "HFKnotData":
        return cls(genus, genus, 0, genus, True)

    def to_json(self) -> dict:
        return {"genus": self.genus, "nu": self.nu, "s": self.s, "tau": self.tau, "lspace": self.lspace}


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class Torus:
    """T(p, q) with p >= 2; q < 0 is the mirror of the positive torus knot."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or abs(self.q) < 2:
            raise PreconditionError(f"T({self.p},{self.q}) needs p >= 2 and |q| >= 2", "torus_range")
        if gcd(self.p, self.q) != 1:
            raise PreconditionError(f"T({self.p},{self.q}) is a link: gcd != 1", "torus_not_coprime")


@dataclass(frozen=True)
class BGSat:
    pattern: BergeGabaiPattern
    companion: "KnotDescriptor"


@dataclass(frozen=True)
class Catalog:
    name: str
    data: HFKnotData
    hyperbolic: bool
    alexander: LaurentPoly | None = field(default=None, compare=False)


KnotDescriptor = Union[Unknot, Torus, BGSat, Catalog]

U = Unknot()

# genus 5, with lens space surgeries at 18 and 19; Alexander polynomial is the
# Lehmer-type polynomial t^5 - t^4 + t^2 - t + 1 - t^-1 + t^-2 - t^-4 + t^-5
PRETZEL_237 = Catalog(
    "PRETZEL(-2,3,7)",
    HFKnotData.lspace_knot(5),
    hyperbolic=True,
    alexander=LaurentPoly({5: 1, 4: -1, 2: 1, 1: -1, 0: 1, -1: -1, -2: 1, -4: -1, -5: 1}),
)

CATALOG = {"PRETZEL(-2,3,7)": PRETZEL_237}


def render(d: KnotDescriptor) -> str:
    if isinstance(d, Unknot):
        return "U"
    if isinstance(d, Torus):
        return f"T({d.p},{d.q})"
    if isinstance(d, Catalog):
        return d.name
    if isinstance(d, BGSat):
        P = d.pattern
        head = f"C({P.w},{P.t})" if P.b == 0 else f"BG({P.w},{P.b},{P.t})"
        return f"{head}[{render(d.companion)}]"
    raise TypeError(f"not a knot descriptor: {d!r}")


_TOKEN = re.compile(r"(?P<int>[+-]?\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[()\[\],])")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise DescriptorSyntaxError("unexpected character", text, pos)
            self.tokens.append((m.lastgroup, m.group(), pos))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _expect(self, value: str):
        kind, val, pos = self._next()
        if val != value:
            found = "end of input" if kind == "end" else repr(val)
            raise DescriptorSyntaxError(f"expected {value!r}, found {found}", self.text, pos)

    def _int(self) -> int:
        kind, val, pos = self._next()
        if kind != "int":
            raise DescriptorSyntaxError("expected an integer", self.text, pos)
        return int(val)

    def _args(self, n: int) -> list[int]:
        self._expect("(")
        out = [self._int()]
        for _ in range(n - 1):
            self._expect(",")
            out.append(self._int())
        self._expect(")")
        return out

    def _companion(self) -> KnotDescriptor:
        if self._peek()[1] != "[":
            return U
        self._next()
        inner = self.descriptor()
        self._expect("]")
        return inner

    def descriptor(self) -> KnotDescriptor:
        kind, val, pos = self._next()
        if kind != "name":
            raise DescriptorSyntaxError("expected a knot descriptor", self.text, pos)
        name = val.upper()
        if name == "U":
            return U
        if name == "T":
            p, q = self._args(2)
            return Torus(p, q)
        if name == "C":
            m, n = self._args(2)
            return BGSat(validate(m, 0, n), self._companion())
        if name == "BG":
            w, b, t = self._args(3)
            return BGSat(validate(w, b, t), self._companion())
        if name == "PRETZEL":
            args = self._args(3)
            key = f"PRETZEL({','.join(map(str, args))})"
            if key not in CATALOG:
                raise PreconditionError(f"{key} is not in the catalog", "unknown_catalog_entry")
            return CATALOG[key]
        raise DescriptorSyntaxError(f"unknown descriptor head {val!r}", self.text, pos)

    def parse(self) -> KnotDescriptor:
        d = self.descriptor()
        kind, val, pos = self._peek()
        if kind != "end":
            raise DescriptorSyntaxError(f"trailing input {val!r}", self.text, pos)
        return d


def parse_descriptor(text: str) -> KnotDescriptor:
    """Parse the descriptor grammar; raises DescriptorSyntaxError or a validation error."""
    return _Parser(text).parse()
