"""Laurent polynomials in one variable T with arbitrary-precision integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InexactDivision, NotPalindromic


class LaurentPoly:
    """Immutable sparse Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self._c = c
        self._hash = None

    @classmethod
    def constant(cls, a: int) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> "LaurentPoly":
        return cls({e: a})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Coefficients in ascending order starting at exponent ``low``."""
        return cls({low + k: a for k, a in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @staticmethod
    def _lift(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, a), = self._c.items()
            return LaurentPoly({e * n: a ** (-n)})
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Evaluate exactly at an integer or Fraction ``x``."""
        x = Fraction(x)
        val = sum((a * x**e for e, a in self._c.items()), Fraction(0))
        return int(val) if val.denominator == 1 else val

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def substitute_power(self, w: int) -> "LaurentPoly":
        """f(T) -> f(T**w)."""
        if w < 1:
            raise ValueError("substitution power must be positive")
        return LaurentPoly({e * w: a for e, a in self._c.items()})

    def reflect(self) -> "LaurentPoly":
        """f(T) -> f(T**-1)."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def is_symmetric(self) -> bool:
        return self == self.reflect()

    def divide_exact(self, g: "LaurentPoly") -> "LaurentPoly":
        """Quotient f / g in Z[T, T^-1]; raises InexactDivision if it does not exist."""
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        glo, ghi = g.min_degree(), g.max_degree()
        lead = g[ghi]
        rem = dict(self._c)
        q: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - ghi < min(rem) - glo:
                raise InexactDivision(f"{g} does not divide {self}")
            a = rem[top]
            if a % lead:
                raise InexactDivision(f"{g} does not divide {self}")
            k = top - ghi
            c = a // lead
            q[k] = c
            for e, b in g._c.items():
                v = rem.get(e + k, 0) - c * b
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return LaurentPoly(q)

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict[str, str]:
        """{exponent: coefficient} with both rendered as decimal strings."""
        return {str(e): str(self._c[e]) for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, str | int]) -> "LaurentPoly":
        return cls({int(e): int(a) for e, a in data.items()})


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def substitute_power(f: LaurentPoly, w: int) -> LaurentPoly:
    return f.substitute_power(w)


def symmetrize(f: LaurentPoly) -> LaurentPoly:
    """The representative u * T^j * f with g(T) = g(1/T) and positive top coefficient."""
    if f.is_zero():
        raise NotPalindromic("zero polynomial has no symmetric representative")
    lo, hi = f.min_degree(), f.max_degree()
    if (lo + hi) % 2:
        raise NotPalindromic(f"{f} has no symmetric representative")
    g = f.shift(-(lo + hi) // 2)
    if not g.is_symmetric():
        raise NotPalindromic(f"{f} is not palindromic up to a unit")
    if g[g.max_degree()] < 0:
        g = -g
    return g


def top_degree(f: LaurentPoly) -> int:
    if f.is_zero():
        raise ValueError("zero polynomial has no degree")
    return f.max_degree()


def _term(e: int, a: int, first: bool) -> str:
    mag = abs(a)
    if e == 0:
        body = str(mag)
    else:
        var = "T" if e == 1 else f"T^{e}"
        body = var if mag == 1 else f"{mag}*{var}"
    if first:
        return f"-{body}" if a < 0 else body
    return f" - {body}" if a < 0 else f" + {body}"


def render(f: LaurentPoly) -> str:
    """Ascending-exponent text form, e.g. ``T^-1 - 1 + T``."""
    if f.is_zero():
        return "0"
    c = f.coeffs
    return "".join(_term(e, c[e], i == 0) for i, e in enumerate(sorted(c)))


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
