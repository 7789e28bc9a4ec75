"""Slopes, homology of Dehn fillings of the pattern exterior, and the
satellite/companion surgery correspondence."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BGError, PreconditionError
from .pattern import BergeGabaiPattern, candidate_offset


@dataclass(frozen=True, order=False)
class Slope:
    """Reduced surgery coefficient p1/p2 with p2 >= 1."""

    p1: int
    p2: int = 1

    def __post_init__(self):
        if self.p2 < 1:
            raise ValueError(f"slope denominator must be positive, got {self.p2}")
        if gcd(self.p1, self.p2) != 1:
            raise ValueError(f"slope {self.p1}/{self.p2} is not reduced")

    @classmethod
    def of(cls, p1: int, p2: int = 1) -> "Slope":
        """Normalize an arbitrary non-meridional pair to reduced form."""
        if p2 == 0:
            raise ValueError("the meridian slope 1/0 is not a surgery coefficient here")
        f = Fraction(p1, p2)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if not m:
            raise ValueError(f"cannot parse slope {text!r}; expected p or p/q with q > 0")
        p1 = int(m.group(1))
        p2 = int(m.group(2)) if m.group(2) is not None else 1
        if p2 == 0:
            raise ValueError("slope denominator must be positive")
        return cls.of(p1, p2)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p1, self.p2)

    def __str__(self) -> str:
        return str(self.p1) if self.p2 == 1 else f"{self.p1}/{self.p2}"


@dataclass(frozen=True)
class FillingHomology:
    free_rank: int
    torsion_order: int = 1

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank
        if self.torsion_order > 1:
            parts.append(f"Z/{self.torsion_order}")
        return " + ".join(parts) if parts else "0"


def filling_homology(w: int, s: Slope) -> FillingHomology:
    """H_1 of the pattern exterior filled along p1*mu + p2*lambda: Z + Z/gcd(w, p1)."""
    if w < 1:
        raise PreconditionError("winding number must be positive", "winding_range")
    return FillingHomology(1, gcd(w, s.p1))


def filling_kernel_generator(w: int, s: Slope) -> tuple[int, int]:
    """(m, l) coefficients of the generator of ker H_1(boundary) -> H_1(filling)."""
    if w == 0:
        raise PreconditionError("kernel formula needs non-zero winding", "winding_zero")
    g = gcd(w, s.p1)
    return s.p1 // g, s.p2 * w * w // g


# -- independent route: Smith normal form of a relation matrix --

def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Non-zero invariant factors d1 | d2 | ... of an integer matrix."""
    A = [list(r) for r in rows]
    if not A or not A[0]:
        return []
    m, n = len(A), len(A[0])
    out = []
    k = 0
    while k < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(k, m) for j in range(k, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[k], A[pi] = A[pi], A[k]
        for row in A:
            row[k], row[pj] = row[pj], row[k]
        while True:
            p = A[k][k]
            dirty = False
            for i in range(k + 1, m):
                c = A[i][k] // p
                if c:
                    A[i] = [a - c * b for a, b in zip(A[i], A[k])]
                if A[i][k]:
                    dirty = True
            for j in range(k + 1, n):
                c = A[k][j] // p
                if c:
                    for row in A:
                        row[j] -= c * row[k]
                if A[k][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(k + 1, m) for j in range(k + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[k] = [a + b for a, b in zip(A[k], A[bad[0]])]
                continue
            nz = [(abs(A[i][k]), i, k) for i in range(k, m) if A[i][k]]
            nz += [(abs(A[k][j]), k, j) for j in range(k, n) if A[k][j]]
            _, pi, pj = min(nz)
            A[k], A[pi] = A[pi], A[k]
            for row in A:
                row[k], row[pj] = row[pj], row[k]
        out.append(abs(A[k][k]))
        k += 1
    return out


def presented_group(generators: int, relations: list[list[int]]) -> FillingHomology:
    d = smith_invariants(relations)
    torsion = 1
    for x in d:
        torsion *= x
    return FillingHomology(generators - len(d), torsion)


def relation_matrix(w: int, s: Slope) -> list[list[int]]:
    """Relations on the basis (l, mu): the filling curve p1*mu + p2*lambda with lambda = w*l."""
    return [[s.p2 * w, s.p1]]


def snf_homology_oracle(w: int, s: Slope) -> FillingHomology:
    if w < 1:
        raise PreconditionError("winding number must be positive", "winding_range")
    return presented_group(2, relation_matrix(w, s))


def in_filling_kernel(w: int, s: Slope, m_coef: int, l_coef: int) -> bool:
    """Whether m_coef*m + l_coef*l maps to zero in the presented filling homology.

    m is homologous to w*mu, so the class is (l_coef, w*m_coef) on (l, mu);
    it is zero iff it is an integer multiple of the single relation.
    """
    (r_l, r_mu), = relation_matrix(w, s)
    v_l, v_mu = l_coef, w * m_coef
    # (v_l, v_mu) = k * (r_l, r_mu) for some integer k
    if r_l * v_mu != r_mu * v_l:
        return False
    if r_l:
        return v_l % r_l == 0
    if r_mu:
        return v_mu % r_mu == 0
    return v_l == 0 and v_mu == 0


def satellite_surgery_correspondence(P: BergeGabaiPattern, p: int) -> Slope:
    """Companion slope p / w^2 matching integral surgery p on P(K).

    Only defined for the exceptional slope candidates of P.
    """
    try:
        candidate_offset(P, p)
    except BGError as exc:
        raise PreconditionError(str(exc), "not_candidate_slope") from None
    return Slope(p, P.w * P.w)
