"""Alexander polynomials from the reduced Burau representation.

For a braid beta in B_n whose closure is a knot,

    det(I - rho(beta)) = (1 + t + ... + t^(n-1)) * Delta(t)

up to units, where rho is the reduced Burau representation. We recover
Delta by multiplying by (1 - t) and dividing exactly by (1 - t^n).
"""

from __future__ import annotations

from math import gcd

from .braid import BraidWord, closure_component_count
from .errors import InexactDivision, PreconditionError
from .laurent import LaurentPoly, ONE, T, symmetrize, top_degree

Matrix = list[list[LaurentPoly]]

_ZERO = LaurentPoly()
_T_INV = LaurentPoly.monomial(-1)


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def generator_row(n: int, i: int, sign: int) -> dict[int, LaurentPoly]:
    """Non-identity row (0-based index i-1) of the reduced Burau image of sigma_i^sign.

    sigma_i  : row i has  t, -t, 1    in columns i-1, i, i+1
    sigma_i^-1: row i has 1, -1/t, 1/t in columns i-1, i, i+1
    (columns outside 1..n-1 are dropped).
    """
    r = i - 1
    if sign > 0:
        entries = {r - 1: T, r: -T, r + 1: ONE}
    else:
        entries = {r - 1: ONE, r: -_T_INV, r + 1: _T_INV}
    return {j: v for j, v in entries.items() if 0 <= j < n - 1}


def burau_generator(n: int, i: int, sign: int = 1) -> Matrix:
    M = identity_matrix(n - 1)
    row = [_ZERO] * (n - 1)
    for j, v in generator_row(n, i, sign).items():
        row[j] = v
    M[i - 1] = row
    return M


def matmul(A: Matrix, B: Matrix) -> Matrix:
    k = len(B)
    return [
        [sum((A[i][l] * B[l][j] for l in range(k)), _ZERO) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def reduced_burau(word: BraidWord) -> Matrix:
    """Product of the reduced Burau images of the letters, left to right."""
    n = word.width
    M = identity_matrix(n - 1)
    for i, sign in word.generators():
        # right-multiplying by a matrix that differs from I only in row i-1
        # changes only the columns touched by that row
        r = i - 1
        row = generator_row(n, i, sign)
        col_r = [M[a][r] for a in range(n - 1)]
        for j, v in row.items():
            delta = v - ONE if j == r else v
            if delta.is_zero():
                continue
            for a in range(n - 1):
                if col_r[a]:
                    M[a][j] = M[a][j] + col_r[a] * delta
    return M


def determinant(M: Matrix) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, 1/t]."""
    n = len(M)
    if n == 0:
        return ONE
    A = [row[:] for row in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not A[r][k].is_zero()), None)
            if swap is None:
                return _ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).divide_exact(prev)
        prev = A[k][k]
    return A[n - 1][n - 1] * sign


def alexander_of_closure(word: BraidWord) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the closure of ``word`` (a knot)."""
    if closure_component_count(word) != 1:
        raise PreconditionError("closure is a link, not a knot", "multi_component")
    n = word.width
    B = reduced_burau(word)
    I_minus_B = [[(ONE if i == j else _ZERO) - B[i][j] for j in range(n - 1)] for i in range(n - 1)]
    d = determinant(I_minus_B)
    try:
        delta = (d * (ONE - T)).divide_exact(ONE - T ** n)
    except InexactDivision as exc:  # pragma: no cover - would be a Burau bug
        raise InexactDivision(f"Burau determinant not divisible by 1 - t^{n}: {exc}", "internal")
    return symmetrize(delta)


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    if p < 2 or q < 2:
        raise PreconditionError("torus knot parameters must be at least 2", "torus_range")
    if gcd(p, q) != 1:
        raise PreconditionError(f"gcd({p}, {q}) != 1", "torus_not_coprime")
    num = (T ** (p * q) - ONE) * (T - ONE)
    den = (T ** p - ONE) * (T ** q - ONE)
    return symmetrize(num.divide_exact(den))


def satellite_alexander(dP: LaurentPoly, dK: LaurentPoly, w: int) -> LaurentPoly:
    """Delta_P(T) * Delta_K(T^w)."""
    return dP * dK.substitute_power(w)


def fibered_genus_from_alexander(d: LaurentPoly) -> int:
    """Genus of a fibered knot from its symmetric Alexander polynomial."""
    return top_degree(d)
