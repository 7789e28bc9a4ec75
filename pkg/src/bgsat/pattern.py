"""Berge-Gabai patterns in the solid torus.

A pattern is given by winding number ``w``, bridge width ``b`` and twist
number ``t``; it is the closure of

    (sigma_b ... sigma_1)(sigma_{w-1} ... sigma_1)^t

in B_w. We always write t = t0 + q*w with 1 <= t0 <= w-1.

Boundary curves on J = boundary of a neighbourhood of the pattern are
coefficient pairs (d, s) meaning d*mu + s*Lambda in the annulus framing or
d*mu + s*lambda in the Seifert framing of the pattern in S^3. Orientations
follow the convention mu . lambda = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braid import (
    BraidWord,
    Permutation,
    descending,
    permutation_of,
    seifert_genus_of_coherent_closure,
)
from .errors import BGError, InvalidPattern


@dataclass(frozen=True)
class BergeGabaiPattern:
    w: int
    b: int
    t: int

    @property
    def t0(self) -> int:
        return (self.t - 1) % self.w + 1

    @property
    def q(self) -> int:
        return (self.t - self.t0) // self.w

    @property
    def is_torus(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"BG({self.w},{self.b},{self.t})"


def _check_ranges(w: int, b: int, t: int) -> None:
    if w < 2:
        raise InvalidPattern(f"winding number must be >= 2, got {w}", "winding_range")
    if not 0 <= b <= w - 2:
        raise InvalidPattern(f"bridge width must lie in [0, {w - 2}], got {b}", "bridge_range")
    if t == 0:
        raise InvalidPattern("twist number must be non-zero", "twist_zero")
    if t % w == 0:
        raise InvalidPattern(f"twist number {t} is a multiple of w = {w}", "twist_multiple_of_w")


def braid_word(P: BergeGabaiPattern) -> BraidWord:
    """Braid word of the pattern; coherent (single-signed) for either sign of t.

    For t < 0 this uses the equal negative form
    (sigma_{w-1} ... sigma_{b+1})^-1 (sigma_{w-1} ... sigma_1)^(t+1).
    """
    w, b, t = P.w, P.b, P.t
    full = descending(w, w - 1)
    if t > 0:
        word = descending(w, b)
        for _ in range(t):
            word = word * full
        return word
    word = descending(w, w - 1, b + 1).inverse()
    neg_full = full.inverse()
    for _ in range(-(t + 1)):
        word = word * neg_full
    return word


def pattern_permutation(P: BergeGabaiPattern) -> Permutation:
    """Permutation of ``braid_word(P)`` without expanding the |t| full-twist factors."""
    w = P.w
    full = permutation_of(descending(w, w - 1))
    power = Permutation.identity(w)
    base, n = (full, P.t) if P.t > 0 else (full.inverse(), -(P.t + 1))
    while n:
        if n & 1:
            power = power * base
        base = base * base
        n >>= 1
    if P.t > 0:
        return permutation_of(descending(w, P.b)) * power
    return permutation_of(descending(w, w - 1, P.b + 1).inverse()) * power


def closure_components(P: BergeGabaiPattern) -> int:
    return len(pattern_permutation(P).cycles())


def construction_is_knot(w: int, b: int, t: int) -> bool:
    """True when the braid construction is in range and closes to a knot.

    This does not check the extra slope condition imposed by ``validate``.
    """
    try:
        _check_ranges(w, b, t)
    except InvalidPattern:
        return False
    P = BergeGabaiPattern(w, b, t)
    if b >= 1 and P.t0 == w - 1:
        return False
    return closure_components(P) == 1


def validate(w: int, b: int, t: int) -> BergeGabaiPattern:
    """Build a pattern, checking every necessary condition for it to be Berge-Gabai.

    Raises InvalidPattern with one of the codes ``winding_range``,
    ``bridge_range``, ``twist_zero``, ``twist_multiple_of_w``,
    ``t0_disallowed``, ``multi_component``, ``no_solid_torus_slope``.
    """
    _check_ranges(w, b, t)
    P = BergeGabaiPattern(w, b, t)
    if b >= 1 and P.t0 == w - 1:
        raise InvalidPattern(
            f"t0 = w - 1 = {w - 1} is not allowed when b = {b} >= 1 (closure is a link)",
            "t0_disallowed",
        )
    n = closure_components(P)
    if n != 1:
        raise InvalidPattern(f"braid closure has {n} components, not a knot", "multi_component")
    if b == 0 and gcd(w, t) != 1:
        raise InvalidPattern(f"gcd(w, t) = {gcd(w, t)} for a torus pattern", "multi_component")
    if not _candidate_offsets(P):
        # both b and b+1 share a factor with w, so no solid torus filling exists
        raise InvalidPattern(
            f"gcd(w, b) and gcd(w, b+1) both exceed 1 for w={w}, b={b}", "no_solid_torus_slope"
        )
    return P


def cable(m: int, n: int) -> BergeGabaiPattern:
    """The (m, n) cable pattern, m being the longitudinal winding."""
    return validate(m, 0, n)


def twist(P: BergeGabaiPattern, k: int) -> BergeGabaiPattern:
    """Add k positive full twists to all w strands."""
    if k < 0:
        raise ValueError("number of twists must be non-negative")
    return BergeGabaiPattern(P.w, P.b, P.t + k * P.w)


@dataclass(frozen=True)
class BoundaryCurve:
    """A curve coefficient pair on one of the two boundary tori.

    ``basis`` is one of ``"m,l"`` (on T = boundary of V), ``"mu,Lambda"`` or
    ``"mu,lambda"`` (on J).
    """

    a: int
    c: int
    basis: str

    def __post_init__(self):
        if self.basis not in ("m,l", "mu,Lambda", "mu,lambda"):
            raise ValueError(f"unknown basis {self.basis!r}")

    def is_slope(self) -> bool:
        return gcd(self.a, self.c) == 1


def curve_Lambda_to_lambda(curve: BoundaryCurve, P: BergeGabaiPattern) -> BoundaryCurve:
    """d*mu + s*Lambda  ->  (d + s*t*w)*mu + s*lambda."""
    if curve.basis != "mu,Lambda":
        raise ValueError("curve must be given in (mu, Lambda) coordinates")
    return BoundaryCurve(curve.a + curve.c * P.t * P.w, curve.c, "mu,lambda")


def curve_lambda_to_Lambda(curve: BoundaryCurve, P: BergeGabaiPattern) -> BoundaryCurve:
    if curve.basis != "mu,lambda":
        raise ValueError("curve must be given in (mu, lambda) coordinates")
    return BoundaryCurve(curve.a - curve.c * P.t * P.w, curve.c, "mu,Lambda")


def _candidate_offsets(P: BergeGabaiPattern) -> list[int]:
    return [d for d in (P.b, P.b + 1) if gcd(P.w, d) == 1]


def exceptional_slope_candidates(P: BergeGabaiPattern) -> list[int]:
    """Integral slopes t*w + d, d in {b, b+1} with gcd(w, d) = 1, in increasing order.

    Only a necessary condition: at least one of these fills the pattern
    exterior to a solid torus, but which one is not decided here.
    """
    out = [P.t * P.w + d for d in _candidate_offsets(P)]
    if not out:
        raise BGError(f"{P} has no exceptional slope candidates", "internal")
    return out


def candidate_offset(P: BergeGabaiPattern, p: int) -> int:
    """The d in {b, b+1} with p = t*w + d, or raise if p is not a candidate."""
    d = p - P.t * P.w
    if d not in _candidate_offsets(P):
        raise BGError(f"{p} is not an exceptional slope candidate of {P}", "not_candidate_slope")
    return d


def pattern_genus(P: BergeGabaiPattern) -> int:
    """Seifert genus of the pattern viewed as a knot in S^3."""
    if P.t > 0:
        return ((P.t - 1) * (P.w - 1) + P.b) // 2
    return seifert_genus_of_coherent_closure(braid_word(P))


def pattern_is_lspace_knot_in_S3(P: BergeGabaiPattern) -> bool:
    # positive braids have a positive lens space surgery; negative braids never do
    return P.t > 0
