"""Heegaard Floer surgery calculus for knots built from Berge-Gabai satellites.

Ranks use  rank HF^(S^3_{m/n}(K)) = m + n*s_K + t^{m/n}_K  with
t^{m/n}_K = 2*max(0, n*(2*nu - 1) - m), valid for m > 0 when nu(K) >= nu(mirror K).
For L-space knots s_K = 0 and tau = nu = g, which is the only situation
the artifact derives on its own; catalog entries carry asserted data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alexander import alexander_of_closure, satellite_alexander, torus_alexander
from .descriptor import BGSat, Catalog, HFKnotData, KnotDescriptor, Torus, Unknot
from .errors import PreconditionError
from .laurent import LaurentPoly, ONE
from .pattern import (
    BergeGabaiPattern,
    braid_word,
    exceptional_slope_candidates,
    pattern_genus,
    pattern_is_lspace_knot_in_S3,
    twist,
)
from .surgery import Slope, satellite_surgery_correspondence


def genus(d: KnotDescriptor) -> int:
    if isinstance(d, Unknot):
        return 0
    if isinstance(d, Torus):
        return (d.p - 1) * (abs(d.q) - 1) // 2
    if isinstance(d, BGSat):
        return pattern_genus(d.pattern) + d.pattern.w * genus(d.companion)
    if isinstance(d, Catalog):
        return d.data.genus
    raise TypeError(f"not a knot descriptor: {d!r}")


def alexander(d: KnotDescriptor) -> LaurentPoly:
    """Symmetrized Alexander polynomial, built recursively via Delta_P(T) Delta_K(T^w)."""
    if isinstance(d, Unknot):
        return ONE
    if isinstance(d, Torus):
        return torus_alexander(d.p, abs(d.q))
    if isinstance(d, BGSat):
        dP = alexander_of_closure(braid_word(d.pattern))
        return satellite_alexander(dP, alexander(d.companion), d.pattern.w)
    if isinstance(d, Catalog):
        if d.alexander is None:
            raise PreconditionError(f"no Alexander polynomial recorded for {d.name}", "not_determined")
        return d.alexander
    raise TypeError(f"not a knot descriptor: {d!r}")


def t_invariant(m: int, n: int, nu: int) -> int:
    if n < 1:
        raise PreconditionError("slope denominator must be positive", "slope_denominator")
    return 2 * max(0, n * (2 * nu - 1) - m)


def satellite_criterion(P: BergeGabaiPattern, gK: int) -> bool:
    """(b + t*w) / w^2 >= 2*g(K) - 1, compared exactly."""
    if gK < 1:
        raise PreconditionError(
            "the satellite criterion needs a non-trivial companion (genus >= 1)", "trivial_companion"
        )
    return P.b + P.t * P.w >= (2 * gK - 1) * P.w * P.w


def is_lspace_knot(d: KnotDescriptor) -> bool:
    if isinstance(d, Unknot):
        return True
    if isinstance(d, Torus):
        return d.q > 0
    if isinstance(d, Catalog):
        return d.data.lspace
    if isinstance(d, BGSat):
        P, K = d.pattern, d.companion
        gK = genus(K)
        if gK == 0:
            # the companion is the unknot, so P(K) is P standardly embedded in S^3
            return pattern_is_lspace_knot_in_S3(P)
        if P.t < 0:
            return False
        return is_lspace_knot(K) and satellite_criterion(P, gK)
    raise TypeError(f"not a knot descriptor: {d!r}")


def hf_data(d: KnotDescriptor) -> HFKnotData:
    if isinstance(d, Catalog):
        return d.data
    if is_lspace_knot(d):
        return HFKnotData.lspace_knot(genus(d))
    raise PreconditionError(
        "HF data not determined by this artifact: the knot is not an L-space knot", "not_determined"
    )


def _check_rank_inputs(k: HFKnotData, s: Slope) -> None:
    if not k.lspace:
        raise PreconditionError("rank formula is only applied to L-space knot data", "not_lspace_data")
    if s.p1 < 1:
        raise PreconditionError(
            "negative-slope ranks out of scope; use rank HF^(Y) = rank HF^(-Y) with "
            "S^3_{m/n}(K) = -S^3_{-m/n}(mirror K) by hand",
            "negative_slope",
        )


def rank_surgery(k: HFKnotData, s: Slope) -> int:
    _check_rank_inputs(k, s)
    return s.p1 + s.p2 * k.s + t_invariant(s.p1, s.p2, k.nu)


def is_lspace_surgery(k: HFKnotData, s: Slope) -> bool:
    _check_rank_inputs(k, s)
    return k.s == 0 and t_invariant(s.p1, s.p2, k.nu) == 0


def min_twist(P: BergeGabaiPattern, gK: int) -> int:
    """Fewest positive full twists making (b + t*w)/w^2 >= 2*gK - 1, i.e. max(0, 2*gK - 1 - q)."""
    if P.t < 1:
        raise PreconditionError("min_twist needs a positively twisted pattern", "negative_twist")
    if gK < 1:
        raise PreconditionError("companion genus must be at least 1", "trivial_companion")
    k = max(0, (2 * gK - 1) - P.q)
    assert satellite_criterion(twist(P, k), gK)
    return k


def tau_g4_satellite(d: KnotDescriptor) -> tuple[int, int]:
    """(tau, g4) of an L-space satellite; both equal tau(P) + w*tau(K)."""
    if not isinstance(d, BGSat):
        raise PreconditionError("tau/g4 propagation applies to satellites only", "not_satellite")
    P, K = d.pattern, d.companion
    gK = genus(K)
    if gK == 0:
        raise PreconditionError("companion must be a non-trivial knot", "trivial_companion")
    if not is_lspace_knot(K):
        raise PreconditionError("companion must be an L-space knot", "companion_not_lspace")
    if not satellite_criterion(P, gK):
        raise PreconditionError("(b + t*w)/w^2 < 2*g(K) - 1", "criterion_unmet")
    tau = pattern_genus(P) + P.w * hf_data(K).tau
    g4 = pattern_genus(P) + P.w * gK
    return tau, g4


@dataclass(frozen=True)
class IdentityRow:
    d: int
    m: int
    satellite_genus: int
    left_from_genus: int  # t^m of P(K) from its genus
    left_closed_form: int  # same, expanded in w, t0, q, b, d
    right: int  # w^2 * s_K + t^{m/w^2}_K with s_K = 0

    @property
    def sides_equal(self) -> bool:
        return self.left_from_genus == self.right

    @property
    def both_zero(self) -> bool:
        return self.left_from_genus == 0 and self.right == 0

    @property
    def closed_form_agrees(self) -> bool:
        return self.left_from_genus == self.left_closed_form

    @property
    def equality_forces_zero(self) -> bool:
        # equality of the two sides forces both to vanish
        return self.sides_equal == self.both_zero

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "satellite_genus": self.satellite_genus,
            "left_from_genus": self.left_from_genus,
            "left_closed_form": self.left_closed_form,
            "right": self.right,
            "sides_equal": self.sides_equal,
            "both_zero": self.both_zero,
            "closed_form_agrees": self.closed_form_agrees,
            "equality_forces_zero": self.equality_forces_zero,
        }


def proof_identity_report(P: BergeGabaiPattern, gK: int) -> list[IdentityRow]:
    """Evaluate both sides of the rank equality for each candidate surgery m = d + t*w.

    The companion is an L-space knot of genus gK (s_K = 0, nu = gK); the
    satellite is taken to be an L-space knot too, so nu(P(K)) = g(P(K)).
    """
    if P.t < 1:
        raise PreconditionError("identity report needs a positively twisted pattern", "negative_twist")
    if gK < 1:
        raise PreconditionError("companion genus must be at least 1", "trivial_companion")
    w, b, t0, q = P.w, P.b, P.t0, P.q
    g_sat = pattern_genus(P) + w * gK
    rows = []
    for m in exceptional_slope_candidates(P):
        d = m - P.t * w
        left = t_invariant(m, 1, g_sat)
        closed = max(0, 4 * w * gK - 2 * w - 2 * t0 - 2 * q * w + 2 * b - 2 * d)
        f = Fraction(m, w * w)
        right = w * w * 0 + t_invariant(f.numerator, f.denominator, gK)
        rows.append(IdentityRow(d, m, g_sat, left, closed, right))
    return rows


def certified_surgeries(d: BGSat) -> list[tuple[int, Slope]]:
    """Candidate integral surgeries on P(K) with their companion slopes p/w^2."""
    return [(p, satellite_surgery_correspondence(d.pattern, p)) for p in exceptional_slope_candidates(d.pattern)]
