"""Iterated satellites whose large surgeries are L-spaces with prescribed JSJ pieces.

Seifert layers are the trefoil followed by (2, n) cables; hyperbolic layers are
a hyperbolic Berge-Gabai pattern (default BG(5,2,3)) twisted just enough to
satisfy the satellite criterion, or the (-2,3,7) pretzel knot as a seed when
there are no Seifert layers. Piece counts are read off the construction;
no geometry is computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .descriptor import PRETZEL_237, BGSat, Catalog, KnotDescriptor, Torus, Unknot, render
from .errors import PreconditionError
from .hfcalc import certified_surgeries, genus, hf_data, is_lspace_knot, is_lspace_surgery, min_twist
from .pattern import BergeGabaiPattern, candidate_offset, twist, validate

DEFAULT_HYPERBOLIC_PATTERN = (5, 2, 3)

CAVEAT = (
    "every slope p >= 2g - 1 gives an L-space; all but finitely many of these fillings "
    "are irreducible with the stated JSJ pieces"
)


@dataclass(frozen=True)
class Layer:
    kind: str  # "torus", "cable", "hyperbolic_seed" or "hyperbolic_pattern"
    descriptor: str
    piece: str  # "seifert" or "hyperbolic"
    params: dict
    companion_genus: int
    genus: int
    inequality: str = ""

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "piece": self.piece,
            "descriptor": self.descriptor,
            "params": self.params,
            "companion_genus": self.companion_genus,
            "genus": self.genus,
        }
        if self.inequality:
            out["inequality"] = self.inequality
        return out


@dataclass(frozen=True)
class JSJPlan:
    descriptor: KnotDescriptor
    seifert_pieces: int
    hyperbolic_pieces: int
    genus: int
    lspace_slope_threshold: int
    certified_slopes: tuple[int, ...]
    layers: tuple[Layer, ...] = ()
    flags: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "descriptor": render(self.descriptor),
            "seifert_pieces": self.seifert_pieces,
            "hyperbolic_pieces": self.hyperbolic_pieces,
            "genus": self.genus,
            "lspace_slope_threshold": self.lspace_slope_threshold,
            "lspace_slopes": f"p >= {self.lspace_slope_threshold}",
            "certified_slopes": list(self.certified_slopes),
            "layers": [layer.to_json() for layer in self.layers],
            "flags": list(self.flags),
            "caveat": CAVEAT,
        }


def next_cable_twist(g: int) -> int:
    """Smallest odd n >= max(3, 2(2g - 1)), so that n/2 >= 2g - 1."""
    n = max(3, 2 * (2 * g - 1))
    return n if n % 2 else n + 1


def top_certified_slopes(d: KnotDescriptor) -> tuple[int, ...]:
    if isinstance(d, BGSat):
        return tuple(p for p, _ in certified_surgeries(d))
    return ()


def build_plan(s: int, r: int, hyperbolic_pattern: tuple[int, int, int] = DEFAULT_HYPERBOLIC_PATTERN) -> JSJPlan:
    if s < 0 or r < 0:
        raise PreconditionError("piece counts must be non-negative", "negative_count")
    if s + r == 0:
        raise PreconditionError("at least one of s, r must be non-zero", "empty_plan")
    base = validate(*hyperbolic_pattern)
    if base.b == 0:
        raise PreconditionError("a torus pattern is Seifert fibred, not hyperbolic", "pattern_not_hyperbolic")
    if base.t < 1:
        raise PreconditionError("hyperbolic pattern must be positively twisted", "negative_twist")
    flags = [f"hyperbolic:{base}:asserted-not-computed"]

    layers: list[Layer] = []
    K: KnotDescriptor = Unknot()
    for i in range(s):
        g_prev = genus(K)
        if i == 0:
            K = Torus(2, 3)
            layers.append(Layer("torus", render(K), "seifert", {"p": 2, "q": 3}, 0, genus(K)))
            continue
        n = next_cable_twist(g_prev)
        K = BGSat(validate(2, 0, n), K)
        layers.append(
            Layer(
                "cable", render(K), "seifert", {"m": 2, "n": n}, g_prev, genus(K),
                f"{n}/2 >= 2*{g_prev} - 1 = {2 * g_prev - 1}",
            )
        )
    hyper_left = r
    if s == 0 and r > 0:
        K = PRETZEL_237
        layers.append(Layer("hyperbolic_seed", render(K), "hyperbolic", {"name": K.name}, 0, genus(K)))
        flags.append(f"hyperbolic:{K.name}:asserted-not-computed")
        hyper_left -= 1
    for _ in range(hyper_left):
        g_prev = genus(K)
        # q >= 2g - 1, and at least one twist beyond the base pattern
        k = max(1, min_twist(base, g_prev))
        P = twist(base, k)
        K = BGSat(P, K)
        layers.append(
            Layer(
                "hyperbolic_pattern", render(K), "hyperbolic",
                {"w": P.w, "b": P.b, "t": P.t, "t0": P.t0, "q": P.q}, g_prev, genus(K),
                f"({P.b} + {P.t}*{P.w})/{P.w}^2 = {P.b + P.t * P.w}/{P.w * P.w} >= 2*{g_prev} - 1 = {2 * g_prev - 1}",
            )
        )

    g = genus(K)
    return JSJPlan(
        descriptor=K,
        seifert_pieces=s,
        hyperbolic_pieces=r,
        genus=g,
        lspace_slope_threshold=2 * g - 1,
        certified_slopes=top_certified_slopes(K),
        layers=tuple(layers),
        flags=tuple(flags),
    )


def count_pieces(d: KnotDescriptor) -> tuple[int, int]:
    """(seifert, hyperbolic) layer counts read from the descriptor structure."""
    if isinstance(d, Unknot):
        return 0, 0
    if isinstance(d, Torus):
        return 1, 0
    if isinstance(d, Catalog):
        return (0, 1) if d.hyperbolic else (1, 0)
    if isinstance(d, BGSat):
        s, r = count_pieces(d.companion)
        return (s + 1, r) if d.pattern.b == 0 else (s, r + 1)
    raise TypeError(f"not a knot descriptor: {d!r}")


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class PlanReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok} for c in self.checks
            ],
        }


def verify_plan(plan: JSJPlan) -> PlanReport:
    d = plan.descriptor
    g = genus(d)
    s, r = count_pieces(d)
    checks = [
        Check("lspace_knot", True, is_lspace_knot(d)),
        Check("genus", plan.genus, g),
        Check("lspace_slope_threshold", plan.lspace_slope_threshold, 2 * g - 1),
        Check("seifert_pieces", plan.seifert_pieces, s),
        Check("hyperbolic_pieces", plan.hyperbolic_pieces, r),
        Check("certified_slopes", tuple(plan.certified_slopes), top_certified_slopes(d)),
        Check("nonempty", True, (plan.seifert_pieces, plan.hyperbolic_pieces) != (0, 0)),
    ]
    if isinstance(d, BGSat) and genus(d.companion) > 0:
        ok = True
        try:
            companion = hf_data(d.companion)
            for p, slope in certified_surgeries(d):
                candidate_offset(d.pattern, p)
                if p < 2 * g - 1 or not is_lspace_surgery(companion, slope):
                    ok = False
        except PreconditionError:
            ok = False
        checks.append(Check("certified_slopes_lspace", True, ok))
    return PlanReport(tuple(checks))


def with_twist_offset(plan: JSJPlan, delta: int) -> JSJPlan:
    """Copy of ``plan`` whose top pattern has ``delta`` extra full twists (may be negative).

    Only the descriptor changes; the recorded fields stay, so verification
    shows what the perturbation breaks.
    """
    d = plan.descriptor
    if not isinstance(d, BGSat):
        raise PreconditionError("top layer is not a pattern satellite", "not_satellite")
    P = d.pattern
    Pn = BergeGabaiPattern(P.w, P.b, P.t + delta * P.w)
    validate(Pn.w, Pn.b, Pn.t)
    return replace(plan, descriptor=BGSat(Pn, d.companion))
