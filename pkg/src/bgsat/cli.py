"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 semantic/precondition error.
With ``--json`` every command prints one object with keys
``command``, ``inputs``, ``results``, ``warnings`` (plus ``error`` on failure).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .alexander import alexander_of_closure
from .descriptor import BGSat, parse_descriptor, render
from .errors import BGError, DescriptorSyntaxError
from .hfcalc import (
    alexander,
    certified_surgeries,
    genus,
    hf_data,
    is_lspace_knot,
    is_lspace_surgery,
    min_twist,
    proof_identity_report,
    rank_surgery,
    satellite_criterion,
    t_invariant,
)
from .jsjbuild import build_plan, verify_plan
from .laurent import LaurentPoly
from .pattern import (
    braid_word,
    exceptional_slope_candidates,
    pattern_genus,
    pattern_is_lspace_knot_in_S3,
    twist,
    validate,
)
from .surgery import (
    Slope,
    filling_homology,
    filling_kernel_generator,
    in_filling_kernel,
    satellite_surgery_correspondence,
    snf_homology_oracle,
)

EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2

CANDIDATE_WARNING = (
    "exceptional slopes are candidates only: at least one of them fills the pattern "
    "exterior to a solid torus, which one is not decided"
)


class UsageError(Exception):
    pass


@dataclass
class Command:
    name: str
    inputs: dict = field(default_factory=dict)


def _poly_json(f: LaurentPoly) -> dict:
    return {"text": str(f), "coefficients": f.to_json()}


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- command implementations; each returns (results, warnings) --

def cmd_pattern(w: int, b: int, t: int):
    P = validate(w, b, t)
    word = braid_word(P)
    results = {
        "pattern": str(P),
        "w": P.w,
        "b": P.b,
        "t": P.t,
        "t0": P.t0,
        "q": P.q,
        "braid_word": word.to_list(),
        "genus": pattern_genus(P),
        "exceptional_slope_candidates": exceptional_slope_candidates(P),
        "lspace_knot_in_S3": pattern_is_lspace_knot_in_S3(P),
        "alexander": _poly_json(alexander_of_closure(word)),
    }
    return results, [CANDIDATE_WARNING]


def cmd_check(descriptor: str):
    d = parse_descriptor(descriptor)
    lspace = is_lspace_knot(d)
    g = genus(d)
    results: dict = {"descriptor": render(d), "lspace_knot": lspace, "genus": g}
    warnings = []
    try:
        data = hf_data(d)
        results["tau"] = data.tau
        results["g4"] = data.genus if data.lspace else None
        results["hf_data"] = data.to_json()
    except BGError:
        results["tau"] = None
        results["g4"] = None
        results["hf_data"] = None
        warnings.append("HF data not determined: not an L-space knot")
    results["lspace_slope_threshold"] = 2 * g - 1 if lspace else None
    if isinstance(d, BGSat):
        P, K = d.pattern, d.companion
        gK = genus(K)
        if gK > 0:
            results["criterion"] = {
                "lhs": _frac(Fraction(P.b + P.t * P.w, P.w * P.w)),
                "rhs": 2 * gK - 1,
                "holds": satellite_criterion(P, gK),
            }
        if lspace and gK > 0:
            results["tau_decomposition"] = {
                "pattern": pattern_genus(P),
                "winding": P.w,
                "companion": hf_data(K).tau,
            }
        pairs = certified_surgeries(d)
        results["certified_slopes"] = [p for p, _ in pairs]
        results["companion_slopes"] = [str(s) for _, s in pairs]
        warnings.append(CANDIDATE_WARNING)
    return results, warnings


def cmd_rank(descriptor: str, slope: str):
    d = parse_descriptor(descriptor)
    s = _parse_slope(slope)
    data = hf_data(d)
    results = {
        "descriptor": render(d),
        "slope": str(s),
        "rank": rank_surgery(data, s),
        "h1_order": abs(s.p1),
        "lspace_surgery": is_lspace_surgery(data, s),
        "t_invariant": t_invariant(s.p1, s.p2, data.nu),
        "s": data.s,
        "nu": data.nu,
    }
    return results, []


def cmd_surgery(descriptor: str, p: int):
    d = parse_descriptor(descriptor)
    if not isinstance(d, BGSat):
        raise BGError("surgery correspondence needs a pattern satellite descriptor", "not_satellite")
    s = satellite_surgery_correspondence(d.pattern, p)
    K = d.companion
    results = {
        "descriptor": render(d),
        "p": p,
        "companion": render(K),
        "companion_slope": str(s),
        "statement": f"S^3_{p}({render(d)}) = S^3_{s}({render(K)})",
    }
    warnings = [CANDIDATE_WARNING]
    try:
        data = hf_data(K)
        results["rank"] = rank_surgery(data, s)
        results["lspace"] = is_lspace_surgery(data, s)
    except BGError as exc:
        results["rank"] = None
        results["lspace"] = None
        warnings.append(f"rank not determined: {exc}")
    return results, warnings


def cmd_alexander(descriptor: str):
    d = parse_descriptor(descriptor)
    f = alexander(d)
    results = {
        "descriptor": render(d),
        "alexander": _poly_json(f),
        "top_degree": f.max_degree(),
        "genus": genus(d),
        "value_at_1": f(1),
    }
    return results, []


def cmd_homology(w: int, slope: str):
    s = _parse_slope(slope)
    h = filling_homology(w, s)
    oracle = snf_homology_oracle(w, s)
    km, kl = filling_kernel_generator(w, s)
    results = {
        "w": w,
        "slope": str(s),
        "homology": str(h),
        "free_rank": h.free_rank,
        "torsion_order": h.torsion_order,
        "kernel_generator": {"m": km, "l": kl},
        "snf_agrees": h == oracle,
        "kernel_annihilated": in_filling_kernel(w, s, km, kl),
    }
    return results, []


def cmd_mintwist(w: int, b: int, t: int, gK: int):
    P = validate(w, b, t)
    k = min_twist(P, gK)
    Pk = twist(P, k)
    results = {
        "pattern": str(P),
        "companion_genus": gK,
        "q": P.q,
        "min_twist": k,
        "twisted_pattern": str(Pk),
        "criterion": {
            "lhs": _frac(Fraction(Pk.b + Pk.t * Pk.w, Pk.w * Pk.w)),
            "rhs": 2 * gK - 1,
            "holds": satellite_criterion(Pk, gK),
        },
    }
    return results, []


def cmd_jsj(seifert: int, hyperbolic: int, pattern: tuple[int, int, int]):
    plan = build_plan(seifert, hyperbolic, pattern)
    report = verify_plan(plan)
    results = plan.to_json()
    results["verified"] = report.ok
    warnings = [] if report.ok else [f"verification failed: {', '.join(report.failures())}"]
    return results, warnings


def cmd_identity(w: int, b: int, t: int, gK: int):
    P = validate(w, b, t)
    rows = proof_identity_report(P, gK)
    results = {
        "pattern": str(P),
        "companion_genus": gK,
        "t0": P.t0,
        "q": P.q,
        "rows": [r.to_json() for r in rows],
        "equality_forces_zero": all(r.equality_forces_zero for r in rows),
    }
    return results, []


COMMANDS = {
    "pattern": cmd_pattern,
    "check": cmd_check,
    "rank": cmd_rank,
    "surgery": cmd_surgery,
    "alexander": cmd_alexander,
    "homology": cmd_homology,
    "mintwist": cmd_mintwist,
    "jsj": cmd_jsj,
    "identity": cmd_identity,
}


def run(cmd: Command) -> tuple[dict, int]:
    """Execute a command; returns the JSON-ready payload and the exit code."""
    payload = {"command": cmd.name, "inputs": dict(cmd.inputs), "results": None, "warnings": []}
    try:
        results, warnings = COMMANDS[cmd.name](**cmd.inputs)
    except (UsageError, DescriptorSyntaxError) as exc:
        payload["error"] = {"code": getattr(exc, "code", "usage"), "message": str(exc)}
        return payload, EXIT_USAGE
    except BGError as exc:
        payload["error"] = {"code": exc.code, "message": str(exc)}
        return payload, EXIT_SEMANTIC
    payload["results"] = results
    payload["warnings"] = warnings
    return payload, EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pattern_triple(text: str) -> tuple[int, int, int]:
    try:
        w, b, t = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected w,b,t") from None
    return w, b, t


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress warnings")

    parser = _Parser(prog="bgsat", description="Berge-Gabai satellite and L-space calculus")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--quiet", action="store_true", help="suppress warnings")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pattern", parents=[common], help="pattern parameters, genus, slopes")
    for name in ("w", "b", "t"):
        p.add_argument(name, type=int)

    p = sub.add_parser("check", parents=[common], help="L-space knot test, genus, tau")
    p.add_argument("descriptor")

    p = sub.add_parser("rank", parents=[common], help="rank of HF-hat of a surgery")
    p.add_argument("descriptor")
    p.add_argument("slope")

    p = sub.add_parser("surgery", parents=[common], help="satellite/companion surgery correspondence")
    p.add_argument("descriptor")
    p.add_argument("p", type=int)

    p = sub.add_parser("alexander", parents=[common], help="symmetrized Alexander polynomial")
    p.add_argument("descriptor")

    p = sub.add_parser("homology", parents=[common], help="H_1 of a filling of the pattern exterior")
    p.add_argument("w", type=int)
    p.add_argument("slope")

    for name, hlp in (("mintwist", "fewest twists for the satellite criterion"),
                      ("identity", "rank-identity values from the proof")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        for arg in ("w", "b", "t", "gK"):
            p.add_argument(arg, type=int)

    p = sub.add_parser("jsj", parents=[common], help="L-space knot with given JSJ piece counts")
    p.add_argument("--seifert", type=int, required=True)
    p.add_argument("--hyperbolic", type=int, required=True)
    p.add_argument("--pattern", type=_pattern_triple, default=(5, 2, 3), help="hyperbolic pattern w,b,t")
    return parser


def command_from_args(ns: argparse.Namespace) -> Command:
    name = ns.command
    skip = {"command", "json", "quiet"}
    inputs = {k: v for k, v in vars(ns).items() if k not in skip}
    if name == "jsj":
        inputs["pattern"] = tuple(inputs["pattern"])
    return Command(name, inputs)


def _render_value(v) -> str:
    if isinstance(v, dict) and "text" in v and "coefficients" in v:
        return v["text"]
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if v is None:
        return "-"
    return str(v)


def render_text(payload: dict, quiet: bool = False) -> str:
    lines = []
    if "error" in payload:
        lines.append(f"error [{payload['error']['code']}]: {payload['error']['message']}")
        return "\n".join(lines)
    results = payload["results"]
    for key, value in results.items():
        if key == "layers":
            for i, layer in enumerate(value, 1):
                ineq = f"  ({layer['inequality']})" if "inequality" in layer else ""
                lines.append(f"layer {i}: {layer['piece']:<10} {layer['descriptor']}  g={layer['genus']}{ineq}")
        elif key == "rows":
            for row in value:
                lines.append(
                    f"d={row['d']} m={row['m']}: left={row['left_from_genus']} "
                    f"(closed form {row['left_closed_form']}) right={row['right']} "
                    f"equal={_render_value(row['sides_equal'])} both_zero={_render_value(row['both_zero'])}"
                )
        else:
            lines.append(f"{key}: {_render_value(value)}")
    if not quiet:
        lines.extend(f"warning: {w}" for w in payload["warnings"])
    return "\n".join(lines)


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cmd = command_from_args(ns)
    payload, code = run(cmd)
    if ns.json:
        sys.stdout.write(dumps(payload))
    else:
        out = render_text(payload, quiet=ns.quiet)
        stream = sys.stderr if code else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
