"""End-to-end theorem factory: from a weight pair (a, b) to certified
statements a*A_n^3 + a*B_n^3 + b*C_n^3 = c (or c*(-1)^n) where the three
sequences come from rational generating functions.

Pipeline: brute-force numeric seeds, morph each against (m, -m, n, -n) into a
parametric quadruple, solve one of the four quadratics as a Pell-like orbit,
evaluate the remaining three along the orbit, reconstruct their generating
functions, and certify the cubic identity on the orbit data itself.  Every
emitted theorem also re-certifies from its serialized form alone.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from math import comb

from .cfinite import (
    Certificate,
    RationalGF,
    certificate_bound,
    certify_zero,
    seq_from_terms,
    taylor_coefficients,
)
from .cubic import WeightedQuadruple, morph, search_quadruples
from .errors import (
    DefiniteForm,
    DegenerateMorph,
    EmptySeedSet,
    GuessFailed,
    InvalidForm,
    MalformedTheorem,
    NoOrbitFound,
    NonIntegralGF,
    PoleAtOrigin,
)
from .kernel import MultiPoly
from .quadform import QuadForm, sol_quad

log = logging.getLogger(__name__)

SIGN_SYMBOL = "sgn"
RHS_KINDS = ("constant", "alternating")


@dataclass(frozen=True)
class CubicTheorem:
    """A certified statement a*A^3 + a*B^3 + b*C^3 = c (or c*(-1)^n) about
    the Taylor coefficient sequences of three generating functions."""

    a: int
    b: int
    c: int
    rhs_kind: str
    gf_a: RationalGF
    gf_b: RationalGF
    gf_c: RationalGF
    certificate: Certificate
    provenance: dict

    @property
    def gfs(self) -> tuple[RationalGF, RationalGF, RationalGF]:
        return (self.gf_a, self.gf_b, self.gf_c)

    def sequences(self, count: int) -> tuple[list, list, list]:
        return tuple(taylor_coefficients(g, count) for g in self.gfs)

    def holds_at(self, n: int) -> bool:
        va, vb, vc = (taylor_coefficients(g, n + 1)[n] for g in self.gfs)
        rhs = self.c * (-1 if (self.rhs_kind == "alternating" and n % 2) else 1)
        return self.a * va**3 + self.a * vb**3 + self.b * vc**3 == rhs


def theorem_to_json(thm: CubicTheorem) -> dict:
    return {
        "a": thm.a,
        "b": thm.b,
        "c": thm.c,
        "rhs_kind": thm.rhs_kind,
        "gfs": [g.to_json() for g in thm.gfs],
        "certified_depth": thm.certificate.bound,
        "provenance": thm.provenance,
    }


def theorem_from_json(data) -> CubicTheorem:
    try:
        a = int(data["a"])
        b = int(data["b"])
        c = int(data["c"])
        kind = data["rhs_kind"]
        gf_list = data["gfs"]
        depth = int(data.get("certified_depth", 0))
        provenance = dict(data.get("provenance", {}))
        if kind not in RHS_KINDS:
            raise MalformedTheorem(f"bad rhs_kind {kind!r}")
        if len(gf_list) != 3:
            raise MalformedTheorem("expected exactly three generating functions")
        gfs = [RationalGF.from_json(g) for g in gf_list]
    except MalformedTheorem:
        raise
    except PoleAtOrigin as exc:
        raise MalformedTheorem(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedTheorem(f"theorem schema violation: {exc}") from exc
    if c == 0:
        raise MalformedTheorem("right-hand constant must be nonzero")
    if any(not g.num for g in gfs):
        raise MalformedTheorem("a sequence is identically zero")
    return CubicTheorem(
        a=a,
        b=b,
        c=c,
        rhs_kind=kind,
        gf_a=gfs[0],
        gf_b=gfs[1],
        gf_c=gfs[2],
        certificate=Certificate(bound=depth),
        provenance=provenance,
    )


def certify_theorem(thm: CubicTheorem) -> Certificate:
    """Re-certify a theorem from its generating functions alone: with r the
    degree of the lcm of the three denominators, checking
    a*A^3 + a*B^3 + b*C^3 - c*(+-1)^n = 0 for n < C(r+3, 3) + 2 proves it."""
    for g in thm.gfs:
        if not g.den or g.den[0] == 0:
            raise MalformedTheorem("generating function denominator is unusable")
    bound = certificate_bound([g.den for g in thm.gfs], 3)
    seq_a, seq_b, seq_c = (taylor_coefficients(g, bound) for g in thm.gfs)
    for n in range(bound):
        rhs = thm.c * (-1 if (thm.rhs_kind == "alternating" and n % 2) else 1)
        lhs = thm.a * seq_a[n] ** 3 + thm.a * seq_b[n] ** 3 + thm.b * seq_c[n] ** 3
        if lhs != rhs:
            return Certificate(bound=bound, witness=n)
    return Certificate(bound=bound)


def _poly_json(p: MultiPoly) -> list:
    return [[list(ev), c] for ev, c in p.sorted_terms()]


def _dedup_key(thm: CubicTheorem) -> tuple:
    terms = []
    for g in thm.gfs:
        terms.extend(taylor_coefficients(g, 12))
    flip = 1
    for t in terms:
        if t:
            flip = -1 if t < 0 else 1
            break
    canon = tuple(flip * t for t in terms)
    return (thm.a, thm.b, thm.c, thm.rhs_kind, canon)


def _sort_key(thm: CubicTheorem) -> tuple:
    gf_coeffs = tuple(
        coeff for g in thm.gfs for part in (g.num, g.den) for coeff in part
    )
    return (abs(thm.c), thm.c, gf_coeffs)


def forge(
    a: int,
    b: int,
    *,
    search_bound: int = 12,
    guess_order: int = 4,
    target_cap: int = 30,
    max_theorems: int = 10,
    orbit_bound: int = 2000,
    extra_seeds: list[WeightedQuadruple] | None = None,
) -> list[CubicTheorem]:
    """Discover certified theorems a*A^3 + a*B^3 + b*C^3 = c for the given
    weights.  Returns the canonically sorted, deduplicated list (empty when
    every pipeline branch fails); raises EmptySeedSet when not even a numeric
    seed exists within the search bound."""
    if a == 0 or b == 0:
        raise ValueError("weights must be nonzero")
    seeds = search_quadruples(a, b, search_bound)
    if extra_seeds:
        for seed in extra_seeds:
            if (seed.a, seed.b) != (a, b):
                raise ValueError(f"seed {seed} has weights {(seed.a, seed.b)}")
            if not seed.trivial and seed not in seeds:
                seeds.append(seed)
    if not seeds:
        raise EmptySeedSet(
            f"no nontrivial quadruple with coordinates within {search_bound} "
            f"for weights ({a}, {b})"
        )
    theorems: list[CubicTheorem] = []
    orbit_cache: dict[QuadForm, object] = {}
    for seed in seeds:
        try:
            quadruple = morph(seed)
        except DegenerateMorph as exc:
            log.debug("seed %s: %s", seed, exc)
            continue
        weights = quadruple.weights
        for j in range(4):
            try:
                form = QuadForm.from_poly(quadruple.polys[j])
            except InvalidForm as exc:
                log.debug("seed %s, index %d: %s", seed, j + 1, exc)
                continue
            if form not in orbit_cache:
                try:
                    orbit_cache[form] = sol_quad(
                        form, guess_order, bound=orbit_bound, target_cap=target_cap
                    )
                except (DefiniteForm, NoOrbitFound) as exc:
                    orbit_cache[form] = exc
            orbit = orbit_cache[form]
            if not hasattr(orbit, "target"):
                log.debug("seed %s, index %d: %s", seed, j + 1, orbit)
                continue
            thm = _build_theorem(seed, quadruple, weights, j, orbit)
            if thm is not None:
                theorems.append(thm)
    unique: dict[tuple, CubicTheorem] = {}
    for thm in theorems:
        unique.setdefault(_dedup_key(thm), thm)
    result = sorted(unique.values(), key=_sort_key)
    if not result:
        log.info(
            "no theorem for weights (%d, %d): %d seeds, all branches failed", a, b, len(seeds)
        )
    return result[:max_theorems]


def _build_theorem(seed, quadruple, weights, j, orbit) -> CubicTheorem | None:
    a, b = quadruple.a, quadruple.b
    e = orbit.target
    c = -weights[j] * e**3
    rhs_kind = orbit.kind
    r = len(orbit.gf_m.den) - 1
    order_cap = comb(r + 1, 2) + 1
    count = 2 * order_cap + 6
    ms = taylor_coefficients(orbit.gf_m, count)
    ns = taylor_coefficients(orbit.gf_n, count)
    # the two surviving polynomials of one weight class become A and B, the
    # odd one out becomes C: solving an a-slot leaves (b, b, a) and vice versa
    if j in (0, 1):
        ordered = [2, 3, 1 - j]
        thm_a, thm_b = b, a
    else:
        ordered = [0, 1, 5 - j]
        thm_a, thm_b = a, b
    if thm_a < 0:
        # negate the whole equation so the paired weight is positive
        thm_a, thm_b, c = -thm_a, -thm_b, -c
    value_seqs = []
    for i in ordered:
        p = quadruple.polys[i]
        value_seqs.append([p.evaluate({"m": mv, "n": nv}) for mv, nv in zip(ms, ns)])
    if any(all(v == 0 for v in s) for s in value_seqs):
        log.debug("seed %s, index %d: a sequence vanishes identically", seed, j + 1)
        return None
    try:
        gfs = [seq_from_terms(s, order_cap) for s in value_seqs]
    except (GuessFailed, NonIntegralGF) as exc:
        log.debug("seed %s, index %d: reconstruction failed: %s", seed, j + 1, exc)
        return None
    # certify on orbit data: degree-6 identity in the orbit sequences
    pa, pb, pc_poly = (quadruple.polys[i] for i in ordered)
    expr = thm_a * pa**3 + thm_a * pb**3 + thm_b * pc_poly**3
    if rhs_kind == "alternating":
        expr = expr - c * MultiPoly.variable(SIGN_SYMBOL)
    else:
        expr = expr - c
    cert = certify_zero(
        expr, {"m": orbit.gf_m, "n": orbit.gf_n}, sign_symbol=SIGN_SYMBOL
    )
    if not cert.certified:
        log.warning(
            "seed %s, index %d: orbit certificate refuted at n=%s",
            seed,
            j + 1,
            cert.witness,
        )
        return None
    provenance = {
        "seed": list(seed.coords),
        "weights": [a, b],
        "quadruple": [_poly_json(p) for p in quadruple.polys],
        "solved_index": j + 1,
        "solved_weight": weights[j],
        "orbit": orbit.to_json(),
    }
    return CubicTheorem(
        a=thm_a,
        b=thm_b,
        c=c,
        rhs_kind=rhs_kind,
        gf_a=gfs[0],
        gf_b=gfs[1],
        gf_c=gfs[2],
        certificate=cert,
        provenance=provenance,
    )


# --- rendering ---

def _gf_text(g: RationalGF, var: str = "t") -> str:
    return f"({_poly_text(g.num, var)})/({_poly_text(g.den, var)})"


def _poly_text(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    pieces = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        pieces.append(("-" if c < 0 else "+", body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _gf_latex(g: RationalGF, var: str = "t") -> str:
    num = _poly_text(g.num, var).replace("*", " ")
    den = _poly_text(g.den, var).replace("*", " ")
    return rf"\frac{{{num}}}{{{den}}}"


def _weight_prefix(w: int) -> str:
    if w == 1:
        return ""
    return f"({w})*" if w < 0 else f"{w}*"


def render(thm: CubicTheorem, fmt: str = "text") -> str:
    """Render a theorem as plain text, LaTeX, or the interchange JSON."""
    if fmt == "json":
        return json.dumps(theorem_to_json(thm), indent=2, sort_keys=True)
    rhs_val = str(thm.c)
    if thm.rhs_kind == "alternating":
        rhs_val = f"{thm.c}*(-1)^n"
    if fmt == "text":
        lines = [
            "Theorem: define integer sequences A(n), B(n), C(n) by",
            f"  sum_(n>=0) A(n) t^n = {_gf_text(thm.gf_a)}",
            f"  sum_(n>=0) B(n) t^n = {_gf_text(thm.gf_b)}",
            f"  sum_(n>=0) C(n) t^n = {_gf_text(thm.gf_c)}",
            "then for all n >= 0",
            f"  {_weight_prefix(thm.a)}A(n)^3 + {_weight_prefix(thm.a)}B(n)^3 "
            f"+ {_weight_prefix(thm.b)}C(n)^3 = {rhs_val}",
            f"(certified by checking n = 0 .. {thm.certificate.bound - 1})",
        ]
        return "\n".join(lines)
    if fmt == "latex":
        rhs_tex = str(thm.c) if thm.rhs_kind == "constant" else f"{thm.c}\\,(-1)^n"
        wa = "" if thm.a == 1 else f"{thm.a}\\,"
        wb = "" if thm.b == 1 else f"{thm.b}\\,"
        lines = [
            r"\begin{align*}",
            rf"\sum_{{n \ge 0}} A_n t^n &= {_gf_latex(thm.gf_a)} \\",
            rf"\sum_{{n \ge 0}} B_n t^n &= {_gf_latex(thm.gf_b)} \\",
            rf"\sum_{{n \ge 0}} C_n t^n &= {_gf_latex(thm.gf_c)} \\",
            rf"{wa}A_n^3 + {wa}B_n^3 + {wb}C_n^3 &= {rhs_tex}",
            r"\end{align*}",
        ]
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def parse_theorem(text: str) -> CubicTheorem:
    """Inverse of render(..., "json")."""
    return theorem_from_json(json.loads(text))
