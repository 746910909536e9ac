"""Start-with-the-answer factories: turn parametric solutions into implicit
Diophantine equations by iterated resultants, build cubics with no nontrivial
solutions by nonsingular substitution into a known insoluble equation, and
discover integer forms of a chosen degree that are constant (or alternating)
along tuples of C-finite sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .cfinite import (
    Certificate,
    RationalGF,
    certificate_bound,
    certify_zero,
    taylor_coefficients,
)
from .errors import (
    EliminationCollapse,
    NoForm,
    NoTargetedForm,
    SingularSubstitution,
)
from .kernel import (
    MultiPoly,
    content_primitive,
    rational_nullspace,
    resultant,
)

SIGN_SYMBOL = "sgn"
TARGETS = ("constant", "alternating", "none")


def _eliminate(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant of f and g in var; if one input is already free of var it is
    itself a valid eliminant and is returned unchanged."""
    if f.degree_in(var) == 0:
        return f
    if g.degree_in(var) == 0:
        return g
    return resultant(f, g, var)


def implicitize(p: MultiPoly, q: MultiPoly, r: MultiPoly) -> MultiPoly:
    """Implicit equation S(x, y, z) with S(P, Q, R) identically zero, for the
    parametrization x = P(m, n), y = Q(m, n), z = R(m, n).

    S is the primitive part of res_n(res_m(x - P, y - Q), res_m(x - P, z - R)).
    It may carry extraneous factors; minimality is not promised, only that the
    substitution vanishes (asserted before returning).
    """
    for poly in (p, q, r):
        if poly.is_constant():
            raise ValueError("parametrization components must be nonconstant")
        extra = set(poly.used_variables()) - {"m", "n"}
        if extra:
            raise ValueError(f"parametrization must use only m and n, found {extra}")
    vs = ("m", "n", "x", "y", "z")
    zero = MultiPoly(vs, {})

    def lifted(poly: MultiPoly, target: str) -> MultiPoly:
        return MultiPoly.variable(target, vs) - (poly + zero)

    a = lifted(p, "x")
    b = lifted(q, "y")
    c = lifted(r, "z")
    r1 = _eliminate(a, b, "m")
    r2 = _eliminate(a, c, "m")
    if r1.is_zero or r2.is_zero:
        raise EliminationCollapse("shared component while eliminating m")
    s0 = _eliminate(r1, r2, "n")
    if s0.is_zero:
        raise EliminationCollapse("shared component while eliminating n")
    if s0.is_constant():
        raise EliminationCollapse("elimination left no relation in x, y, z")
    s = content_primitive(s0)[1].restricted(("x", "y", "z"))
    check = s.substitute({"x": p, "y": q, "z": r})
    if not check.is_zero:
        raise AssertionError("implicit equation does not vanish on the parametrization")
    return s


def twist_no_solution(f: MultiPoly, matrix: Sequence[Sequence[int]]) -> MultiPoly:
    """Expand f after the linear substitution (x, y, z) <- M (x, y, z)^T.

    For nonsingular M, any nontrivial solution of the output would map to a
    nontrivial rational solution of f, so insolubility is inherited."""
    rows = [list(row) for row in matrix]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("substitution matrix must be 3x3")
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    if det == 0:
        raise SingularSubstitution("substitution matrix is singular")
    vs = ("x", "y", "z")
    images = {}
    for name, row in zip(vs, rows):
        images[name] = MultiPoly(
            vs,
            {
                (1, 0, 0): row[0],
                (0, 1, 0): row[1],
                (0, 0, 1): row[2],
            },
        )
    return f.substitute(images)


@dataclass(frozen=True)
class FormResult:
    """A homogeneous degree-D integer form P with P(a_1(n), ..., a_d(n)) equal
    to C (target "constant"), C*(-1)^n ("alternating"), or identically zero
    (target "none", C = 0)."""

    degree: int
    coefficients: dict
    constant: int
    target: str
    certificate: Certificate

    @property
    def homogeneous_vanishing(self) -> bool:
        return self.constant == 0

    def as_poly(self, names: Sequence[str]) -> MultiPoly:
        return MultiPoly(tuple(names), dict(self.coefficients))

    def to_json(self) -> dict:
        ordered = sorted(
            self.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )
        return {
            "degree": self.degree,
            "coeffs": [[list(ev), c] for ev, c in ordered],
            "C": self.constant,
            "target": self.target,
        }


def _degree_vectors(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in _degree_vectors(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def find_form(
    seqs: Sequence[RationalGF], degree: int, target: str = "constant"
) -> FormResult:
    """Search for a degree-``degree`` form constant (or alternating, or
    vanishing) on the sequence tuple, by exact nullspace computation on an
    evaluation matrix, then certify the result before returning.

    The matrix has one column per degree-D monomial plus one target column
    (omitted for target "none") and C(d+D-1, D) + 4 rows.  If the certifier
    rejects a candidate, the matrix is rebuilt once with as many rows as the
    certification bound, which makes a second rejection impossible.
    """
    d = len(seqs)
    if d < 2:
        raise ValueError("need at least two sequences")
    if degree < 2:
        raise ValueError("degree must be at least 2")
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    monomials = _degree_vectors(d, degree)
    base_rows = comb(d + degree - 1, degree) + 4
    names = tuple(f"X{i+1}" for i in range(d))
    bindings = dict(zip(names, seqs))
    cert_rows = certificate_bound([g.den for g in seqs], degree)
    row_plans = [base_rows]
    if cert_rows > base_rows:
        row_plans.append(cert_rows)

    for rows in row_plans:
        terms = [taylor_coefficients(g, rows) for g in seqs]
        matrix = []
        for n in range(rows):
            row = []
            for ev in monomials:
                val = 1
                for i, e in enumerate(ev):
                    if e:
                        val *= terms[i][n] ** e
                row.append(val)
            if target == "constant":
                row.append(1)
            elif target == "alternating":
                row.append(-1 if n % 2 else 1)
            matrix.append(row)
        basis = rational_nullspace(matrix)
        if not basis:
            raise NoForm(
                f"no degree-{degree} relation among the {d} sequences"
            )
        if target == "none":
            vec = min(basis, key=tuple)
            coeffs = {ev: c for ev, c in zip(monomials, vec) if c}
            constant = 0
            chosen = vec
        else:
            targeted = [v for v in basis if v[-1] != 0]
            if not targeted:
                vanishing = [
                    {ev: c for ev, c in zip(monomials, v[:-1]) if c} for v in basis
                ]
                raise NoTargetedForm(
                    "every relation is homogeneous vanishing; no form hits the "
                    f"{target} target",
                    vanishing=vanishing,
                )
            chosen = min(targeted, key=tuple)
            coeffs = {ev: c for ev, c in zip(monomials, chosen[:-1]) if c}
            constant = -chosen[-1]
        if not coeffs:
            raise NoForm("nullspace vector has no monomial support")
        expr = MultiPoly(names, {ev: c for ev, c in coeffs.items()})
        if target == "alternating":
            expr = expr - constant * MultiPoly.variable(SIGN_SYMBOL)
        elif target == "constant":
            expr = expr - constant
        cert = certify_zero(expr, bindings, sign_symbol=SIGN_SYMBOL)
        if cert.certified:
            return FormResult(
                degree=degree,
                coefficients=coeffs,
                constant=constant,
                target=target,
                certificate=cert,
            )
    raise NoForm("candidate relations failed certification")
