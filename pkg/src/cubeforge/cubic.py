"""Weighted four-cube machinery: numeric solutions of
a*X^3 + a*Y^3 + b*Z^3 + b*W^3 = 0, the bilinear combination of two solutions
into a third, and the morph of a numeric solution against the symbolic
solution (m, -m, n, -n) into four homogeneous quadratics.

Combining (x, y, z, w) and (x', y', z', w') uses the multipliers
    c = a(x x'^2 + y y'^2) + b(z z'^2 + w w'^2)
    d = -(a(x^2 x' + y^2 y') + b(z^2 z' + w^2 w'))
which make the mixed cubic cross terms cancel, so (cx + dx', ...) solves the
same equation.  Morphing is the special case (x', y', z', w') = (m, -m, n, -n)
with c, d read as polynomials in m and n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DegenerateMorph, InvalidQuadruple, ZeroResult
from .kernel import MultiPoly, content_primitive


@dataclass(frozen=True)
class WeightedQuadruple:
    """Integers with a*x^3 + a*y^3 + b*z^3 + b*w^3 = 0, primitive unless all
    zero.  ``trivial`` flags solutions whose weighted cube terms cancel in
    pairs; those generate nothing new under morphing."""

    a: int
    b: int
    x: int
    y: int
    z: int
    w: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise InvalidQuadruple("weights must be nonzero")
        if self.a * (self.x**3 + self.y**3) + self.b * (self.z**3 + self.w**3) != 0:
            raise InvalidQuadruple(
                f"({self.x},{self.y},{self.z},{self.w}) fails the weighted cubic "
                f"equation for weights ({self.a},{self.b})"
            )
        g = gcd(gcd(abs(self.x), abs(self.y)), gcd(abs(self.z), abs(self.w)))
        if g > 1:
            raise InvalidQuadruple(f"coordinates share the factor {g}")

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)

    @property
    def trivial(self) -> bool:
        t1 = self.a * self.x**3
        t2 = self.a * self.y**3
        t3 = self.b * self.z**3
        t4 = self.b * self.w**3
        return (
            (t1 == -t2 and t3 == -t4)
            or (t1 == -t3 and t2 == -t4)
            or (t1 == -t4 and t2 == -t3)
        )

    def negated(self) -> "WeightedQuadruple":
        return WeightedQuadruple(self.a, self.b, -self.x, -self.y, -self.z, -self.w)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z}, {self.w})"


def _canonical_twin(t: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """The other representative of t's symmetry orbit that also satisfies
    x <= y and z >= w: negate, then reorder both pairs."""
    x, y, z, w = (-c for c in t)
    if x > y:
        x, y = y, x
    if z < w:
        z, w = w, z
    return (x, y, z, w)


def search_quadruples(a: int, b: int, bound: int) -> list[WeightedQuadruple]:
    """All primitive nontrivial solutions with coordinates in [-bound, bound],
    one representative per orbit of the symmetries x<->y, z<->w and global
    negation.  Representatives satisfy x <= y and z >= w, taking the
    lexicographically larger of the two candidates, and are sorted by largest
    absolute coordinate, then lexicographically."""
    if a == 0 or b == 0:
        raise ValueError("weights must be nonzero")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    cubes = {v: v**3 for v in range(-bound, bound + 1)}
    by_value: dict[int, list[tuple[int, int]]] = {}
    for z in range(-bound, bound + 1):
        for w in range(-bound, z + 1):
            by_value.setdefault(b * (cubes[z] + cubes[w]), []).append((z, w))
    found: list[tuple[int, int, int, int]] = []
    for x in range(-bound, bound + 1):
        for y in range(x, bound + 1):
            s = a * (cubes[x] + cubes[y])
            for z, w in by_value.get(-s, ()):
                t = (x, y, z, w)
                if t == (0, 0, 0, 0):
                    continue
                if gcd(gcd(abs(x), abs(y)), gcd(abs(z), abs(w))) != 1:
                    continue
                if t < _canonical_twin(t):
                    continue
                q = WeightedQuadruple(a, b, x, y, z, w)
                if q.trivial:
                    continue
                found.append(t)
    found.sort(key=lambda t: (max(abs(c) for c in t), t))
    return [WeightedQuadruple(a, b, *t) for t in found]


def combine(s1: WeightedQuadruple, s2: WeightedQuadruple) -> WeightedQuadruple:
    """Third solution from two with equal weights, via the cross-term
    cancelling multipliers c and d.  The result is reduced to primitive form
    without changing its orientation, so combine(s2, s1) is exactly the
    negation of combine(s1, s2)."""
    if (s1.a, s1.b) != (s2.a, s2.b):
        raise ValueError("weights differ")
    a, b = s1.a, s1.b
    x, y, z, w = s1.coords
    xp, yp, zp, wp = s2.coords
    c = a * (x * xp * xp + y * yp * yp) + b * (z * zp * zp + w * wp * wp)
    d = -(a * (x * x * xp + y * y * yp) + b * (z * z * zp + w * w * wp))
    vec = (c * x + d * xp, c * y + d * yp, c * z + d * zp, c * w + d * wp)
    if all(v == 0 for v in vec):
        raise ZeroResult("the combination is the zero quadruple")
    g = gcd(gcd(abs(vec[0]), abs(vec[1])), gcd(abs(vec[2]), abs(vec[3])))
    return WeightedQuadruple(a, b, *(v // g for v in vec))


@dataclass(frozen=True)
class ParamQuadruple:
    """Four homogeneous quadratics in (m, n) meant to satisfy
    a*P1^3 + a*P2^3 + b*P3^3 + b*P4^3 = 0.  The container itself is
    permissive; use verify_param to check the identity."""

    a: int
    b: int
    p1: MultiPoly
    p2: MultiPoly
    p3: MultiPoly
    p4: MultiPoly

    @property
    def polys(self) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
        return (self.p1, self.p2, self.p3, self.p4)

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return (self.a, self.a, self.b, self.b)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.polys) + ")"


def verify_param(pq: ParamQuadruple) -> bool:
    """Full symbolic expansion of the weighted cubic identity."""
    total = MultiPoly.constant(0, ("m", "n"))
    for weight, p in zip(pq.weights, pq.polys):
        total = total + weight * p**3
    return total.is_zero


def morph(s: WeightedQuadruple) -> ParamQuadruple:
    """Combine a nontrivial numeric solution with the symbolic solution
    (m, -m, n, -n); the result is a parametric quadruple of quadratics with
    common content 1, verified symbolically before returning."""
    if s.trivial:
        raise ValueError("cannot morph a trivial quadruple")
    a, b = s.a, s.b
    x, y, z, w = s.coords
    m = MultiPoly.variable("m", ("m", "n"))
    n = MultiPoly.variable("n", ("m", "n"))
    c = a * (x + y) * m * m + b * (z + w) * n * n
    d = -(a * (x * x - y * y) * m + b * (z * z - w * w) * n)
    polys = [c * x + d * m, c * y - d * m, c * z + d * n, c * w - d * n]
    if all(p.is_zero for p in polys):
        raise DegenerateMorph("morph collapsed to zero")
    if (polys[0] + polys[1]).is_zero and (polys[2] + polys[3]).is_zero:
        raise DegenerateMorph("morph is proportional to the trivial pattern")
    if any(p.is_zero for p in polys):
        raise DegenerateMorph("morph produced a vanishing component")
    common = 0
    for p in polys:
        common = gcd(common, content_primitive(p)[0])
    polys = [
        MultiPoly(p.variables, {ev: coeff // common for ev, coeff in p.terms.items()})
        for p in polys
    ]
    pq = ParamQuadruple(a, b, *polys)
    if not verify_param(pq):
        raise AssertionError("morph output fails the cubic identity")
    return pq
