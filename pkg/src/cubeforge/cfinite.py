"""C-finite sequences as rational generating functions.

A sequence is stored as num(t)/den(t) with integer coefficients and
den(0) != 0; its terms are the Taylor coefficients at the origin.  The module
provides exact expansion, recurrence guessing from data, reconstruction of a
generating function from terms, and finite-check certification: a polynomial
identity among C-finite sequences that holds for enough initial indices holds
for all of them, because the left side is itself C-finite of bounded order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Mapping, Sequence

from .errors import GuessFailed, NonIntegralGF, PoleAtOrigin, UnboundSymbol
from .kernel import MultiPoly, rational_solve

Coeffs = tuple[int, ...]


# --- univariate helpers (ascending coefficient tuples, () is zero) ---

def _trim(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divmod_q(a, b):
    """Polynomial division over the rationals; returns (quotient, remainder)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] -= f * y
        a.pop()
    return _trim(q), _trim(a)


def _poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic-free integer gcd: primitive with positive leading coefficient."""
    x, y = _trim(a), _trim(b)
    while y:
        _, r = _divmod_q(x, y)
        x, y = y, r
    if not x:
        return ()
    scale = lcm(*(Fraction(c).denominator for c in x)) if x else 1
    ints = [int(Fraction(c) * scale) for c in x]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _poly_lcm(a: Coeffs, b: Coeffs) -> Coeffs:
    g = _poly_gcd(a, b)
    q, r = _divmod_q(a, g)
    assert not r
    prod = _mul(_trim(q), _trim(b))
    scale = lcm(*(Fraction(c).denominator for c in prod)) if prod else 1
    return _trim(tuple(int(Fraction(c) * scale) for c in prod))


def _content(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, int(c))
    return g


class RationalGF:
    """Ratio of two integer polynomials with den(0) != 0, in lowest terms.

    Coefficients are stored ascending.  Construction reduces the polynomial
    gcd, clears any common rational scale, and makes den(0) positive (it is
    1 whenever the normalization allows integer coefficients).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence, den: Sequence):
        num_q = [Fraction(x) for x in num]
        den_q = [Fraction(x) for x in den]
        den_t = _trim(den_q)
        if not den_t or den_t[0] == 0:
            raise PoleAtOrigin("denominator vanishes at the origin")
        num_t = _trim(num_q)
        if num_t:
            g = _poly_gcd(
                tuple(x * lcm(*(c.denominator for c in num_t)) for x in num_t),
                tuple(x * lcm(*(c.denominator for c in den_t)) for x in den_t),
            )
            if len(g) > 1:
                qn, rn = _divmod_q(num_t, g)
                qd, rd = _divmod_q(den_t, g)
                assert not rn and not rd
                num_t, den_t = qn, qd
        scale = 1
        for c in list(num_t) + list(den_t):
            scale = lcm(scale, Fraction(c).denominator)
        num_i = [int(Fraction(c) * scale) for c in num_t]
        den_i = [int(Fraction(c) * scale) for c in den_t]
        common = gcd(_content(num_i), _content(den_i))
        if common == 0:
            common = _content(den_i)
        sign = -1 if den_i[0] < 0 else 1
        common *= sign
        num_i = [c // common for c in num_i]
        den_i = [c // common for c in den_i]
        object.__setattr__(self, "num", tuple(num_i))
        object.__setattr__(self, "den", tuple(den_i))

    def __setattr__(self, *a):
        raise AttributeError("RationalGF is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalGF(num={list(self.num)}, den={list(self.den)})"

    @property
    def order(self) -> int:
        return len(self.den) - 1

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalGF":
        return cls(data["num"], data["den"])


def taylor_coefficients(g: RationalGF, count: int):
    """First ``count`` Taylor coefficients of g at the origin, exact.
    Values are ints whenever the expansion is integral, Fractions otherwise."""
    den = g.den
    if not den or den[0] == 0:
        raise PoleAtOrigin("denominator vanishes at the origin")
    d0 = den[0]
    out = []
    for n in range(count):
        acc = Fraction(g.num[n]) if n < len(g.num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        acc /= d0
        out.append(acc)
    return [int(x) if x.denominator == 1 else x for x in out]


@dataclass(frozen=True)
class Certificate:
    """Finite-check certificate: indices 0..bound-1 were evaluated; the
    identity is proved for all n when every value was zero."""

    bound: int
    witness: int | None = None

    @property
    def certified(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        if self.certified:
            return "certified"
        return f"refuted(witness={self.witness})"


def _fit_recurrence(seqs: Sequence[Sequence[Fraction]], order: int):
    """Shared coefficients e1..e_order with s(n+r) = e1 s(n+r-1) + ... + e_r s(n)
    across every sequence and every window, or None."""
    rows = []
    rhs = []
    for s in seqs:
        for n in range(len(s) - order):
            rows.append([s[n + order - 1 - i] for i in range(order)])
            rhs.append(s[n + order])
    if not rows:
        return None
    sol = rational_solve(rows, rhs)
    if sol is None:
        return None
    for row, b in zip(rows, rhs):
        if sum(c * x for c, x in zip(row, sol)) != b:
            return None
    return sol


def guess_recurrence(terms: Sequence, max_order: int):
    """Minimal-order constant-coefficient recurrence fitting all the terms.

    Order r is only accepted when at least 2r+2 terms are available, a plain
    over-determination margin; callers that need rigor re-certify downstream.
    Returns [e1..er] as Fractions, or None.
    """
    if not terms:
        raise ValueError("terms must be nonempty")
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    data = [Fraction(t) for t in terms]
    for r in range(1, max_order + 1):
        if len(data) < 2 * r + 2:
            break
        sol = _fit_recurrence([data], r)
        if sol is not None:
            return sol
    return None


def joint_guess_recurrence(seqs: Sequence[Sequence], max_order: int):
    """Like guess_recurrence but one recurrence must fit several sequences.
    The over-determination margin is pooled: order r needs at least r+2
    equations in total (for a single sequence this is the 2r+2 term rule)."""
    data = [[Fraction(t) for t in s] for s in seqs]
    if not data or any(not s for s in data):
        return None
    for r in range(1, max_order + 1):
        if min(len(s) for s in data) < r:
            break
        equations = sum(max(0, len(s) - r) for s in data)
        if equations < r + 2:
            break
        sol = _fit_recurrence(data, r)
        if sol is not None:
            return sol
    return None


def gf_from_recurrence(terms: Sequence[int], coeffs: Sequence[Fraction]) -> RationalGF:
    """Build num/den from a recurrence known to hold on the terms:
    den = 1 - e1 t - ... - er t^r, num = (den * series) truncated below r."""
    if any(Fraction(e).denominator != 1 for e in coeffs):
        raise NonIntegralGF("recurrence coefficients are not integers")
    if any(Fraction(t).denominator != 1 for t in terms):
        raise NonIntegralGF("terms are not integers")
    r = len(coeffs)
    den = (1,) + tuple(-int(e) for e in coeffs)
    num = []
    for j in range(min(r, len(terms))):
        acc = 0
        for i in range(0, j + 1):
            if i < len(den):
                acc += den[i] * int(terms[j - i])
        num.append(acc)
    return RationalGF(num, den)


def seq_from_terms(terms: Sequence[int], max_order: int) -> RationalGF:
    """Reconstruct a generating function whose expansion reproduces every
    given term, by guessing a recurrence of order <= max_order.

    Reconstruction needs only one surplus equation (2r+1 terms for order r)
    instead of guess_recurrence's two, because the re-expansion check below
    validates the result against every input term anyway.
    """
    if not terms:
        raise ValueError("terms must be nonempty")
    data = [Fraction(t) for t in terms]
    coeffs = None
    for r in range(1, max_order + 1):
        if len(data) < 2 * r + 1:
            break
        coeffs = _fit_recurrence([data], r)
        if coeffs is not None:
            break
    if coeffs is None:
        raise GuessFailed(
            f"no recurrence of order <= {max_order} fits {len(terms)} terms"
        )
    gf = gf_from_recurrence(list(terms), coeffs)
    check = taylor_coefficients(gf, len(terms))
    assert all(a == b for a, b in zip(check, terms)), "reconstruction mismatch"
    return gf


def certificate_bound(denominators: Sequence[Coeffs], degree: int) -> int:
    """C(r + D, D) + 2 where r is the degree of the lcm of the denominators.

    Monomials of degree <= D in sequences annihilated by an operator of order
    r span a space of dimension at most C(r+D, D); the +2 adjoins the
    constant and alternating targets.  Deliberately conservative.
    """
    l: Coeffs = (1,)
    for den in denominators:
        l = _poly_lcm(l, den)
    r = len(l) - 1
    return comb(r + degree, degree) + 2


def certify_zero(
    expr: MultiPoly,
    seqs: Mapping[str, RationalGF],
    sign_symbol: str | None = None,
) -> Certificate:
    """Prove or refute that ``expr`` vanishes for all n when each symbol is
    replaced by its sequence value (and ``sign_symbol``, if named, by (-1)^n).

    The bound B = C(r+D, D) + 2 initial checks constitute a full proof for
    C-finite inputs: the evaluated expression satisfies a recurrence of order
    at most B, so B leading zeros force it to vanish identically.
    """
    for v in expr.used_variables():
        if v == sign_symbol:
            continue
        if v not in seqs:
            raise UnboundSymbol(f"no sequence bound to symbol {v!r}")
    degree = expr.total_degree()
    bound = certificate_bound([g.den for g in seqs.values()], degree)
    expansions = {name: taylor_coefficients(g, bound) for name, g in seqs.items()}
    for n in range(bound):
        env = {name: vals[n] for name, vals in expansions.items()}
        if sign_symbol is not None:
            env[sign_symbol] = -1 if n % 2 else 1
        if expr.evaluate(env) != 0:
            return Certificate(bound=bound, witness=n)
    return Certificate(bound=bound)
