"""Exact algebra substrate: sparse multivariate integer polynomials,
Sylvester resultants, exact division, and rational nullspaces.

Everything is pure and immutable.  Coefficients are Python ints (arbitrary
precision); matrix entries are ``fractions.Fraction``.  Monomials are ordered
graded-lexicographically by the declared variable list, which fixes canonical
printing and the leading term used for exact division.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegenerateInput, InexactDivision, ZeroPolynomial

Scalar = Union[int, Fraction]


def _monomial_key(evec: tuple[int, ...]) -> tuple:
    # graded lex: total degree first, then the exponent vector itself
    return (sum(evec), evec)


class MultiPoly:
    """Multivariate polynomial with integer coefficients.

    ``variables`` is an ordered tuple of symbol names and ``terms`` maps
    exponent tuples (same length as ``variables``) to nonzero integers.
    The zero polynomial has an empty term map.  Instances compare equal
    when they denote the same polynomial, regardless of unused variables.
    """

    __slots__ = ("variables", "terms", "_key")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], int]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable in {vs!r}")
        clean: dict[tuple[int, ...], int] = {}
        for evec, coeff in terms.items():
            if not coeff:
                continue
            ev = tuple(int(e) for e in evec)
            if len(ev) != len(vs):
                raise ValueError(f"exponent vector {ev!r} does not match variables {vs!r}")
            if any(e < 0 for e in ev):
                raise ValueError(f"negative exponent in {ev!r}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            clean[ev] = coeff
        self.variables = vs
        self.terms = clean
        self._key = None

    # --- constructors ---

    @classmethod
    def constant(cls, value: int, variables: Iterable[str] = ()) -> "MultiPoly":
        vs = tuple(variables)
        if value == 0:
            return cls(vs, {})
        return cls(vs, {(0,) * len(vs): int(value)})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        vs = tuple(variables) if variables is not None else (name,)
        evec = tuple(1 if v == name else 0 for v in vs)
        if name not in vs:
            raise ValueError(f"{name!r} is not among {vs!r}")
        return cls(vs, {evec: 1})

    # --- basic structure ---

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(ev) for ev in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        if not self.terms:
            return 0
        return max(ev[i] for ev in self.terms)

    def is_constant(self) -> bool:
        return all(sum(ev) == 0 for ev in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        for coeff in self.terms.values():
            return coeff
        return 0

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * len(self.variables)
        for ev in self.terms:
            for i, e in enumerate(ev):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def restricted(self, variables: Iterable[str] | None = None) -> "MultiPoly":
        """Re-express over ``variables`` (default: the used ones).  Every
        dropped variable must have exponent zero throughout."""
        vs = tuple(variables) if variables is not None else self.used_variables()
        idx = []
        for v in vs:
            if v not in self.variables:
                raise ValueError(f"{v!r} is not a variable of this polynomial")
            idx.append(self.variables.index(v))
        keep = set(idx)
        terms: dict[tuple[int, ...], int] = {}
        for ev, c in self.terms.items():
            if any(e and i not in keep for i, e in enumerate(ev)):
                raise ValueError("polynomial involves a dropped variable")
            terms[tuple(ev[i] for i in idx)] = c
        return MultiPoly(vs, terms)

    # --- equality / hashing across variable contexts ---

    def _canonical_key(self) -> frozenset:
        if self._key is None:
            items = []
            for ev, c in self.terms.items():
                named = frozenset(
                    (v, e) for v, e in zip(self.variables, ev) if e
                )
                items.append((named, c))
            self._key = frozenset(items)
        return self._key

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_constant() and (
                (not self.terms and other == 0)
                or (self.terms and self.constant_value() == other)
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    # --- arithmetic ---

    def _aligned(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)
        vs = tuple(merged)
        return vs, _remap(self, vs), _remap(other, vs)

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        vs, a, b = self._aligned(other)
        out = dict(a)
        for ev, c in b.items():
            s = out.get(ev, 0) + c
            if s:
                out[ev] = s
            else:
                out.pop(ev, None)
        return MultiPoly(vs, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {ev: -c for ev, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(self.variables, {})
            return MultiPoly(
                self.variables, {ev: c * other for ev, c in self.terms.items()}
            )
        vs, a, b = self._aligned(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for ev1, c1 in a.items():
            for ev2, c2 in b.items():
                ev = tuple(x + y for x, y in zip(ev1, ev2))
                s = out.get(ev, 0) + c1 * c2
                if s:
                    out[ev] = s
                else:
                    del out[ev]
        return MultiPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # --- evaluation and substitution ---

    def evaluate(self, values: Mapping[str, Scalar]) -> Scalar:
        """Evaluate at numbers; every used variable must be given."""
        idx = []
        for v in self.variables:
            idx.append(values.get(v))
        total: Scalar = 0
        for ev, c in self.terms.items():
            term: Scalar = c
            for i, e in enumerate(ev):
                if e:
                    if idx[i] is None:
                        raise KeyError(f"no value for variable {self.variables[i]!r}")
                    term *= idx[i] ** e
            total += term
        return total

    def substitute(self, values: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Substitute polynomials (or ints) for variables; unmentioned
        variables stay symbolic."""
        subs: dict[str, MultiPoly] = {}
        result_vars: list[str] = [v for v in self.variables if v not in values]
        for name, val in values.items():
            p = MultiPoly.constant(val) if isinstance(val, int) else val
            subs[name] = p
            for v in p.variables:
                if v not in result_vars:
                    result_vars.append(v)
        vs = tuple(result_vars)
        out = MultiPoly(vs, {})
        powers: dict[tuple[str, int], MultiPoly] = {}

        def power_of(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in powers:
                powers[key] = subs[name] ** e
            return powers[key]

        for ev, c in self.terms.items():
            term = MultiPoly.constant(c, vs)
            for v, e in zip(self.variables, ev):
                if not e:
                    continue
                if v in subs:
                    term = term * power_of(v, e)
                else:
                    term = term * MultiPoly(vs, {tuple(e if u == v else 0 for u in vs): 1})
            out = out + term
        return out

    # --- views ---

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficient polynomials of var^0, var^1, ... (same variable set,
        with the exponent of ``var`` zeroed)."""
        if var not in self.variables:
            return [self]
        i = self.variables.index(var)
        d = self.degree_in(var)
        buckets: list[dict[tuple[int, ...], int]] = [dict() for _ in range(d + 1)]
        for ev, c in self.terms.items():
            rest = ev[:i] + (0,) + ev[i + 1:]
            buckets[ev[i]][rest] = c
        return [MultiPoly(self.variables, b) for b in buckets]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: _monomial_key(kv[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], int]:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        ev = max(self.terms, key=_monomial_key)
        return ev, self.terms[ev]

    # --- printing ---

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for ev, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, ev):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if factors:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _remap(p: MultiPoly, vs: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    pos = [vs.index(v) for v in p.variables]
    out = {}
    for ev, c in p.terms.items():
        new = [0] * len(vs)
        for i, e in enumerate(ev):
            new[pos[i]] = e
        out[tuple(new)] = c
    return out


# --- content and primitive part ---

def content_primitive(p: MultiPoly) -> tuple[int, MultiPoly]:
    """Positive gcd of the coefficients and p divided by it.  The sign of p
    stays in the primitive part."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no content")
    g = 0
    for c in p.terms.values():
        g = gcd(g, c)
    prim = MultiPoly(p.variables, {ev: c // g for ev, c in p.terms.items()})
    return g, prim


# --- exact division ---

def try_exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly | None:
    """Quotient num/den when den divides num exactly over the integers,
    else None.  Leading-term reduction in graded lex order."""
    if den.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    vs, a, b = num._aligned(den)
    num = MultiPoly(vs, a)
    den = MultiPoly(vs, b)
    if num.is_zero:
        return num
    if den.is_constant():
        d = den.constant_value()
        out = {}
        for ev, c in num.terms.items():
            q, r = divmod(c, d)
            if r:
                return None
            out[ev] = q
        return MultiPoly(vs, out)
    lev, lc = den.leading()
    quot: dict[tuple[int, ...], int] = {}
    rem = dict(num.terms)
    while rem:
        rev = max(rem, key=_monomial_key)
        rc = rem[rev]
        qev = tuple(a - b for a, b in zip(rev, lev))
        if any(e < 0 for e in qev):
            return None
        qc, leftover = divmod(rc, lc)
        if leftover:
            return None
        quot[qev] = qc
        for ev, c in den.terms.items():
            tgt = tuple(a + b for a, b in zip(qev, ev))
            s = rem.get(tgt, 0) - qc * c
            if s:
                rem[tgt] = s
            else:
                rem.pop(tgt, None)
    return MultiPoly(vs, quot)


def exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    q = try_exact_div(num, den)
    if q is None:
        raise InexactDivision(f"({num}) is not divisible by ({den})")
    return q


def divides(den: MultiPoly, num: MultiPoly) -> bool:
    return try_exact_div(num, den) is not None


# --- resultants ---

def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of p and q with respect to ``var``, computed by
    fraction-free (Bareiss) elimination.  Vanishes exactly when p and q share
    a root in ``var``; the result does not involve ``var``."""
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp == 0 or dq == 0:
        raise DegenerateInput(f"both polynomials must have positive degree in {var!r}")
    vs, a, b = p._aligned(q)
    p = MultiPoly(vs, a)
    q = MultiPoly(vs, b)
    cp = p.coefficients_in(var)
    cq = q.coefficients_in(var)
    zero = MultiPoly(vs, {})
    n = dp + dq
    rows: list[list[MultiPoly]] = []
    desc_p = list(reversed(cp))
    desc_q = list(reversed(cq))
    for r in range(dq):
        rows.append([zero] * r + desc_p + [zero] * (n - r - dp - 1))
    for r in range(dp):
        rows.append([zero] * r + desc_q + [zero] * (n - r - dq - 1))
    det = _bareiss_determinant(rows, MultiPoly.constant(1, vs), zero)
    return det


def _bareiss_determinant(m: list[list[MultiPoly]], one: MultiPoly, zero: MultiPoly) -> MultiPoly:
    n = len(m)
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pivot * m[i][j] - mik * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


# --- exact rational linear algebra ---

def _rref(matrix: Sequence[Sequence[Scalar]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _normalize_vector(vec: Sequence[Fraction]) -> list[int]:
    from math import lcm

    denoms = [x.denominator for x in vec]
    scale = 1
    for d in denoms:
        scale = lcm(scale, d)
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-v for v in ints]
            break
    return ints


def rational_nullspace(
    matrix: Sequence[Sequence[Scalar]], ncols: int | None = None
) -> list[list[int]]:
    """Basis of the right nullspace over the rationals, each vector scaled to
    coprime integers with positive first nonzero entry.  An empty matrix has
    the full space as nullspace (``ncols`` must then be given)."""
    rows = [list(row) for row in matrix]
    if rows:
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ValueError("matrix is not rectangular")
        ncols = widths.pop()
    elif ncols is None:
        raise ValueError("empty matrix needs an explicit column count")
    if ncols == 0:
        return []
    if not rows:
        basis = []
        for i in range(ncols):
            v = [0] * ncols
            v[i] = 1
            basis.append(v)
        return basis
    rref, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        basis.append(_normalize_vector(v))
    return basis


def rational_solve(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> list[Fraction] | None:
    """One exact solution of matrix * x = rhs (free unknowns set to 0), or
    None when the system is inconsistent."""
    if not matrix:
        return []
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    rref, pivots = _rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rref[r][ncols]
    return x
