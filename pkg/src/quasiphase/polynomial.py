"""Exact sparse bivariate polynomial arithmetic over the rationals.

A polynomial is a mapping from exponent pairs (i, j) for x^i y^j to nonzero
Fraction coefficients.  Everything downstream (weight detection, reduction,
blow-up sign tests) relies on this module being exact: floating point never
enters here.

Canonical text form: terms in graded-lexicographic descending order (total
degree first, then x-exponent), coefficients printed as "n" or "n/d", e.g.
``x^2 + 3/2*x*y - y^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

from .univariate import UPoly

Mono = tuple[int, int]


def _grlex_key(m: Mono) -> tuple[int, int]:
    return (m[0] + m[1], m[0])


class Poly2:
    """Sparse bivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        clean: dict[Mono, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                c = Fraction(c)
                if c != 0:
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent in Poly2")
                    clean[(i, j)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> Poly2:
        return Poly2()

    @staticmethod
    def const(c) -> Poly2:
        return Poly2({(0, 0): Fraction(c)})

    @staticmethod
    def monomial(i: int, j: int, c=1) -> Poly2:
        return Poly2({(i, j): Fraction(c)})

    @staticmethod
    def x() -> Poly2:
        return Poly2({(1, 0): Fraction(1)})

    @staticmethod
    def y() -> Poly2:
        return Poly2({(0, 1): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 is the zero-polynomial sentinel."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def support(self) -> frozenset[Mono]:
        return frozenset(self.terms)

    def leading_mono(self) -> Mono:
        return max(self.terms, key=_grlex_key)

    def is_homogeneous(self) -> bool:
        degs = {i + j for i, j in self.terms}
        return len(degs) <= 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Poly2) -> Poly2:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly2(out)

    def __neg__(self) -> Poly2:
        return Poly2({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly2) -> Poly2:
        return self + (-other)

    def __mul__(self, other) -> Poly2:
        if isinstance(other, (int, Fraction)):
            return Poly2({m: c * other for m, c in self.terms.items()})
        out: dict[Mono, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly2:
        out = Poly2.const(1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def eval_float(self, x: float, y: float) -> float:
        total = 0.0
        for (i, j), c in self.terms.items():
            total += float(c) * x**i * y**j
        return total

    def scale_vars(self, lx, ly) -> Poly2:
        """p(lx*x, ly*y) for rational scalars lx, ly."""
        lx, ly = Fraction(lx), Fraction(ly)
        return Poly2({(i, j): c * lx**i * ly**j for (i, j), c in self.terms.items()})

    def swap_vars(self) -> Poly2:
        return Poly2({(j, i): c for (i, j), c in self.terms.items()})

    # -- text form ---------------------------------------------------------

    def to_text(self, xvar: str = "x", yvar: str = "y") -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            i, j = m
            c = self.terms[m]
            parts = []
            if i:
                parts.append(xvar if i == 1 else f"{xvar}^{i}")
            if j:
                parts.append(yvar if j == 1 else f"{yvar}^{j}")
            mono = "*".join(parts)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append((" - " if c < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"Poly2({self.to_text()})"


# -- spec operations -------------------------------------------------------


def add(p: Poly2, q: Poly2) -> Poly2:
    """Coefficient-wise sum with zero terms purged."""
    return p + q


def mul(p: Poly2, q: Poly2) -> Poly2:
    """Distributed product with exact coefficients."""
    return p * q


def partial(p: Poly2, var: str) -> Poly2:
    """Formal partial derivative with respect to "x" or "y"."""
    out: dict[Mono, Fraction] = {}
    if var == "x":
        for (i, j), c in p.terms.items():
            if i:
                out[(i - 1, j)] = c * i
    elif var == "y":
        for (i, j), c in p.terms.items():
            if j:
                out[(i, j - 1)] = c * j
    else:
        raise ValueError(f"unknown axis selector {var!r}")
    return Poly2(out)


def homogeneous_parts(p: Poly2) -> list[tuple[int, Poly2]]:
    """Degree-graded decomposition: list of (degree, part), ascending degree.

    The parts sum back to p exactly; the zero polynomial gives [].
    """
    buckets: dict[int, dict[Mono, Fraction]] = {}
    for (i, j), c in p.terms.items():
        buckets.setdefault(i + j, {})[(i, j)] = c
    return [(d, Poly2(buckets[d])) for d in sorted(buckets)]


def restrict_u(p: Poly2) -> UPoly:
    """p evaluated on the blow-up section x=1, y=u, as a polynomial in u."""
    coeffs: dict[int, Fraction] = {}
    for (i, j), c in p.terms.items():
        coeffs[j] = coeffs.get(j, Fraction(0)) + c
    if not coeffs:
        return UPoly()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for j, c in coeffs.items():
        out[j] = c
    return UPoly(out)


def restrict_v(p: Poly2) -> UPoly:
    """p evaluated on x=v, y=1, as a polynomial in v (vertical chart)."""
    return restrict_u(p.swap_vars())


# -- bivariate gcd (subresultant PRS in y over Q[x]) ------------------------


def _to_y(p: Poly2) -> list[UPoly]:
    if p.is_zero():
        return []
    dy = max(j for _, j in p.terms)
    rows: list[dict[int, Fraction]] = [dict() for _ in range(dy + 1)]
    for (i, j), c in p.terms.items():
        rows[j][i] = c
    out = []
    for row in rows:
        if row:
            cs = [Fraction(0)] * (max(row) + 1)
            for i, c in row.items():
                cs[i] = c
            out.append(UPoly(cs))
        else:
            out.append(UPoly())
    while out and out[-1].is_zero():
        out.pop()
    return out


def _from_y(ys: list[UPoly]) -> Poly2:
    terms: dict[Mono, Fraction] = {}
    for j, up in enumerate(ys):
        for i, c in enumerate(up.coeffs):
            if c != 0:
                terms[(i, j)] = c
    return Poly2(terms)


def _ytrim(ys: list[UPoly]) -> list[UPoly]:
    while ys and ys[-1].is_zero():
        ys.pop()
    return ys


def _ycontent(ys: list[UPoly]) -> UPoly:
    c = UPoly()
    for up in ys:
        if not up.is_zero():
            a, b = c, up
            while not b.is_zero():
                a, b = b, a % b
            c = a.monic()
    return c


def _ydiv_content(ys: list[UPoly], c: UPoly) -> list[UPoly]:
    return [up.exact_div(c) if not up.is_zero() else up for up in ys]


def _prem_y(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """Pseudo-remainder of a by b in y: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        t = r[-1]
        r = [ci * lb for ci in r]
        for k in range(db + 1):
            r[shift + k] = r[shift + k] - t * b[k]
        _ytrim(r)
        e -= 1
    scale = UPoly.const(1)
    for _ in range(e):
        scale = scale * lb
    return [ci * scale for ci in r]


def _gcd_primitive_y(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """GCD of two y-primitive polynomials via the subresultant PRS."""
    if len(a) < len(b):
        a, b = b, a
    g = UPoly.const(1)
    h = UPoly.const(1)
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _prem_y(a, b)
        _ytrim(r)
        if not r:
            if len(b) - 1 == 0:
                return [UPoly.const(1)]
            cb = _ycontent(b)
            return _ydiv_content(b, cb)
        if len(b) - 1 == 0:
            return [UPoly.const(1)]
        divisor = g
        for _ in range(delta):
            divisor = divisor * h
        a, b = b, _ydiv_content(r, divisor)
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            num = UPoly.const(1)
            for _ in range(delta):
                num = num * g
            den = UPoly.const(1)
            for _ in range(delta - 1):
                den = den * h
            h = num.exact_div(den)


def normalize_primitive(p: Poly2) -> Poly2:
    """Scale to integer coefficients with gcd 1 and positive graded-lex lead."""
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in p.terms.items()}
    g = 0
    for v in ints.values():
        g = _int_gcd(g, abs(v))
    lead = max(ints, key=_grlex_key)
    s = 1 if ints[lead] > 0 else -1
    return Poly2({m: Fraction(s * v, g) for m, v in ints.items()})


def gcd_bivariate(p: Poly2, q: Poly2) -> Poly2:
    """A gcd of p and q, primitive with positive graded-lex leading coefficient.

    Computed by content/primitive-part recursion over Q[x][y] with a
    subresultant pseudo-remainder sequence.  Returns a constant (1) exactly
    when p and q are coprime.  Raises ValueError when both are zero.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero():
        return normalize_primitive(q)
    if q.is_zero():
        return normalize_primitive(p)
    yp, yq = _to_y(p), _to_y(q)
    dyp, dyq = len(yp) - 1, len(yq) - 1
    if dyp == 0 and dyq == 0:
        g = UPoly.gcd(yp[0], yq[0])
        return normalize_primitive(_from_y([g]))
    if dyp == 0:
        g = UPoly.gcd(yp[0], _ycontent(yq))
        return normalize_primitive(_from_y([g]))
    if dyq == 0:
        g = UPoly.gcd(yq[0], _ycontent(yp))
        return normalize_primitive(_from_y([g]))
    cp, cq = _ycontent(yp), _ycontent(yq)
    a = _ydiv_content(yp, cp)
    b = _ydiv_content(yq, cq)
    gpp = _gcd_primitive_y(a, b)
    ccontent = UPoly.gcd(cp, cq)
    combined = [ci * ccontent for ci in gpp]
    return normalize_primitive(_from_y(combined))


def poly_divmod(g: Poly2, f: Poly2) -> tuple[Poly2, Poly2]:
    """Graded-lex division of g by f: g = quot*f + rem, canonical remainder."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lt = f.leading_mono()
    lc = f.terms[lt]
    work = dict(g.terms)
    quot: dict[Mono, Fraction] = {}
    rem: dict[Mono, Fraction] = {}
    while work:
        m = max(work, key=_grlex_key)
        c = work.pop(m)
        if m[0] >= lt[0] and m[1] >= lt[1]:
            t = (m[0] - lt[0], m[1] - lt[1])
            k = c / lc
            quot[t] = quot.get(t, Fraction(0)) + k
            for fm, fc in f.terms.items():
                if fm == lt:
                    continue
                mm = (t[0] + fm[0], t[1] + fm[1])
                nv = work.get(mm, Fraction(0)) - k * fc
                if nv == 0:
                    work.pop(mm, None)
                else:
                    work[mm] = nv
        else:
            rem[m] = c
    return Poly2(quot), Poly2(rem)


def divides(f: Poly2, g: Poly2) -> bool:
    """True iff f divides g exactly (f nonzero)."""
    return poly_divmod(g, f)[1].is_zero()


@dataclass(frozen=True)
class PolySys:
    """A planar polynomial system dx/dt = P(x,y), dy/dt = Q(x,y)."""

    p: Poly2
    q: Poly2

    def degree(self) -> int:
        return max(self.p.degree(), self.q.degree())

    def is_homogeneous_system(self) -> bool:
        return (self.p.is_homogeneous() and self.q.is_homogeneous()
                and self.p.degree() == self.q.degree())

    def common_factor(self) -> Poly2 | None:
        """A non-constant common factor of P and Q, or None when coprime."""
        if self.p.is_zero() or self.q.is_zero():
            return None
        g = gcd_bivariate(self.p, self.q)
        return g if g.degree() > 0 else None

    def to_text(self, xvar: str = "x", yvar: str = "y") -> str:
        return (f"d{xvar} = {self.p.to_text(xvar, yvar)}; "
                f"d{yvar} = {self.q.to_text(xvar, yvar)}")
