"""Exact univariate polynomial arithmetic over Q with real-root isolation.

Polynomials are dense tuples of Fractions (ascending powers, trailing zeros
trimmed).  Real roots are located by Sturm sequences on the square-free part;
rational roots are extracted exactly, irrational ones are returned as
refinable isolating intervals.  Multiplicities come from Yun's square-free
decomposition, so sign tests against a root are always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from math import isqrt


def _sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


class UPoly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def const(c) -> UPoly:
        return UPoly([Fraction(c)])

    @staticmethod
    def variable() -> UPoly:
        return UPoly([0, 1])

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: UPoly) -> UPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __mul__(self, other) -> UPoly:
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            if len(rem) != k + len(other.coeffs):
                continue
            c = rem[-1] / lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self, order: int = 1) -> UPoly:
        p = self
        for _ in range(order):
            p = UPoly([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def monic(self) -> UPoly:
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UPoly([c / lead for c in self.coeffs])

    def integer_primitive(self) -> UPoly:
        """Scale by a positive rational so coefficients are integers with gcd 1."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _int_gcd(g, abs(v))
        return UPoly([Fraction(v, g) for v in ints])

    @staticmethod
    def gcd(f: UPoly, g: UPoly) -> UPoly:
        """Monic greatest common divisor (1 for coprime, 0 only if both zero)."""
        a, b = f, g
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __repr__(self) -> str:
        if self.is_zero():
            return "UPoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(str(c))
        return "UPoly(" + " + ".join(parts) + ")"


def sturm_chain(f: UPoly) -> list[UPoly]:
    """Canonical Sturm chain f, f', -rem(...), ... (valid for any nonzero f)."""
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree() > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain: list[UPoly], x: Fraction) -> int:
    signs = [s for s in (_sign(p(x)) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_roots(f: UPoly, a: Fraction, b: Fraction, chain: list[UPoly] | None = None) -> int:
    """Number of distinct real roots of f in the half-open interval (a, b].

    Requires f(a) != 0 and f(b) != 0.
    """
    if f(a) == 0 or f(b) == 0:
        raise ValueError("Sturm count requires non-root endpoints")
    if chain is None:
        chain = sturm_chain(f)
    return _variations(chain, a) - _variations(chain, b)


def cauchy_root_bound(f: UPoly) -> Fraction:
    """A rational B with every real root of f inside (-B, B)."""
    if f.degree() < 1:
        return Fraction(1)
    lead = abs(f.coeffs[-1])
    m = max(abs(c) for c in f.coeffs[:-1])
    return Fraction(1) + m / lead + 1


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: f = c * prod g_i^i with the g_i monic, square-free, coprime."""
    if f.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = f.monic()
    if f.degree() < 1:
        return []
    d1 = f.derivative()
    a = UPoly.gcd(f, d1)
    b = f.exact_div(a)
    c = d1.exact_div(a)
    d = c - b.derivative()
    out: list[tuple[UPoly, int]] = []
    i = 1
    while b.degree() > 0:
        a = UPoly.gcd(b, d)
        if a.degree() > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def radical(f: UPoly) -> UPoly:
    """Monic square-free part of f (product of the Yun factors)."""
    out = UPoly.const(1)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out.monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            large.append(n // d)
    if small and small[-1] == large[-1]:
        large.pop()
    return small + large[::-1]


def rational_roots(f: UPoly) -> list[Fraction]:
    """All rational roots of f (without multiplicity), by the rational-root test."""
    if f.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    roots: list[Fraction] = []
    g = f.integer_primitive()
    # strip powers of u
    while g.coeffs and g.coeffs[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        g = UPoly(g.coeffs[1:])
    if g.degree() < 1:
        return sorted(roots)
    a0 = int(g.coeffs[0])
    an = int(g.coeffs[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            if _int_gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if g(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _non_root_cut(f: UPoly, a: Fraction, b: Fraction) -> Fraction:
    """A point strictly inside (a, b) that is not a root of f."""
    for den in (2, 3, 5, 7, 11, 13):
        c = a + (b - a) / den
        if f(c) != 0:
            return c
    c = a + (b - a) / 2
    step = (b - a) / 4
    while f(c) == 0:
        c += step
        step /= 2
    return c


@dataclass
class RealRoot:
    """A real root of a polynomial: exact rational, or an isolating interval.

    For irrational roots, `poly` is square-free with exactly one (simple) root
    in the open interval (lo, hi) and poly(lo)*poly(hi) < 0, so the interval
    can be refined to any width by sign bisection.
    """

    multiplicity: int = 1
    value: Fraction | None = None
    poly: UPoly | None = None
    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    def bounds(self) -> tuple[Fraction, Fraction]:
        if self.value is not None:
            return self.value, self.value
        return self.lo, self.hi

    def refine(self, width: Fraction) -> None:
        """Shrink the isolating interval below the given width."""
        if self.value is not None:
            return
        f = self.poly
        s_lo = _sign(f(self.lo))
        while self.hi - self.lo >= width:
            mid = (self.lo + self.hi) / 2
            s_mid = _sign(f(mid))
            if s_mid == 0:  # cannot happen for irrational roots; guard anyway
                self.value = mid
                self.lo = self.hi = mid
                return
            if s_mid == s_lo:
                self.lo = mid
            else:
                self.hi = mid

    def approx(self, width: Fraction = Fraction(1, 10**15)) -> float:
        if self.value is not None:
            return float(self.value)
        self.refine(width)
        return float((self.lo + self.hi) / 2)

    def __float__(self) -> float:
        return self.approx()

    def sign_of(self, g: UPoly) -> int:
        """Exact sign of g evaluated at this root."""
        if self.value is not None:
            return _sign(g(self.value))
        if g.is_zero():
            return 0
        d = UPoly.gcd(self.poly, g)
        if d.degree() >= 1 and count_roots(d, self.lo, self.hi) == 1:
            return 0
        g_rad = radical(g) if g.degree() >= 1 else g
        while True:
            if g.degree() < 1:
                return _sign(g.coeffs[0]) if g.coeffs else 0
            if g(self.lo) != 0 and g(self.hi) != 0 and \
                    count_roots(g_rad, self.lo, self.hi) == 0:
                s = _sign(g(self.lo))
                if s == _sign(g(self.hi)):
                    return s
            self.refine((self.hi - self.lo) / 2)

    def compare_fraction(self, q: Fraction) -> int:
        """-1, 0, +1 as the root is below, equal to, above the rational q."""
        if self.value is not None:
            return _sign(self.value - q)
        while self.lo < q < self.hi:
            self.refine((self.hi - self.lo) / 2)
            if self.poly(q) == 0:  # unreachable for irrational roots
                return 0
        return -1 if self.hi <= q else 1

    def as_text(self, width: Fraction = Fraction(1, 10**12)) -> str:
        if self.value is not None:
            return str(self.value)
        self.refine(width)
        return f"[{float(self.lo)!r}, {float(self.hi)!r}]"

    def __repr__(self) -> str:
        if self.value is not None:
            return f"RealRoot({self.value}, m={self.multiplicity})"
        return f"RealRoot(({float(self.lo)}, {float(self.hi)}), m={self.multiplicity})"


def _isolate(f: UPoly, rats: list[Fraction]) -> list[RealRoot]:
    """Isolating data for all real roots of square-free f; rats are its known
    rational roots (each returned exactly)."""
    chain = sturm_chain(f)
    bound = cauchy_root_bound(f)
    out: list[RealRoot] = []

    def rec(a: Fraction, b: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            inside = [r for r in rats if a < r <= b]
            if inside:
                out.append(RealRoot(value=inside[0]))
            else:
                # one simple interior root of a square-free poly: signs differ
                assert _sign(f(a)) != _sign(f(b))
                out.append(RealRoot(poly=f, lo=a, hi=b))
            return
        cut = _non_root_cut(f, a, b)
        rec(a, cut, count_roots(f, a, cut, chain))
        rec(cut, b, count_roots(f, cut, b, chain))

    rec(-bound, bound, count_roots(f, -bound, bound, chain))
    return out


def real_roots(f: UPoly) -> list[RealRoot]:
    """All real roots of f with exact multiplicities, in increasing order.

    Rational roots carry their exact value; irrational ones an isolating
    interval.  Raises ValueError on the zero polynomial.
    """
    if f.is_zero():
        raise ValueError("real_roots of the zero polynomial")
    if f.degree() < 1:
        return []
    factors = squarefree_decomposition(f)
    rad = UPoly.const(1)
    for g, _ in factors:
        rad = rad * g
    rats = rational_roots(rad)
    roots = _isolate(rad, rats)
    for root in roots:
        mult = None
        for g, m in factors:
            if root.value is not None:
                hit = g(root.value) == 0
            else:
                hit = g(root.lo) != 0 and g(root.hi) != 0 and \
                    g.degree() >= 1 and count_roots(g, root.lo, root.hi) == 1
            if hit:
                mult = m
                break
        if mult is None:
            raise AssertionError("isolated root not matched to a square-free factor")
        root.multiplicity = mult
    roots.sort(key=lambda r: r.bounds()[0])
    return roots
