"""Reduction of quasi-homogeneous systems to homogeneous form on a quadrant.

The power change x~ = x^s2, y~ = y^s1 turns a system with minimal weight
vector (s1, s2, d) into d x~/dt = s2 x^(s2-1) P, d y~/dt = s1 y^(s1-1) Q;
rewriting in the new variables leaves a common fractional monomial, which is
split off as a time re-scale dt = dt1 / (x~^p y~^q).  The quotient must come
out with integer exponents and homogeneous of a common degree at most 2 -
that is asserted, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import refs
from .errors import DomainError
from .homogeneous import HomogSys
from .polynomial import Poly2, PolySys, gcd_bivariate
from .weights import SymmetryClass, WeightVector, symmetry_class, verify_weight

FracTerms = dict[tuple[Fraction, Fraction], Fraction]


@dataclass
class Reduction:
    """Result of the power change: homogeneous target, time re-scale monomial
    x~^p y~^q, quadrant of validity, and the inverse-map record."""

    target: HomogSys
    rescale: tuple[Fraction, Fraction]
    quadrant: str
    weight: WeightVector
    symmetry: SymmetryClass
    diagnostics: list[str] = field(default_factory=list)

    def rescale_text(self) -> str:
        p, q = self.rescale
        parts = []
        if p:
            parts.append(f"x^{p}")
        if q:
            parts.append(f"y^{q}")
        return " * ".join(parts) if parts else "1"

    def inverse_map_text(self) -> str:
        return (f"x = x~^(1/{self.weight.s2}), "
                f"y = y~^(1/{self.weight.s1})")


def _fractional_field(sys: PolySys, w: WeightVector) -> tuple[FracTerms, FracTerms]:
    """The two components of the transformed field with fractional exponents."""
    s1, s2 = w.s1, w.s2
    comp_p: FracTerms = {}
    comp_q: FracTerms = {}
    for (i, j), c in sys.p.terms.items():
        key = (Fraction(s2 - 1 + i, s2), Fraction(j, s1))
        comp_p[key] = comp_p.get(key, Fraction(0)) + s2 * c
    for (i, j), c in sys.q.terms.items():
        key = (Fraction(i, s2), Fraction(s1 - 1 + j, s1))
        comp_q[key] = comp_q.get(key, Fraction(0)) + s1 * c
    return comp_p, comp_q


def reduce(sys: PolySys, w: WeightVector) -> Reduction:
    """Transform a quasi-homogeneous non-homogeneous system into its
    associated homogeneous system on a quadrant.

    Requires verify_weight(sys, w) and s1 != s2; w should be the minimal
    (primitive) weight vector, otherwise the integer-exponent guarantee of
    the reduction fails and a DomainError is raised.
    """
    if not verify_weight(sys, w):
        raise DomainError("weight vector does not satisfy the scaling law for "
                          "this system", refs.EQ_SCALING)
    if w.s1 == w.s2:
        raise DomainError("homogeneous system (s1 = s2): reduction applies to "
                          "the non-homogeneous case", refs.LEMMA_REDUCE)
    comp_p, comp_q = _fractional_field(sys, w)
    all_keys = list(comp_p) + list(comp_q)
    p_min = min(ex for ex, _ in all_keys)
    q_min = min(ey for _, ey in all_keys)

    def to_poly(comp: FracTerms) -> Poly2:
        terms = {}
        for (ex, ey), c in comp.items():
            rx, ry = ex - p_min, ey - q_min
            if rx.denominator != 1 or ry.denominator != 1:
                raise DomainError(
                    "non-integer exponents after the time re-scale: the "
                    "weight vector is not primitive or the input violates "
                    "the reduction contract", refs.LEMMA_REDUCE)
            terms[(int(rx), int(ry))] = c
        return Poly2(terms)

    pn, qn = to_poly(comp_p), to_poly(comp_q)
    degs = {i + j for i, j in pn.terms} | {i + j for i, j in qn.terms}
    if len(degs) != 1:
        raise DomainError("reduced components are not homogeneous of a common "
                          "degree", refs.LEMMA_REDUCE)
    n = degs.pop()
    if n > 2:
        raise DomainError(f"reduced degree {n} outside the catalog range 0..2",
                          refs.THEOREM_H2)
    sym = symmetry_class(w)
    diagnostics: list[str] = []
    if n == 0:
        quadrant = "x>0&y>0"
        diagnostics.append(
            "constant target: restricted to the open first quadrant (the "
            "re-scale involves fractional powers of both variables); the "
            f"symmetry class would give "
            f"{'y>0' if sym.kind == 'reflect-y' else 'x>0'}")
    elif sym.kind == "reflect-y":
        quadrant = "y>0"
    else:
        quadrant = "x>0"
    target = HomogSys(pn, qn, n)
    if n >= 1:
        g = gcd_bivariate(pn, qn)
        if g.degree() > 0:
            diagnostics.append(
                f"degenerate parameters: target components share {g.to_text()}")
    return Reduction(target=target, rescale=(p_min, q_min), quadrant=quadrant,
                     weight=w, symmetry=sym, diagnostics=diagnostics)


def classify_target(red: Reduction) -> str:
    """Tag the reduced system H0/H1/H2 and verify the coefficient
    non-degeneracy constraints of the reduction catalog."""
    hs = red.target
    pn, qn = hs.pn, hs.qn
    if hs.n == 0:
        c0, d0 = pn.coeff(0, 0), qn.coeff(0, 0)
        if c0 * d0 == 0:
            raise DomainError("H0 requires c0*d0 != 0", refs.THEOREM_H1_H0)
        return "H0"
    if hs.n == 1:
        c10, c01 = pn.coeff(1, 0), pn.coeff(0, 1)
        d10, d01 = qn.coeff(1, 0), qn.coeff(0, 1)
        if c01 * d10 != 0:
            return "H1"
        if d10 == 0 and c01 * c10 * d01 != 0:
            return "H1"
        if c01 == 0 and c10 * d01 * d10 != 0:
            return "H1"
        raise DomainError(
            "H1 constraint failed: need c01*d10 != 0, or d10=0 with "
            "c01*c10*d01 != 0, or c01=0 with c10*d01*d10 != 0",
            refs.THEOREM_H1_H0)
    if hs.n == 2:
        c02, c20 = pn.coeff(0, 2), pn.coeff(2, 0)
        d20, d02 = qn.coeff(2, 0), qn.coeff(0, 2)
        if c02 * d20 != 0:
            return "H2"
        if c02 == 0 and d20 == 0 and c20 * d02 != 0:
            return "H2"
        raise DomainError(
            "H2 constraint failed: need c02*d20 != 0, or c02=d20=0 with "
            "c20*d02 != 0", refs.THEOREM_H2)
    raise DomainError(f"unexpected reduced degree {hs.n}", refs.THEOREM_H2)


def pushforward_check(sys: PolySys, red: Reduction, pt: tuple) -> float:
    """Numeric chain-rule residual of the reduction at a quadrant point.

    Evaluates d x~/dt both directly (s2 x^(s2-1) P) and through the target
    field times the re-scale monomial at the image point, and returns the
    max componentwise relative residual (exactly 0.0 on the rational path
    when the re-scale is trivial).
    """
    x0, y0 = pt
    if not (x0 > 0 and y0 > 0):
        raise DomainError("pushforward check needs a point with positive "
                          "coordinates", refs.REMARK_QUADRANT)
    if not verify_weight(sys, red.weight):
        raise DomainError("weight vector rejected for this system",
                          refs.EQ_SCALING)
    s1, s2 = red.weight.s1, red.weight.s2
    p_exp, q_exp = red.rescale
    exact = (p_exp == 0 and q_exp == 0
             and isinstance(x0, (int, Fraction)) and isinstance(y0, (int, Fraction)))
    if exact:
        x0, y0 = Fraction(x0), Fraction(y0)
        xt, yt = x0**s2, y0**s1
        lhs = (s2 * x0 ** (s2 - 1) * sys.p.evaluate(x0, y0),
               s1 * y0 ** (s1 - 1) * sys.q.evaluate(x0, y0))
        rhs = (red.target.pn.evaluate(xt, yt), red.target.qn.evaluate(xt, yt))
        return 0.0 if lhs == rhs else max(
            abs(float(a - b)) for a, b in zip(lhs, rhs))
    xf, yf = float(x0), float(y0)
    xt, yt = xf**s2, yf**s1
    scale = xt ** float(p_exp) * yt ** float(q_exp)
    lhs = (s2 * xf ** (s2 - 1) * sys.p.eval_float(xf, yf),
           s1 * yf ** (s1 - 1) * sys.q.eval_float(xf, yf))
    rhs = (scale * red.target.pn.eval_float(xt, yt),
           scale * red.target.qn.eval_float(xt, yt))
    return max(abs(a - b) / max(1.0, abs(a), abs(b)) for a, b in zip(lhs, rhs))
