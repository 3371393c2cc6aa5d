"""Qualitative analysis of planar homogeneous systems and behavior at infinity.

For a homogeneous pair (Pn, Qn) the polynomial G = x*Qn - y*Pn locates the
characteristic directions at the origin (roots of G(1,u), plus the vertical
direction when x | G), and H = y*Qn + x*Pn feeds the orbit-count test along
the vertical direction.  Behavior at infinity comes from the two Poincare
charts x=1/z, y=u/z and x=v/z, y=1/z; those work for any polynomial system,
not just homogeneous ones.

All sign tests run in exact arithmetic, including at irrational directions
(isolating-interval refinement).  Floating point appears only in the
quadrature fallback of the global-center test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi, sin

from scipy.integrate import quad

from . import refs
from .errors import DomainError
from .polynomial import (
    Mono,
    Poly2,
    PolySys,
    normalize_primitive,
    partial,
    restrict_u,
    restrict_v,
)
from .univariate import RealRoot, UPoly, real_roots


@dataclass(frozen=True)
class HomogSys:
    """A homogeneous pair (Pn, Qn) of common degree n."""

    pn: Poly2
    qn: Poly2
    n: int

    def __post_init__(self):
        for comp in (self.pn, self.qn):
            if not comp.is_homogeneous():
                raise ValueError("HomogSys components must be homogeneous")
            if not comp.is_zero() and comp.degree() != self.n:
                raise ValueError("HomogSys component degree mismatch")
        if self.pn.is_zero() and self.qn.is_zero():
            raise ValueError("HomogSys must be nonzero")

    def as_polysys(self) -> PolySys:
        return PolySys(self.pn, self.qn)

    @staticmethod
    def from_polys(pn: Poly2, qn: Poly2) -> HomogSys:
        n = max(pn.degree(), qn.degree())
        return HomogSys(pn, qn, n)


@dataclass
class CharDir:
    """A characteristic direction of the origin.

    Non-vertical: slope u0 (exact rational or isolating-interval root) with
    multiplicity m in G(1,u); sign_p/sign_gm are the exact signs of Pn(1,u0)
    and G^(m)(1,u0).  Vertical: m is the multiplicity of v=0 in G(v,1);
    sign_gm is the sign of the m-th theta-derivative of G(cos t, sin t) at
    t=pi/2 and sign_p the sign of H(0,1) (the vertical analogues).
    """

    vertical: bool
    u0: Fraction | RealRoot | None
    multiplicity: int
    sign_p: int
    sign_gm: int


@dataclass(frozen=True)
class SingularityClass:
    kind: str  # saddle|node|saddle-node|focus|center|degenerate-line-at-infinity|constant-field|needs-blow-up
    stability: str | None = None  # "attracting" | "repelling" | None


@dataclass
class InvariantLine:
    """A line through the origin on which the vector field is tangent."""

    vertical: bool
    u0: Fraction | RealRoot | None = None
    poly: Poly2 | None = None  # exact linear form when the slope is rational

    def as_text(self) -> str:
        if self.vertical:
            return "x = 0"
        if isinstance(self.u0, Fraction):
            return f"y = {self.u0}*x"
        return f"y = {self.u0.as_text()}*x"


@dataclass
class InfinityReport:
    chart_u: list[tuple[Fraction | RealRoot, SingularityClass]]
    chart_v_origin: SingularityClass | None
    line_filled: bool
    compact_u: PolySys | None = None
    compact_v: PolySys | None = None


def g_poly(hs: HomogSys) -> Poly2:
    """G = x*Qn - y*Pn; its zero directions are the characteristic ones."""
    return Poly2.x() * hs.qn - Poly2.y() * hs.pn


def h_poly(hs: HomogSys) -> Poly2:
    """H = y*Qn + x*Pn; its sign controls radial growth along directions."""
    return Poly2.y() * hs.qn + Poly2.x() * hs.pn


def _sign_at(f: UPoly, u0: Fraction | RealRoot) -> int:
    if isinstance(u0, RealRoot):
        return u0.sign_of(f)
    v = f(u0)
    return (v > 0) - (v < 0)


def _multiplicity_at(f: UPoly, u0: Fraction | RealRoot) -> int:
    """Smallest m with f^(m)(u0) != 0 (0 when u0 is not a root)."""
    m = 0
    g = f
    while not g.is_zero():
        if _sign_at(g, u0) != 0:
            return m
        g = g.derivative()
        m += 1
    raise ValueError("zero polynomial has no vanishing order")


def characteristic_directions(hs: HomogSys) -> list[CharDir]:
    """All characteristic directions: real roots of G(1,u) with multiplicity,
    plus the vertical direction when x divides G.

    Raises DomainError when G vanishes identically (star field / non-coprime
    pair, outside the classification's scope).
    """
    g = g_poly(hs)
    if g.is_zero():
        raise DomainError("G = x*Qn - y*Pn vanishes identically (star field "
                          "or common factor)", refs.COPRIMALITY)
    gu = restrict_u(g)
    pu = restrict_u(hs.pn)
    out: list[CharDir] = []
    if not gu.is_zero():
        for root in real_roots(gu):
            u0 = root.value if root.is_rational else root
            m = root.multiplicity
            out.append(CharDir(
                vertical=False, u0=u0, multiplicity=m,
                sign_p=_sign_at(pu, u0),
                sign_gm=_sign_at(gu.derivative(m), u0)))
    gv = restrict_v(g)
    m_v = 0
    for c in gv.coeffs:
        if c != 0:
            break
        m_v += 1
    if not gv.is_zero() and m_v > 0:
        h = h_poly(hs)
        h_vert = h.coeff(0, hs.n + 1)
        # d^m/dtheta^m of G(cos t, sin t) at pi/2 has the sign of
        # (-1)^m * [v^m] G(v, 1): chain rule for v = cot(theta).
        c_m = gv.coeffs[m_v]
        sign_gm = (1 if c_m > 0 else -1) * (-1) ** m_v
        out.append(CharDir(
            vertical=True, u0=None, multiplicity=m_v,
            sign_p=(h_vert > 0) - (h_vert < 0),
            sign_gm=sign_gm))
    return out


def classify_direction(cd: CharDir, hs: HomogSys) -> SingularityClass:
    """Blow-up classification of E=(0,u0) on the exceptional line.

    Odd multiplicity: saddle when Pn(1,u0)*G^(m)(1,u0) < 0, node when > 0.
    Even multiplicity: saddle-node.
    """
    if cd.vertical:
        raise DomainError("blow-up classification applies to non-vertical "
                          "directions", refs.LEMMA_BLOWUP)
    if cd.multiplicity % 2 == 0:
        return SingularityClass("saddle-node")
    prod = cd.sign_p * cd.sign_gm
    if prod == 0:
        raise DomainError("degenerate sign data in blow-up classification",
                          refs.LEMMA_BLOWUP)
    return SingularityClass("saddle" if prod < 0 else "node")


def vertical_tangency(hs: HomogSys) -> str:
    """Number of orbits tangent to the y-axis at the origin.

    Returns "none" (vertical not characteristic), "one", or
    "infinitely-many".
    """
    vert = next((cd for cd in characteristic_directions(hs) if cd.vertical), None)
    if vert is None:
        return "none"
    if vert.sign_p == 0:
        raise DomainError("H(0,1) = 0 contradicts coprimality at the "
                          "vertical direction", refs.LEMMA_TANGENCY)
    if vert.multiplicity % 2 == 0:
        return "infinitely-many"
    return "infinitely-many" if vert.sign_gm * vert.sign_p > 0 else "one"


def invariant_lines(hs: HomogSys) -> list[InvariantLine]:
    """Invariant lines through the origin: real linear factors of G."""
    g = g_poly(hs)
    if g.is_zero():
        raise DomainError("G vanishes identically", refs.COPRIMALITY)
    out: list[InvariantLine] = []
    gv = restrict_v(g)
    if gv.is_zero() or gv.coeffs[0] == 0:
        out.append(InvariantLine(vertical=True, poly=Poly2.x()))
    gu = restrict_u(g)
    if not gu.is_zero():
        for root in real_roots(gu):
            if root.is_rational:
                u0 = root.value
                line = Poly2({(0, 1): Fraction(1), (1, 0): -u0})
                out.append(InvariantLine(False, u0, normalize_primitive(line)))
            else:
                out.append(InvariantLine(False, root, None))
    return out


def _odd_integrand(pu: UPoly, gu: UPoly) -> bool:
    """Exact test that Pn(1,u)/G(1,u) is an odd function of u."""
    neg_p = UPoly([c * (-1) ** k for k, c in enumerate(pu.coeffs)])
    neg_g = UPoly([c * (-1) ** k for k, c in enumerate(gu.coeffs)])
    return neg_p * gu == -(pu * neg_g)


def global_center_integral(hs: HomogSys) -> tuple[float, float]:
    """Numeric value and error bound of the center integral of Lemma 3(b),
    evaluated as the proper integral of H~/G~ over theta in (-pi/2, pi/2)."""
    g = g_poly(hs)
    h = h_poly(hs)

    def integrand(theta: float) -> float:
        c, s = cos(theta), sin(theta)
        return h.eval_float(c, s) / g.eval_float(c, s)

    val, err = quad(integrand, -pi / 2, pi / 2, epsabs=1e-12, limit=200)
    return val, err


def global_center_test(hs: HomogSys, tol: float = 1e-9) -> bool:
    """Global-center test: n odd and the integral of Pn(1,u)/G(1,u) vanishes.

    Requires odd degree (even-degree homogeneous systems never have a
    center).  Returns False immediately when G has a real characteristic
    direction (an invariant line exists).  The exactly-odd integrand is the
    decidable symbolic shortcut; otherwise adaptive quadrature decides with
    the given tolerance.
    """
    if hs.n % 2 == 0:
        raise DomainError("a homogeneous system of even degree cannot have a "
                          "center", refs.LEMMA_LINES_CENTER)
    if characteristic_directions(hs):
        return False
    gu = restrict_u(g_poly(hs))
    pu = restrict_u(hs.pn)
    if _odd_integrand(pu, gu):
        return True
    val, err = global_center_integral(hs)
    return abs(val) < tol and err < tol


def _z_valuation(p: Poly2) -> int | None:
    """Smallest z-exponent over the terms (None for the zero polynomial)."""
    if p.is_zero():
        return None
    return min(j for _, j in p.terms)


def _shift_z(p: Poly2, k: int) -> Poly2:
    return Poly2({(i, j - k): c for (i, j), c in p.terms.items()})


def _chart_u_raw(sys: PolySys) -> tuple[Poly2, Poly2]:
    """Canonical compactified pair in (u, z) before common-z cancellation."""
    n = sys.degree()
    a_terms: dict[Mono, Fraction] = {}
    b_terms: dict[Mono, Fraction] = {}
    for (i, j), c in sys.p.terms.items():
        m = (j, n - i - j)
        a_terms[m] = a_terms.get(m, Fraction(0)) + c
    for (i, j), c in sys.q.terms.items():
        m = (j, n - i - j)
        b_terms[m] = b_terms.get(m, Fraction(0)) + c
    a = Poly2(a_terms)
    b = Poly2(b_terms)
    big_u = b - Poly2.x() * a
    big_z = -(Poly2.y() * a)
    return big_u, big_z


def _chart_v_raw(sys: PolySys) -> tuple[Poly2, Poly2]:
    swapped = PolySys(sys.q.swap_vars(), sys.p.swap_vars())
    big_v, big_w = _chart_u_raw(swapped)
    return big_v, big_w


def _cancel_common_z(big_a: Poly2, big_b: Poly2) -> tuple[Poly2, Poly2, int]:
    va = _z_valuation(big_a)
    vb = _z_valuation(big_b)
    vals = [v for v in (va, vb) if v is not None]
    k = min(vals) if vals else 0
    return _shift_z(big_a, k) if not big_a.is_zero() else big_a, \
        _shift_z(big_b, k) if not big_b.is_zero() else big_b, k


def compactify_u(sys: PolySys) -> PolySys:
    """Poincare chart x=1/z, y=u/z: the pair (P*, Q*) in variables (u, z)
    after clearing the maximal common z power."""
    pstar, qstar, _ = _cancel_common_z(*_chart_u_raw(sys))
    return PolySys(pstar, qstar)


def compactify_v(sys: PolySys) -> PolySys:
    """Poincare chart x=v/z, y=1/z: the pair in variables (v, z)."""
    pstar, qstar, _ = _cancel_common_z(*_chart_v_raw(sys))
    return PolySys(pstar, qstar)


def _classify_chart_point(pstar: Poly2, qstar: Poly2,
                          u0: Fraction | RealRoot) -> SingularityClass:
    """Classify a z=0 singularity of a compactified chart system.

    The chart Jacobian at (u0, 0) is triangular because z divides Q*, so the
    eigenvalues are d/du P*(u,0) at u0 and dQ*/dz(u0,0); the semi-hyperbolic
    case reduces along the invariant equator.
    """
    p_on_eq = UPoly([pstar.coeff(i, 0) for i in range(pstar.degree() + 1)]) \
        if not pstar.is_zero() else UPoly()
    qz_on_eq_poly = partial(qstar, "y")
    qz_on_eq = UPoly([qz_on_eq_poly.coeff(i, 0)
                      for i in range(qz_on_eq_poly.degree() + 1)]) \
        if not qz_on_eq_poly.is_zero() else UPoly()
    lam2_sign = _sign_at(qz_on_eq, u0) if not qz_on_eq.is_zero() else 0
    if p_on_eq.is_zero():
        return SingularityClass("needs-blow-up")
    m = _multiplicity_at(p_on_eq, u0)
    if m == 0:
        raise ValueError("not a singularity of the chart system")
    c_sign = _sign_at(p_on_eq.derivative(m), u0)
    if lam2_sign == 0:
        return SingularityClass("needs-blow-up")
    if m % 2 == 0:
        return SingularityClass("saddle-node")
    if c_sign * lam2_sign > 0:
        stab = "attracting" if lam2_sign < 0 else "repelling"
        return SingularityClass("node", stab)
    return SingularityClass("saddle")


def infinity_report(sys: PolySys) -> InfinityReport:
    """Singularities on the equator of the Poincare sphere, both charts.

    chart_u lists the singular directions y = u0*x with their local type;
    chart_v_origin classifies the end of the y-axis when singular.
    line_filled flags the degenerate case where z divides both compactified
    components (the equator consists of singularities).
    """
    raw_u, raw_z = _chart_u_raw(sys)
    pstar, qstar, k_u = _cancel_common_z(raw_u, raw_z)
    raw_v, raw_w = _chart_v_raw(sys)
    vstar, wstar, k_v = _cancel_common_z(raw_v, raw_w)
    line_filled = k_u >= 1 or k_v >= 1

    chart_u: list[tuple[Fraction | RealRoot, SingularityClass]] = []
    chart_v: SingularityClass | None = None
    if not line_filled:
        p_on_eq = UPoly([pstar.coeff(i, 0) for i in range(max(pstar.degree(), 0) + 1)])
        if not p_on_eq.is_zero():
            for root in real_roots(p_on_eq):
                u0 = root.value if root.is_rational else root
                chart_u.append((u0, _classify_chart_point(pstar, qstar, u0)))
        v_on_eq_const = vstar.coeff(0, 0)
        if v_on_eq_const == 0:
            chart_v = _classify_chart_point(vstar, wstar, Fraction(0))
    return InfinityReport(chart_u=chart_u, chart_v_origin=chart_v,
                          line_filled=line_filled,
                          compact_u=PolySys(pstar, qstar),
                          compact_v=PolySys(vstar, wstar))
