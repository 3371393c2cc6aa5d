"""Global topological phase-portrait classification.

The figure tags form a closed alphabet.  Since the catalog's figures are
pictures, each tag is pinned here by invariant data instead: the sign triple
A=2b-1, B=2(a-2), C=2(1-ab) for the homogeneous quadratic form (F2A: one
positive, F2B: two positive, F2C: none), the saddle-node cases along b=1/2
and a=2 (F3A/F3B), their pullbacks to the cubic product family (F4A..F4E for
two infinite singularities, F5A..F5C for the singularity-filled equator),
the linear-origin types (F6A saddle, F6B node, F6C focus, F6D center), and
the two constant-target portraits (F7A, F7B).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import reduction, refs
from .errors import DomainError
from .homogeneous import (
    HomogSys,
    characteristic_directions,
    classify_direction,
    g_poly,
    infinity_report,
    invariant_lines,
    vertical_tangency,
)
from .polynomial import Poly2, PolySys, divides, restrict_u
from .univariate import RealRoot, real_roots
from .weights import (
    CanonicalFamily,
    SymmetryClass,
    WeightVector,
    match_family,
    minimal_weight,
    symmetry_class,
    weight_vectors,
)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SignTriple:
    """Signs of A=2b-1, B=2(a-2), C=2(1-ab); never all three positive."""

    a: int
    b: int
    c: int

    @property
    def positives(self) -> int:
        return sum(1 for s in (self.a, self.b, self.c) if s > 0)


@dataclass
class SkeletonCurve:
    """One separatrix-skeleton curve: an axis or y^s1 = u0 * x^s2."""

    kind: str  # "axis-x" (x=0) | "axis-y" (y=0) | "power-curve"
    s1: int = 1
    s2: int = 1
    u0: Fraction | RealRoot | None = None
    defining: Poly2 | None = None  # exact polynomial when u0 is rational
    branches: int = 1

    def as_text(self) -> str:
        if self.kind == "axis-x":
            return "x = 0"
        if self.kind == "axis-y":
            return "y = 0"
        u_txt = str(self.u0) if isinstance(self.u0, Fraction) else self.u0.as_text()
        return f"y^{self.s1} = {u_txt} * x^{self.s2}"


@dataclass
class PortraitClass:
    """A global portrait: figure tag plus the data that pins it."""

    figure_tag: str
    symmetry: SymmetryClass | None
    skeleton: list[SkeletonCurve] = field(default_factory=list)
    finite_singularities: list[dict] = field(default_factory=list)
    infinite_singularities: list[dict] = field(default_factory=list)
    provenance: list[dict] = field(default_factory=list)
    invariant_data: dict = field(default_factory=dict)


F4_FROM_H2 = {"F2A": "F4A", "F2B": "F4B", "F2C": "F4C",
              "F3A": "F4D", "F3B": "F4E"}
F5_FROM_H2 = {"F2A": "F5A", "F2B": "F5B", "F3B": "F5C"}

QUADRATIC_TAGS = {"F6A", "F6B", "F7A"}
CUBIC_TAGS = {"F4A", "F4B", "F4C", "F4D", "F4E",
              "F5A", "F5B", "F5C",
              "F6A", "F6B", "F6C", "F6D", "F7B"}


def sign_triple(a12: Fraction, b12: Fraction) -> SignTriple:
    return SignTriple(_sgn(2 * b12 - 1), _sgn(2 * (a12 - 2)),
                      _sgn(2 * (1 - a12 * b12)))


def _check_h2_params(a12: Fraction, b12: Fraction) -> None:
    if a12 * b12 == 1:
        raise DomainError(
            f"parameters (a,b)=({a12},{b12}) with a*b=1 make the components "
            "share a linear factor", refs.COPRIMALITY)


def _h2_tag(a12: Fraction, b12: Fraction) -> str:
    """Figure tag of the homogeneous quadratic normal form."""
    _check_h2_params(a12, b12)
    if b12 == Fraction(1, 2):
        return "F3A" if a12 > 2 else "F3B"
    if a12 == 2:
        # y-direction blow-up maps this onto the b=1/2 case with the roles of
        # the two axis ends swapped: b>1/2 plays a>2
        return "F3A" if b12 > Fraction(1, 2) else "F3B"
    st = sign_triple(a12, b12)
    if st.positives == 3:
        raise AssertionError("A,B,C cannot all be positive")
    if st.positives == 1:
        return "F2A"
    if st.positives == 2:
        return "F2B"
    if st.positives == 0:
        return "F2C"
    raise DomainError(f"degenerate sign triple for (a,b)=({a12},{b12})",
                      refs.PROP_H2_PORTRAITS)


def h2_normal_form(a12: Fraction, b12: Fraction) -> HomogSys:
    """dx = x^2 + a*xy, dy = 2b*xy + 2y^2."""
    return HomogSys(Poly2({(2, 0): Fraction(1), (1, 1): Fraction(a12)}),
                    Poly2({(1, 1): 2 * Fraction(b12), (0, 2): Fraction(2)}), 2)


def _blowup_entries(hs: HomogSys) -> list[dict]:
    out = []
    for cd in characteristic_directions(hs):
        if cd.vertical:
            continue
        sc = classify_direction(cd, hs)
        u_txt = str(cd.u0) if isinstance(cd.u0, Fraction) else cd.u0.as_text()
        out.append({"direction": u_txt,
                    "kind": sc.kind,
                    "multiplicity": cd.multiplicity,
                    "provenance": refs.LEMMA_BLOWUP})
    return out


def _origin_entry(hs: HomogSys) -> dict:
    """Single finite-singularity entry: the origin, summarized by the u=0
    blow-up direction (the catalog's "(0,0) is a ..." phrasing), with the
    full per-direction data attached."""
    dirs = _blowup_entries(hs)
    kind = next((d["kind"] for d in dirs if d["direction"] == "0"),
                dirs[0]["kind"] if dirs else "needs-blow-up")
    return {"location": "origin", "kind": kind, "blow_up": dirs,
            "tangency": vertical_tangency(hs),
            "provenance": refs.LEMMA_BLOWUP}


def _infinity_entries(rep) -> list[dict]:
    out = []
    if rep.line_filled:
        out.append({"location": "equator",
                    "kind": "degenerate-line-at-infinity",
                    "provenance": refs.COMPACTIFICATION})
        return out
    for u0, sc in rep.chart_u:
        u_txt = str(u0) if isinstance(u0, Fraction) else u0.as_text()
        entry = {"location": f"end of y={u_txt}*x",
                 "kind": sc.kind, "provenance": refs.COMPACTIFICATION,
                 "direction": {"vertical": False, "u0": float(u0)}}
        if sc.stability:
            entry["stability"] = sc.stability
        out.append(entry)
    if rep.chart_v_origin is not None:
        entry = {"location": "end of x=0",
                 "kind": rep.chart_v_origin.kind,
                 "provenance": refs.COMPACTIFICATION,
                 "direction": {"vertical": True, "u0": None}}
        if rep.chart_v_origin.stability:
            entry["stability"] = rep.chart_v_origin.stability
        out.append(entry)
    return out


def classify_H2(a12: Fraction, b12: Fraction) -> PortraitClass:
    """Portrait of the homogeneous quadratic normal form (five classes).

    Case a != 2, b != 1/2: the sign triple selects F2A/F2B/F2C; b=1/2 gives
    the saddle-node portraits F3A (a>2) / F3B (a<2); a=2 aliases onto the F3
    tags.  The pair with a*b=1 is rejected (common linear factor).
    """
    a12, b12 = Fraction(a12), Fraction(b12)
    tag = _h2_tag(a12, b12)
    hs = h2_normal_form(a12, b12)
    rep = infinity_report(hs.as_polysys())
    skeleton = []
    for ln in invariant_lines(hs):
        if ln.vertical:
            skeleton.append(SkeletonCurve("axis-x", defining=Poly2.x()))
        elif ln.u0 == 0:
            skeleton.append(SkeletonCurve("axis-y", defining=Poly2.y()))
        else:
            skeleton.append(SkeletonCurve("power-curve", 1, 1, ln.u0, ln.poly,
                                          branches=1))
    pc = PortraitClass(
        figure_tag=tag,
        symmetry=None,
        skeleton=skeleton,
        finite_singularities=[_origin_entry(hs)],
        infinite_singularities=_infinity_entries(rep),
        provenance=[{"stage": "homogeneous-quadratic-classification",
                     "lemma": refs.PROP_H2_PORTRAITS}],
        invariant_data={
            "sign_triple": (sign_triple(a12, b12).a, sign_triple(a12, b12).b,
                            sign_triple(a12, b12).c),
            "tangency": vertical_tangency(hs),
            "line_filled": rep.line_filled,
        })
    return pc


def classify_3d(a12: Fraction, b12: Fraction) -> PortraitClass:
    """Portrait of the cubic product family dx=x(x+a y^2), dy=y(b x+y^2).

    a=1 fills the equator with singularities (F5A..F5C keyed by the
    underlying homogeneous class); otherwise F4A..F4E.  (a,b)=(1,1) and more
    generally a*b=1 are rejected as non-coprime.
    """
    a12, b12 = Fraction(a12), Fraction(b12)
    if (a12, b12) == (1, 1):
        raise DomainError("(a,b)=(1,1) is excluded from the cubic product "
                          "family", refs.LEMMA_CUBIC)
    _check_h2_params(a12, b12)
    under = _h2_tag(a12, b12)
    if a12 == 1:
        tag = F5_FROM_H2[under]
    else:
        tag = F4_FROM_H2[under]
    sys = PolySys(Poly2({(2, 0): Fraction(1), (1, 2): a12}),
                  Poly2({(1, 1): b12, (0, 3): Fraction(1)}))
    w = WeightVector(2, 1, 3)
    sym = symmetry_class(w)
    red = reduction.reduce(sys, w)
    pc = _assemble(sys, w, sym, red, tag,
                   stage="cubic-product-family-classification",
                   lemma=refs.THEOREM_3D)
    pc.invariant_data["underlying_homogeneous_tag"] = under
    pc.provenance.append({"stage": "homogeneous-quadratic-classification",
                          "lemma": refs.PROP_H2_PORTRAITS})
    return pc


def classify_H1(c01: Fraction, c10: Fraction, d01: Fraction,
                d10: Fraction) -> str:
    """Linear-origin figure tag: F6A saddle, F6B node, F6C focus-equivalent,
    F6D center, by the trace/determinant of the coefficient matrix."""
    c01, c10, d01, d10 = (Fraction(v) for v in (c01, c10, d01, d10))
    det = c10 * d01 - c01 * d10
    tr = c10 + d01
    if det == 0:
        raise DomainError(
            "zero determinant: degenerate linear system (components share a "
            "linear factor)", refs.COPRIMALITY)
    if det < 0:
        return "F6A"
    if tr == 0:
        return "F6D"
    if tr * tr - 4 * det < 0:
        return "F6C"
    return "F6B"


H1_ORIGIN_KIND = {"F6A": "saddle", "F6B": "node", "F6C": "focus",
                  "F6D": "center"}


def classify_H0(c0: Fraction, d0: Fraction, family: CanonicalFamily) -> str:
    """Constant-target figure tag: F7A for the quadratic family, F7B for the
    cubic one (topologically equivalent portraits)."""
    if Fraction(c0) * Fraction(d0) == 0:
        raise DomainError("constant target requires c0*d0 != 0",
                          refs.THEOREM_H1_H0)
    if family.tag == "2a":
        return "F7A"
    if family.tag == "3c":
        return "F7B"
    raise DomainError(f"family {family.tag} does not reduce to a constant "
                      "target", refs.THEOREM_H1_H0)


def _pullback_skeleton(sys: PolySys, w: WeightVector,
                       target: HomogSys) -> list[SkeletonCurve]:
    """Invariant axes plus the pullbacks y^s1 = u0 * x^s2 of the target's
    invariant lines through the origin."""
    out: list[SkeletonCurve] = []
    if divides(Poly2.x(), sys.p):
        out.append(SkeletonCurve("axis-x", defining=Poly2.x()))
    if divides(Poly2.y(), sys.q):
        out.append(SkeletonCurve("axis-y", defining=Poly2.y()))
    g = g_poly(target)
    if g.is_zero():
        return out
    gu = restrict_u(g)
    if gu.is_zero() or gu.degree() < 1:
        return out
    for root in real_roots(gu):
        u0 = root.value if root.is_rational else root
        if u0 == 0:
            continue  # the y=0 axis, already covered
        defining = None
        if isinstance(u0, Fraction):
            defining = Poly2({(0, w.s1): Fraction(1), (w.s2, 0): -u0})
        out.append(SkeletonCurve("power-curve", w.s1, w.s2, u0, defining,
                                 branches=2 if w.s1 % 2 == 0 else 1))
    return out


def _assemble(sys: PolySys, w: WeightVector, sym: SymmetryClass,
              red: reduction.Reduction, tag: str, stage: str,
              lemma: str) -> PortraitClass:
    rep = infinity_report(sys)
    target = red.target
    finite: list[dict] = []
    invariant_data: dict = {"line_filled": rep.line_filled}
    if target.n == 2:
        finite = [_origin_entry(target)]
        invariant_data["tangency"] = finite[0]["tangency"]
    elif target.n == 1:
        h1tag = classify_H1(target.pn.coeff(0, 1), target.pn.coeff(1, 0),
                            target.qn.coeff(0, 1), target.qn.coeff(1, 0))
        kind = H1_ORIGIN_KIND[h1tag]
        entry = {"location": "origin", "kind": kind,
                 "provenance": refs.THEOREM_H1_H0}
        if kind == "focus":
            entry["note"] = ("pullback consists of closed orbits; "
                             "center-equivalent, orientation unspecified")
        finite = [entry]
    else:
        finite = [{"location": "origin",
                   "kind": "constant-field",
                   "note": "reduced target has no finite singularity; the "
                           "origin structure is carried by the skeleton",
                   "provenance": refs.THEOREM_H1_H0}]
    skeleton = _pullback_skeleton(sys, w, target)
    return PortraitClass(
        figure_tag=tag,
        symmetry=sym,
        skeleton=skeleton,
        finite_singularities=finite,
        infinite_singularities=_infinity_entries(rep),
        provenance=[
            {"stage": "weight-detection", "lemma": refs.EQ_SCALING},
            {"stage": "symmetry-class", "lemma": refs.LEMMA_SYMMETRY},
            {"stage": "reduction", "lemma": refs.LEMMA_REDUCE},
            {"stage": stage, "lemma": lemma},
        ],
        invariant_data=invariant_data)


def global_portrait(sys: PolySys) -> PortraitClass:
    """Full pipeline: family match, weight, reduction, target classification,
    pullback of the separatrix skeleton, theorem-closure check."""
    deg = sys.degree()
    if deg not in (2, 3):
        raise DomainError(f"portrait classification covers degrees 2 and 3, "
                          f"got {deg}", refs.THEOREM_DEG2)
    vs = weight_vectors(sys)
    if not vs:
        raise DomainError("system is not quasi-homogeneous", refs.EQ_SCALING)
    w = minimal_weight(vs)
    if w.s1 == w.s2:
        raise DomainError("homogeneous system: outside the quasi-homogeneous "
                          "non-homogeneous scope", refs.LEMMA_QUADRATIC)
    fam = match_family(sys)
    if fam.tag == "none":
        raise DomainError("no canonical family matches: " +
                          "; ".join(fam.diagnostics),
                          refs.LEMMA_QUADRATIC if deg == 2 else refs.LEMMA_CUBIC)
    sym = symmetry_class(w)
    red = reduction.reduce(sys, w)
    kind = reduction.classify_target(red)
    if kind == "H2":
        a12, b12 = fam.parameters["a"], fam.parameters["b"]
        if (a12, b12) == (1, 1) or a12 * b12 == 1:
            raise DomainError("degenerate cubic product parameters",
                              refs.LEMMA_CUBIC)
        under = _h2_tag(a12, b12)
        tag = F5_FROM_H2[under] if a12 == 1 else F4_FROM_H2[under]
        stage, lemma = "cubic-product-family-classification", refs.THEOREM_3D
    elif kind == "H1":
        tag = classify_H1(red.target.pn.coeff(0, 1), red.target.pn.coeff(1, 0),
                          red.target.qn.coeff(0, 1), red.target.qn.coeff(1, 0))
        stage, lemma = "linear-target-classification", refs.THEOREM_H1_H0
    else:
        tag = classify_H0(red.target.pn.coeff(0, 0), red.target.qn.coeff(0, 0),
                          fam)
        stage, lemma = "constant-target-classification", refs.THEOREM_H1_H0
    pc = _assemble(sys, w, sym, red, tag, stage, lemma)
    pc.invariant_data["family"] = fam.tag
    if kind == "H2":
        pc.invariant_data["underlying_homogeneous_tag"] = under
    admissible = QUADRATIC_TAGS if deg == 2 else CUBIC_TAGS
    if tag not in admissible:
        raise DomainError(f"figure tag {tag} outside the admissible set for "
                          f"degree {deg}",
                          refs.THEOREM_DEG2 if deg == 2 else refs.THEOREM_DEG3)
    return pc


def portrait_report_dict(pc: PortraitClass) -> dict:
    """The portrait report in its serialization schema."""
    return {
        "figure_tag": pc.figure_tag,
        "symmetry": pc.symmetry.kind if pc.symmetry else None,
        "finite_singularities": pc.finite_singularities,
        "infinite_singularities": pc.infinite_singularities,
        "skeleton": [{"curve": sc.as_text(), "branches": sc.branches}
                     for sc in pc.skeleton],
        "provenance": pc.provenance,
    }
