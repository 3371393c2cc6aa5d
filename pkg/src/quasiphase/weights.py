"""Weight-vector detection, symmetry classes, and canonical family matching.

A weight vector (s1, s2, d) makes the system scale-invariant under
(x, y, t) -> (a^s1 x, a^s2 y, a^(1-d) t).  Each monomial x^i y^j of P imposes
(i-1)s1 + j*s2 = d-1, each monomial of Q imposes i*s1 + (j-1)s2 = d-1, so the
weight vectors form the lattice points of a rational cone that we compute by
exact Gaussian elimination.

Canonical quadratic/cubic families are pattern-matched on monomial support
(which axis re-scalings cannot change) and their parameters are recovered as
re-scaling-invariant coefficient ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _int_gcd
from math import isqrt

from . import refs
from .errors import DomainError
from .polynomial import Poly2, PolySys


@dataclass(frozen=True)
class WeightVector:
    s1: int
    s2: int
    d: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.s1, self.s2, self.d)

    def __repr__(self) -> str:
        return f"({self.s1},{self.s2},{self.d})"


@dataclass(frozen=True)
class SymmetryClass:
    """Axis/point symmetry of a quasi-homogeneous system (Lemma 7).

    kind is "reflect-y" for (x,y)->(x,-y), "reflect-x" for (x,y)->(-x,y),
    "point" for (x,y)->(-x,-y).  The classification never fixes a time
    direction, so time_reversed stays None ("unspecified").
    """

    kind: str
    time_reversed: bool | None = None

    def reflection(self) -> tuple[int, int]:
        """Coordinate signs (sx, sy) of the invariance map."""
        return {"reflect-y": (1, -1), "reflect-x": (-1, 1), "point": (-1, -1)}[self.kind]


@dataclass
class CanonicalFamily:
    """A matched canonical form from the quadratic/cubic family catalog."""

    tag: str
    parameters: dict[str, Fraction] = field(default_factory=dict)
    sign_variant: str | None = None
    diagnostics: list[str] = field(default_factory=list)


#: Minimal weight vectors of the canonical families.
MINIMAL_WEIGHTS: dict[str, WeightVector] = {
    "2a": WeightVector(3, 2, 2),
    "2b": WeightVector(2, 1, 2),
    "2c": WeightVector(2, 1, 1),
    "3a": WeightVector(2, 1, 2),
    "3b": WeightVector(3, 2, 4),
    "3c": WeightVector(4, 3, 6),
    "3d": WeightVector(2, 1, 3),
    "3e": WeightVector(3, 2, 5),
    "3f": WeightVector(3, 1, 3),
    "3g": WeightVector(3, 1, 1),
}


def _constraint_rows(sys: PolySys) -> list[tuple[int, int, int]]:
    """Rows (a, b, c) of the linear system a*s1 + b*s2 + c*t = 0, t = d-1."""
    rows = []
    for (i, j) in sys.p.terms:
        rows.append((i - 1, j, -1))
    for (i, j) in sys.q.terms:
        rows.append((i, j - 1, -1))
    return rows


def _nullspace(rows: list[tuple[int, int, int]]) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Basis of the rational nullspace of the 3-column constraint matrix."""
    mat = [[Fraction(a), Fraction(b), Fraction(c)] for a, b, c in rows]
    pivots: list[int] = []
    r = 0
    for col in range(3):
        pivot = next((k for k in range(r, len(mat)) if mat[k][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        mat[r] = [v / lead for v in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col] != 0:
                f = mat[k][col]
                mat[k] = [v - f * w for v, w in zip(mat[k], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(3) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * 3
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][fc]
        basis.append(tuple(vec))
    return basis


def _primitive_ray(v: tuple[Fraction, Fraction, Fraction]) -> tuple[int, int, int] | None:
    """Scale a 1-dim solution ray to its primitive integer point with s1 > 0."""
    den = 1
    for c in v:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = _int_gcd(g, abs(c))
    if g == 0:
        return None
    ints = [c // g for c in ints]
    if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
        ints = [-c for c in ints]
    return tuple(ints)


def _check_coprime(sys: PolySys) -> None:
    if sys.p.is_zero() or sys.q.is_zero():
        raise DomainError("both system components must be nonzero (P*Q != 0)",
                          refs.EQ_SCALING)
    cf = sys.common_factor()
    if cf is not None:
        raise DomainError(
            f"system components share the non-constant factor {cf.to_text()}",
            refs.COPRIMALITY, payload=cf)


def verify_weight(sys: PolySys, w: WeightVector) -> bool:
    """Symbolic check of the scaling law: exponent equations for every monomial."""
    if w.s1 < 1 or w.s2 < 1 or w.d < 1:
        return False
    t = w.d - 1
    for (i, j) in sys.p.terms:
        if (i - 1) * w.s1 + j * w.s2 != t:
            return False
    for (i, j) in sys.q.terms:
        if i * w.s1 + (j - 1) * w.s2 != t:
            return False
    return True


def solution_dimension(sys: PolySys) -> int:
    """Dimension of the rational solution space of the weight equations.

    2 is the two-parameter family marker (rank-1 constraints), 1 the usual
    quasi-homogeneous ray, 0 means not quasi-homogeneous.
    """
    return len(_nullspace(_constraint_rows(sys)))


def weight_vectors(sys: PolySys, count: int = 3) -> list[WeightVector]:
    """All weight vectors of the system, smallest first.

    For the generic one-dimensional solution ray the first `count` lattice
    points are returned; for the rank-deficient two-parameter case a bounded
    enumeration of small vectors; empty when no positive solution exists.
    Raises DomainError for zero or non-coprime components.
    """
    _check_coprime(sys)
    rows = _constraint_rows(sys)
    basis = _nullspace(rows)
    out: list[WeightVector] = []
    if not basis:
        return []
    if len(basis) == 1:
        ray = _primitive_ray(basis[0])
        if ray is None:
            return []
        a, b, t = ray
        if a <= 0 or b <= 0 or t < 0:
            return []
        out = [WeightVector(k * a, k * b, k * t + 1) for k in range(1, count + 1)]
    else:
        bound = max(count + 1, 4)
        for s1 in range(1, bound + 1):
            for s2 in range(1, bound + 1):
                a0, b0, _ = rows[0]
                t = a0 * s1 + b0 * s2
                if t < 0:
                    continue
                if all(a * s1 + b * s2 - t == 0 for a, b, _ in rows):
                    out.append(WeightVector(s1, s2, t + 1))
        out.sort(key=lambda w: (w.s1 + w.s2 + w.d, w.s1, w.s2))
        out = out[: count * 2]
    for w in out:
        assert verify_weight(sys, w)
    return out


def minimal_weight(vectors: list[WeightVector]) -> WeightVector:
    """The componentwise-minimal weight vector of a nonempty list."""
    if not vectors:
        raise DomainError("no weight vectors: system is not quasi-homogeneous",
                          refs.EQ_SCALING)
    for cand in vectors:
        if all(cand.s1 <= o.s1 and cand.s2 <= o.s2 and cand.d <= o.d
               for o in vectors):
            return cand
    raise DomainError("weight vectors are pairwise incomparable; no minimal element",
                      refs.EQ_SCALING)


def symmetry_class(w: WeightVector) -> SymmetryClass:
    """Symmetry type from the parities of the minimal weights (Lemma 7)."""
    e1, e2 = w.s1 % 2 == 0, w.s2 % 2 == 0
    if e1 and e2:
        raise DomainError("both weight exponents even is impossible for a "
                          "minimal weight vector", refs.REMARK_PARITY)
    if e1:
        return SymmetryClass("reflect-y")
    if e2:
        return SymmetryClass("reflect-x")
    return SymmetryClass("point")


def is_quasi_homogeneous(sys: PolySys) -> bool:
    return bool(weight_vectors(sys, count=1))


# -- canonical family matching ----------------------------------------------


def canonical_system(tag: str, parameters: dict[str, Fraction] | None = None,
                     sign_variant: str | None = None) -> PolySys:
    """Build the canonical form of a family with the given parameters."""
    p = {k: Fraction(v) for k, v in (parameters or {}).items()}
    a = p.get("a", Fraction(1))
    b = p.get("b", Fraction(1))
    sgn = -1 if sign_variant == "-" else 1
    mk = Poly2
    if tag == "2a":
        return PolySys(mk.monomial(0, 2), mk.monomial(1, 0))
    if tag == "2b":
        return PolySys(mk.monomial(1, 1, a), mk.monomial(1, 0) + mk.monomial(0, 2))
    if tag == "2c":
        return PolySys(mk.monomial(1, 0) + mk.monomial(0, 2), mk.monomial(0, 1, a))
    if tag == "3a":
        if sign_variant is None:
            return PolySys(mk.monomial(1, 1, a) + mk.monomial(0, 3, b),
                           mk.monomial(1, 0) + mk.monomial(0, 2))
        return PolySys(mk.monomial(1, 1, a) + mk.monomial(0, 3, sgn),
                       mk.monomial(1, 0))
    if tag == "3b":
        return PolySys(mk.monomial(2, 0) + mk.monomial(0, 3), mk.monomial(1, 1, a))
    if tag == "3c":
        return PolySys(mk.monomial(0, 3), mk.monomial(2, 0))
    if tag == "3d":
        return PolySys(mk.monomial(2, 0) + mk.monomial(1, 2, a),
                       mk.monomial(1, 1, b) + mk.monomial(0, 3))
    if tag == "3e":
        return PolySys(mk.monomial(1, 2, a),
                       mk.monomial(2, 0, sgn) + mk.monomial(0, 3))
    if tag == "3f":
        return PolySys(mk.monomial(1, 2, a), mk.monomial(1, 0) + mk.monomial(0, 3))
    if tag == "3g":
        return PolySys(mk.monomial(1, 0, a) + mk.monomial(0, 3), mk.monomial(0, 1))
    raise ValueError(f"unknown family tag {tag!r}")


def _sq(f: Fraction) -> Fraction | None:
    """Exact rational square root of a non-negative rational, if it exists."""
    if f < 0:
        return None
    num, den = f.numerator, f.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def match_family(sys: PolySys) -> CanonicalFamily:
    """Identify the canonical family of a quasi-homogeneous system of degree 2/3.

    Matching runs on monomial supports (invariant under axis re-scalings);
    parameters are recovered from re-scaling-invariant coefficient ratios.
    Returns tag "none" with diagnostics if no family fits (a catalog-
    completeness violation for valid inputs).
    """
    deg = sys.degree()
    if deg not in (2, 3):
        raise DomainError(f"family catalog covers degrees 2 and 3, got {deg}",
                          refs.LEMMA_QUADRATIC if deg < 3 else refs.LEMMA_CUBIC)
    ws = weight_vectors(sys, count=1)
    if not ws:
        raise DomainError("system is not quasi-homogeneous", refs.EQ_SCALING)
    wmin = ws[0]
    if wmin.s1 == wmin.s2:
        raise DomainError(
            "homogeneous system (equal weight exponents): outside the "
            "quasi-homogeneous non-homogeneous catalog", refs.LEMMA_QUADRATIC)

    sp, sq = sys.p.support(), sys.q.support()
    c = sys.p.coeff
    d = sys.q.coeff

    if deg == 2:
        if sp == {(0, 2)} and sq == {(1, 0)}:
            return CanonicalFamily("2a")
        if sp == {(1, 1)} and sq == {(1, 0), (0, 2)}:
            return CanonicalFamily("2b", {"a": c(1, 1) / d(0, 2)})
        if sp == {(1, 0), (0, 2)} and sq == {(0, 1)}:
            return CanonicalFamily("2c", {"a": d(0, 1) / c(1, 0)})
        return CanonicalFamily("none", diagnostics=[
            f"no quadratic family matches supports P:{sorted(sp)} Q:{sorted(sq)}"])

    # degree 3
    if sp <= {(1, 1), (0, 3)} and (0, 3) in sp and sq == {(1, 0), (0, 2)}:
        a = c(1, 1) / d(0, 2)
        b = c(0, 3) * d(1, 0) / d(0, 2) ** 2
        fam = CanonicalFamily("3a", {"a": a, "b": b},
                              diagnostics=["sub-form x'=y(ax+by^2), y'=x+y^2"])
        if a == b:
            fam.tag = "none"
            fam.diagnostics.append("constraint a != b violated")
        return fam
    if sp <= {(1, 1), (0, 3)} and (0, 3) in sp and sq == {(1, 0)}:
        a_sq = c(1, 1) ** 2 / abs(d(1, 0) * c(0, 3))
        params = {"a_sq": a_sq}
        root = _sq(a_sq)
        if root is not None:
            params["a"] = root
        sign = "+" if c(0, 3) * d(1, 0) > 0 else "-"
        return CanonicalFamily("3a", params, sign_variant=sign,
                               diagnostics=["sub-form x'=y(ax+-y^2), y'=x",
                                            "a canonicalized to a >= 0"])
    if sp == {(2, 0), (0, 3)} and sq == {(1, 1)}:
        return CanonicalFamily("3b", {"a": d(1, 1) / c(2, 0)})
    if sp == {(0, 3)} and sq == {(2, 0)}:
        return CanonicalFamily("3c")
    if sp <= {(2, 0), (1, 2)} and (2, 0) in sp and \
            sq <= {(1, 1), (0, 3)} and (0, 3) in sq:
        a = c(1, 2) / d(0, 3)
        b = d(1, 1) / c(2, 0)
        fam = CanonicalFamily("3d", {"a": a, "b": b})
        if (a, b) == (1, 1):
            fam.tag = "none"
            fam.diagnostics.append("excluded parameters (a,b)=(1,1)")
        elif a * b == 1:
            fam.diagnostics.append(
                "a*b=1 makes the components non-coprime (degenerate)")
        return fam
    if sp == {(1, 2)} and sq == {(2, 0), (0, 3)}:
        sign = "+" if d(2, 0) * d(0, 3) > 0 else "-"
        return CanonicalFamily("3e", {"a": c(1, 2) / d(0, 3)}, sign_variant=sign,
                               diagnostics=["sign relative to orientation-"
                                            "preserving y re-scalings"])
    if sp == {(1, 2)} and sq == {(1, 0), (0, 3)}:
        return CanonicalFamily("3f", {"a": c(1, 2) / d(0, 3)})
    if sp == {(1, 0), (0, 3)} and sq == {(0, 1)}:
        return CanonicalFamily("3g", {"a": c(1, 0) / d(0, 1)})
    return CanonicalFamily("none", diagnostics=[
        f"no cubic family matches supports P:{sorted(sp)} Q:{sorted(sq)}"])
