"""Figure-tag classification and portrait assembly."""

import random
from fractions import Fraction

import pytest

from quasiphase.errors import DomainError
from quasiphase.polynomial import Poly2, PolySys, divides, partial
from quasiphase.portrait import (
    classify_3d,
    classify_H0,
    classify_H1,
    classify_H2,
    global_portrait,
    portrait_report_dict,
    sign_triple,
)
from quasiphase.weights import CanonicalFamily, canonical_system

F = Fraction
X = Poly2.x()
Y = Poly2.y()


def test_sign_triple_examples():
    st = sign_triple(F(3), F(1))
    assert (st.a, st.b, st.c) == (1, 1, -1) and st.positives == 2
    st = sign_triple(F(0), F(0))
    assert (st.a, st.b, st.c) == (-1, -1, 1) and st.positives == 1


def test_sign_triple_never_all_positive():
    rng = random.Random(41)
    for _ in range(2000):
        a = F(rng.randint(-12, 12), rng.randint(1, 5))
        b = F(rng.randint(-12, 12), rng.randint(1, 5))
        if a * b == 1:
            continue
        assert sign_triple(a, b).positives < 3
    # the algebraic implication behind it: b > 1/2 and a > 2 force ab > 1
    for _ in range(500):
        a = 2 + F(rng.randint(1, 20), rng.randint(1, 5))
        b = F(1, 2) + F(rng.randint(1, 20), rng.randint(1, 5))
        assert a * b > 1


def test_classify_h2_region_tags():
    assert classify_H2(F(3), F(1)).figure_tag == "F2B"
    assert classify_H2(F(0), F(0)).figure_tag == "F2A"
    # all-negative region: b<1/2, a<2, ab>1
    assert classify_H2(F(-3), F(-1)).figure_tag == "F2C"
    assert classify_H2(F(3), F(1, 2)).figure_tag == "F3A"
    assert classify_H2(F(0), F(1, 2)).figure_tag == "F3B"
    # a=2 aliases onto the F3 tags
    assert classify_H2(F(2), F(1)).figure_tag == "F3A"
    assert classify_H2(F(2), F(0)).figure_tag == "F3B"


def test_classify_h2_excluded_parameters():
    with pytest.raises(DomainError):
        classify_H2(F(2), F(1, 2))
    with pytest.raises(DomainError):
        classify_H2(F(3), F(1, 3))  # a*b = 1


def test_classify_h2_portrait_data():
    pc = classify_H2(F(3), F(1))
    origin = pc.finite_singularities[0]
    assert origin["kind"] == "node"  # summarized by the u=0 direction
    blow = {e["direction"]: e["kind"] for e in origin["blow_up"]}
    assert blow == {"0": "node", "1": "saddle"}
    assert pc.invariant_data["tangency"] == "infinitely-many"
    curves = {sc.as_text() for sc in pc.skeleton}
    assert curves == {"x = 0", "y = 0", "y^1 = 1 * x^1"}
    inf_kinds = {e["location"]: e["kind"] for e in pc.infinite_singularities}
    assert inf_kinds == {"end of y=0*x": "saddle", "end of y=1*x": "node",
                         "end of x=0": "saddle"}


def test_classify_3d_tags():
    assert classify_3d(F(3), F(1)).figure_tag == "F4B"
    assert classify_3d(F(0), F(0)).figure_tag == "F4A"
    assert classify_3d(F(-3), F(-1)).figure_tag == "F4C"
    assert classify_3d(F(3), F(1, 2)).figure_tag == "F4D"
    assert classify_3d(F(0), F(1, 2)).figure_tag == "F4E"
    pc = classify_3d(F(1), F(0))
    assert pc.figure_tag == "F5A"
    assert pc.invariant_data["line_filled"] is True
    assert classify_3d(F(1), F(3, 4)).figure_tag == "F5B"
    assert classify_3d(F(1), F(1, 2)).figure_tag == "F5C"


def test_classify_3d_exclusions():
    with pytest.raises(DomainError):
        classify_3d(F(1), F(1))
    with pytest.raises(DomainError):
        classify_3d(F(2), F(1, 2))


def test_classify_3d_sweep_coverage():
    tags_f4 = set()
    for a in [F(-3), F(-1), F(0), F(1, 2), F(3, 2), F(2), F(3), F(4)]:
        for b in [F(-2), F(-1), F(0), F(1, 4), F(1, 2), F(3, 4), F(1), F(2)]:
            if a == 1 or a * b == 1 or (a, b) == (1, 1):
                continue
            tags_f4.add(classify_3d(a, b).figure_tag)
    assert tags_f4 == {"F4A", "F4B", "F4C", "F4D", "F4E"}
    tags_f5 = {classify_3d(F(1), b).figure_tag
               for b in [F(-2), F(0), F(1, 4), F(1, 2), F(3, 4), F(2)] if b != 1}
    assert tags_f5 == {"F5A", "F5B", "F5C"}


def test_classify_h1_cases():
    # reduced 2c with a=-1: dx=x+y, dy=-2y: saddle
    assert classify_H1(F(1), F(1), F(-2), F(0)) == "F6A"
    # reduced 3f with a=3: dx=3x, dy=3x+3y: repeated eigenvalue, node
    assert classify_H1(F(0), F(3), F(3), F(3)) == "F6B"
    # det>0, trace=0: center
    assert classify_H1(F(1), F(0), F(0), F(-1)) == "F6D"
    # focus: trace != 0, disc < 0
    assert classify_H1(F(1), F(1), F(1), F(-2)) == "F6C"
    with pytest.raises(DomainError):
        classify_H1(F(1), F(1), F(1), F(1))  # det = 0


def test_classify_h0():
    assert classify_H0(F(2), F(3), CanonicalFamily("2a")) == "F7A"
    assert classify_H0(F(3), F(4), CanonicalFamily("3c")) == "F7B"
    with pytest.raises(DomainError):
        classify_H0(F(0), F(3), CanonicalFamily("2a"))
    with pytest.raises(DomainError):
        classify_H0(F(2), F(3), CanonicalFamily("2b"))


def test_global_portrait_2b():
    pc = global_portrait(PolySys(Poly2.monomial(1, 1), X + Y * Y))
    assert pc.figure_tag in {"F6A", "F6B"}
    assert pc.figure_tag == "F6B"  # eigenvalues 1 and 2
    assert pc.symmetry.kind == "reflect-y"
    assert pc.invariant_data["family"] == "2b"


def test_global_portrait_3d():
    sys = canonical_system("3d", {"a": F(3), "b": F(1)})
    pc = global_portrait(sys)
    assert pc.figure_tag == "F4B"
    curves = {sc.as_text() for sc in pc.skeleton}
    assert curves == {"x = 0", "y = 0", "y^2 = 1 * x^1"}


def test_global_portrait_3c():
    pc = global_portrait(PolySys(Y**3, X * X))
    assert pc.figure_tag == "F7B"
    assert pc.finite_singularities[0]["kind"] == "constant-field"
    # skeleton carries the pullback of the constant-flow direction
    assert any(sc.kind == "power-curve" for sc in pc.skeleton)


def test_global_portrait_2a():
    pc = global_portrait(PolySys(Y * Y, X))
    assert pc.figure_tag == "F7A"
    assert pc.symmetry.kind == "reflect-x"
    curves = {sc.as_text() for sc in pc.skeleton}
    assert curves == {"y^3 = 3/2 * x^2"}


def test_global_portrait_center_case():
    # x' = -y^3, y' = x (cubic family 3a second sub-form with a=0)
    pc = global_portrait(PolySys(-(Y**3), X))
    assert pc.figure_tag == "F6D"
    assert pc.skeleton == []
    assert pc.finite_singularities[0]["kind"] == "center"


def test_global_portrait_skeleton_invariance():
    # Lie derivative of each rational skeleton polynomial is divisible by it
    rng = random.Random(61)
    for tag, params in [("3d", {"a": F(3), "b": F(1)}),
                        ("3d", {"a": F(-2), "b": F(5)}),
                        ("2b", {"a": F(3)}),
                        ("2a", {}), ("3c", {}),
                        ("3g", {"a": F(2)})]:
        sys = canonical_system(tag, params)
        pc = global_portrait(sys)
        for sc in pc.skeleton:
            if sc.defining is None:
                continue
            lie = sys.p * partial(sc.defining, "x") + sys.q * partial(sc.defining, "y")
            if not lie.is_zero():
                assert divides(sc.defining, lie), (tag, sc.as_text())


def test_global_portrait_rescaling_stability():
    from tests_helpers import rescale_system
    sys = canonical_system("3d", {"a": F(3), "b": F(1)})
    scaled = rescale_system(sys, F(2), F(3), F(5))
    assert global_portrait(scaled).figure_tag == global_portrait(sys).figure_tag


def test_global_portrait_errors():
    with pytest.raises(DomainError):
        global_portrait(PolySys(Poly2.monomial(0, 4), X))  # degree 4
    with pytest.raises(DomainError):
        global_portrait(PolySys(X + Y * Y + X * X, Y))  # not quasi-homogeneous
    with pytest.raises(DomainError):
        global_portrait(PolySys(X * X + Y * Y, Poly2.monomial(1, 1)))  # homogeneous


def test_portrait_report_schema():
    pc = global_portrait(canonical_system("3d", {"a": F(3), "b": F(1)}))
    rep = portrait_report_dict(pc)
    assert set(rep) == {"figure_tag", "symmetry", "finite_singularities",
                        "infinite_singularities", "skeleton", "provenance"}
    assert all(set(e) == {"curve", "branches"} for e in rep["skeleton"])
    assert all({"stage", "lemma"} <= set(e) for e in rep["provenance"])
