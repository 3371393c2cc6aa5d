"""Blow-up classification, tangency counts, center test, compactification."""

import random
from fractions import Fraction

import pytest

from quasiphase.errors import DomainError
from quasiphase.homogeneous import (
    HomogSys,
    characteristic_directions,
    classify_direction,
    compactify_u,
    compactify_v,
    g_poly,
    global_center_integral,
    global_center_test,
    h_poly,
    infinity_report,
    invariant_lines,
    vertical_tangency,
)
from quasiphase.polynomial import Poly2, PolySys, divides
from quasiphase.univariate import RealRoot

F = Fraction
X = Poly2.x()
Y = Poly2.y()


def mono(i, j, c=1):
    return Poly2.monomial(i, j, c)


def tilde_3d(a, b):
    """The homogeneous quadratic normal form dx=x^2+a*xy, dy=2b*xy+2y^2."""
    return HomogSys(X * X + mono(1, 1, a), mono(1, 1, 2 * b) + 2 * (Y * Y), 2)


def sys_3d(a, b):
    """The cubic product family dx=x(x+a y^2), dy=y(b x+y^2)."""
    return PolySys(X * X + mono(1, 2, a), mono(1, 1, b) + Y**3)


def slope(cd):
    return cd.u0 if isinstance(cd.u0, Fraction) else None


def test_g_poly_examples():
    assert g_poly(HomogSys(X, -Y, 1)) == -2 * mono(1, 1)
    assert g_poly(HomogSys(Y, -X, 1)) == -(X * X) - Y * Y
    a, b = F(3), F(1)
    g2 = g_poly(tilde_3d(a, b))
    assert g2 == mono(2, 1, 2 * b - 1) + mono(1, 2, 2 - a)


def test_h_poly_examples():
    assert h_poly(HomogSys(Y, -X, 1)).is_zero()  # degenerate H, recorded as 0
    assert h_poly(HomogSys(X, Y, 1)) == X * X + Y * Y
    assert h_poly(HomogSys(X, -Y, 1)) == X * X - Y * Y


def test_characteristic_directions_tilde3d():
    hs = tilde_3d(F(3), F(1))
    dirs = characteristic_directions(hs)
    nonvert = [cd for cd in dirs if not cd.vertical]
    assert sorted(slope(cd) for cd in nonvert) == [0, 1]
    assert all(cd.multiplicity == 1 for cd in nonvert)
    # x=0 is an invariant line of this family, so the vertical direction is
    # characteristic of multiplicity 1 (G has no y^3 term)
    vert = [cd for cd in dirs if cd.vertical]
    assert len(vert) == 1 and vert[0].multiplicity == 1


def test_characteristic_directions_double_root():
    hs = tilde_3d(F(5), F(1, 2))  # b=1/2: u=0 becomes a double zero
    nonvert = [cd for cd in characteristic_directions(hs) if not cd.vertical]
    assert len(nonvert) == 1
    assert slope(nonvert[0]) == 0 and nonvert[0].multiplicity == 2


def test_characteristic_directions_empty_for_rotation():
    assert characteristic_directions(HomogSys(Y, -X, 1)) == []


def test_characteristic_directions_star_error():
    with pytest.raises(DomainError):
        characteristic_directions(HomogSys(X, Y, 1))


def test_classify_direction_proposition_cases():
    hs = tilde_3d(F(3), F(1))
    dirs = {slope(cd): cd for cd in characteristic_directions(hs)
            if not cd.vertical}
    # u0=0: P2(1,0)=1, G'(1,0)=2b-1=1 > 0: node
    assert classify_direction(dirs[F(0)], hs).kind == "node"
    # u0=1: P2(1,1)=4, G'(1,1)=-1: blow-up point is a saddle; its infinity
    # counterpart (chart-u point) is the node, see test_infinity_duality
    assert classify_direction(dirs[F(1)], hs).kind == "saddle"
    # b=1/2: double zero gives a saddle-node
    hs2 = tilde_3d(F(3), F(1, 2))
    cd2 = [cd for cd in characteristic_directions(hs2) if not cd.vertical][0]
    assert classify_direction(cd2, hs2).kind == "saddle-node"


def test_classify_direction_origin_saddle_small_b():
    hs = tilde_3d(F(3, 2), F(1, 4))
    dirs = {slope(cd): cd for cd in characteristic_directions(hs)
            if not cd.vertical}
    assert classify_direction(dirs[F(0)], hs).kind == "saddle"  # 2b-1 < 0


def test_classify_direction_rejects_vertical():
    hs = tilde_3d(F(3), F(1))
    vert = [cd for cd in characteristic_directions(hs) if cd.vertical][0]
    with pytest.raises(DomainError):
        classify_direction(vert, hs)


def test_vertical_tangency_thresholds():
    assert vertical_tangency(tilde_3d(F(3), F(1))) == "infinitely-many"
    assert vertical_tangency(tilde_3d(F(1), F(1))) == "one"
    assert vertical_tangency(HomogSys(Y, -X, 1)) == "none"
    # numeric cross-check of the chain-rule sign: d/dtheta of
    # G(cos t, sin t) at pi/2 for a=3,b=1 should be positive
    import math
    g = g_poly(tilde_3d(F(3), F(1)))
    h = 1e-7
    d = (g.eval_float(math.cos(math.pi / 2 + h), math.sin(math.pi / 2 + h))
         - g.eval_float(math.cos(math.pi / 2 - h), math.sin(math.pi / 2 - h))) / (2 * h)
    assert d > 0


def test_vertical_tangency_coprimality_guard():
    # P=xy, Q=x^2 share x; H(0,1)=0 exposes it at the vertical direction
    with pytest.raises(DomainError):
        vertical_tangency(HomogSys(mono(1, 1), X * X, 2))


def test_invariant_lines_tilde3d():
    a, b = F(3), F(1)
    hs = tilde_3d(a, b)
    lines = invariant_lines(hs)
    texts = {ln.as_text() for ln in lines}
    u1 = (1 - 2 * b) / (2 - a)
    assert texts == {"x = 0", "y = 0*x", f"y = {u1}*x"}
    g = g_poly(hs)
    for ln in lines:
        if ln.poly is not None:
            assert divides(ln.poly, g)


def test_invariant_lines_basic():
    lines = invariant_lines(HomogSys(X, -Y, 1))
    assert {ln.as_text() for ln in lines} == {"x = 0", "y = 0*x"}
    assert invariant_lines(HomogSys(Y, -X, 1)) == []


def test_global_center_cubic_odd_integrand():
    hs = HomogSys(-(Y**3), X**3, 3)
    assert global_center_test(hs) is True


def test_global_center_false_when_perturbed():
    hs = HomogSys(X**3 - Y**3, X**3, 3)
    assert global_center_test(hs) is False
    val, err = global_center_integral(hs)
    assert abs(val) > 1e-3 and err < 1e-8


def test_global_center_false_with_invariant_line():
    # G has real roots: immediately false
    hs = HomogSys(X**3, -(Y**3), 3)
    assert global_center_test(hs) is False


def test_global_center_even_degree_error():
    with pytest.raises(DomainError):
        global_center_test(tilde_3d(F(0), F(0)))


def test_compactify_u_tilde3d_matches_chart():
    a, b = F(3), F(1)
    cs = compactify_u(tilde_3d(a, b).as_polysys())
    # u' = (2-a)u^2 + (2b-1)u, z' = -z(1+au)
    assert cs.p == mono(2, 0, 2 - a) + mono(1, 0, 2 * b - 1)
    assert cs.q == mono(0, 1, -1) + mono(1, 1, -a)


def test_compactify_v_tilde3d_matches_chart():
    a, b = F(3), F(1)
    cs = compactify_v(tilde_3d(a, b).as_polysys())
    # v' = (a-2)v + (1-2b)v^2, z' = -2z(1+bv)
    assert cs.p == mono(1, 0, a - 2) + mono(2, 0, 1 - 2 * b)
    assert cs.q == mono(0, 1, -2) + mono(1, 1, -2 * b)


def test_compactify_3d_original_charts():
    a, b = F(3), F(1)
    cu = compactify_u(sys_3d(a, b))
    assert cu.p == mono(3, 0, 1 - a) + mono(1, 1, b - 1)
    assert cu.q == mono(0, 2, -1) + mono(2, 1, -a)
    cv = compactify_v(sys_3d(a, b))
    assert cv.p == mono(1, 0, a - 1) + mono(2, 1, 1 - b)
    assert cv.q == mono(0, 1, -1) + mono(1, 2, -b)


def test_compactify_constant_field():
    cs = compactify_u(PolySys(Poly2.const(1), Poly2.const(1)))
    # raw chart pair is z(1-u), -z^2; cleared of the common z
    assert cs.p == Poly2.const(1) - X
    assert cs.q == -Y


def test_compactify_star_field():
    cs = compactify_v(PolySys(X, Y))
    assert cs.p.is_zero() and cs.q == Poly2.const(-1)
    assert infinity_report(PolySys(X, Y)).line_filled


def test_compactify_roundtrip_numeric():
    # chart map u=y/x, z=1/x recovers a monomial multiple of the field
    rng = random.Random(5)
    sys = sys_3d(F(3), F(1))
    cu = compactify_u(sys)
    n = sys.degree()
    for _ in range(50):
        x0 = 0.5 + 2 * rng.random()
        y0 = -2 + 4 * rng.random()
        u0, z0 = y0 / x0, 1.0 / x0
        px = sys.p.eval_float(x0, y0)
        qx = sys.q.eval_float(x0, y0)
        # du/dt = (x*Q - y*P)/x^2 = z^(1-n) * P*(u,z); dz/dt = -P/x^2
        du = (x0 * qx - y0 * px) / x0**2
        dz = -px / x0**2
        assert abs(du - z0 ** (1 - n) * cu.p.eval_float(u0, z0)) < 1e-10 * max(1, abs(du))
        assert abs(dz - z0 ** (1 - n) * cu.q.eval_float(u0, z0)) < 1e-10 * max(1, abs(dz))


def test_infinity_report_tilde3d_a_large():
    rep = infinity_report(tilde_3d(F(3), F(1)).as_polysys())
    assert not rep.line_filled
    kinds = {float(u0): sc.kind for u0, sc in rep.chart_u}
    assert kinds == {0.0: "saddle", 1.0: "node"}
    assert rep.chart_v_origin.kind == "saddle"  # I1 when a > 2


def test_infinity_report_tilde3d_a_small():
    rep = infinity_report(tilde_3d(F(3, 2), F(1, 4)).as_polysys())
    assert rep.chart_v_origin.kind == "node"  # I1 when a < 2


def test_infinity_report_3d_line_filled():
    assert infinity_report(sys_3d(F(1), F(0))).line_filled
    rep = infinity_report(sys_3d(F(3), F(1)))
    assert not rep.line_filled
    # end of the x-axis is nilpotent for the original cubic: marked, not guessed
    assert rep.chart_u[0][1].kind == "needs-blow-up"
    assert rep.chart_v_origin.kind == "saddle"  # a > 1


def test_infinity_report_2a():
    rep = infinity_report(PolySys(Y * Y, X))
    assert not rep.line_filled
    assert len(rep.chart_u) == 1
    u0, sc = rep.chart_u[0]
    assert u0 == 0 and sc.kind == "needs-blow-up"
    assert rep.chart_v_origin is None


def test_infinity_duality_on_simple_directions():
    # E1 saddle <-> chart-u E2 node and vice versa, saddle-node <-> saddle-node
    rng = random.Random(99)
    done = 0
    while done < 40:
        n = rng.choice([2, 3])
        p = Poly2({(i, n - i): F(rng.randint(-3, 3)) for i in range(n + 1)})
        q = Poly2({(i, n - i): F(rng.randint(-3, 3)) for i in range(n + 1)})
        sys = PolySys(p, q)
        if p.is_zero() or q.is_zero() or sys.common_factor() is not None:
            continue
        hs = HomogSys(p, q, n)
        dirs = [cd for cd in characteristic_directions(hs)
                if not cd.vertical and cd.multiplicity == 1]
        if not dirs:
            continue
        rep = infinity_report(sys)
        inf_kinds = {}
        for u0, sc in rep.chart_u:
            key = u0 if isinstance(u0, Fraction) else None
            inf_kinds[float(u0) if key is None else key] = sc.kind
        for cd in dirs:
            e1 = classify_direction(cd, hs).kind
            key = cd.u0 if isinstance(cd.u0, Fraction) else float(cd.u0)
            e2 = inf_kinds[key]
            assert {e1, e2} == {"saddle", "node"}, (e1, e2)
        done += 1
