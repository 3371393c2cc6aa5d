"""Orbit integration and disk projection."""

import math
from fractions import Fraction

import pytest

from quasiphase.errors import DomainError
from quasiphase.orbits import Direction, disk_project, integrate
from quasiphase.polynomial import Poly2, PolySys

X = Poly2.x()
Y = Poly2.y()


def test_disk_project_examples():
    assert disk_project((0.0, 0.0)) == (0.0, 0.0)
    ex, ey = disk_project(Direction(u0=1.0))
    assert abs(ex - math.sqrt(2) / 2) < 1e-15 and abs(ey - math.sqrt(2) / 2) < 1e-15
    px, py = disk_project((3.0, 4.0))
    assert abs(px - 3 / math.sqrt(26)) < 1e-15
    assert abs(py - 4 / math.sqrt(26)) < 1e-15
    assert disk_project(Direction(u0=None, vertical=True)) == (0.0, 1.0)


def test_disk_project_injective_monotone():
    pts = [(0.1 * i, 0.05 * i * i) for i in range(1, 20)]
    imgs = [disk_project(p) for p in pts]
    assert len({(round(a, 14), round(b, 14)) for a, b in imgs}) == len(pts)
    assert all(a * a + b * b < 1.0 for a, b in imgs)


def test_integrate_center_orbit_closes():
    from tests_helpers import first_return_distance
    sys = PolySys(-(Y**3), X**3)
    assert first_return_distance(sys, (1.0, 0.0)) < 1e-6


def test_integrate_saddle_exits_disk():
    sys = PolySys(X, -Y)
    orb = integrate(sys, (1.0, 1.0), direction=1)
    assert orb.termination == "disk-boundary"
    xs = [x for x, _, _ in orb.samples]
    ys = [y for _, y, _ in orb.samples]
    assert xs[-1] > 20 and abs(ys[-1]) < 0.1
    # explicit solution x=e^t, y=e^-t
    for x, y, t in orb.samples[:: max(1, len(orb.samples) // 10)]:
        assert abs(x - math.exp(t)) < 1e-6 * math.exp(t)
        assert abs(y - math.exp(-t)) < 1e-6


def test_integrate_backward_into_singularity():
    sys = PolySys(X, -Y)
    orb = integrate(sys, (1.0, 0.0), direction=-1)
    assert orb.termination in {"singularity-approach", "disk-boundary"}
    # backward along y=0: x = e^-t -> origin
    assert orb.samples[-1][0] < 1e-3 or abs(orb.samples[-1][1]) > 20


def test_integrate_rejects_singular_start():
    sys = PolySys(X, -Y)
    with pytest.raises(DomainError):
        integrate(sys, (0.0, 0.0))


def test_integrate_budget_and_determinism():
    sys = PolySys(-(Y**3), X**3)
    o1 = integrate(sys, (1.0, 0.0), budget=500)
    o2 = integrate(sys, (1.0, 0.0), budget=500)
    assert o1.termination == "step-limit"
    assert o1.samples == o2.samples
