"""Adaptive orbit integration and Poincare-disk projection.

A hand-rolled Dormand-Prince 5(4) embedded pair keeps the stopping rules
(singularity approach, disk boundary, step budget) and the output samples
fully deterministic: identical inputs give bit-identical trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import hypot, sqrt
from typing import Callable, NamedTuple

from .errors import DomainError
from .polynomial import PolySys

RTOL = 1e-9
ATOL = 1e-12
DISK_STOP_RADIUS = 0.999
SINGULARITY_STOP = 1e-6
DEFAULT_BUDGET = 100_000

# Dormand-Prince coefficients
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200,
       187 / 2100, 1 / 40)


class Direction(NamedTuple):
    """A direction at infinity: slope u0, or the vertical one."""

    u0: float | None
    vertical: bool = False


@dataclass
class Orbit:
    samples: list[tuple[float, float, float]]  # (x, y, t)
    termination: str  # singularity-approach | disk-boundary | step-limit


def disk_project(p) -> tuple[float, float]:
    """Central projection onto the Poincare disk.

    Finite points (x, y) map to (x, y)/sqrt(1+x^2+y^2) (norm < 1);
    Direction values map to the corresponding equator point (norm = 1).
    """
    if isinstance(p, Direction):
        if p.vertical:
            return (0.0, 1.0)
        u0 = float(p.u0)
        norm = sqrt(1.0 + u0 * u0)
        return (1.0 / norm, u0 / norm)
    x, y = float(p[0]), float(p[1])
    norm = sqrt(1.0 + x * x + y * y)
    return (x / norm, y / norm)


def field_function(sys: PolySys) -> Callable[[float, float], tuple[float, float]]:
    """Compile the polynomial field into a fast float evaluator."""
    p_terms = [(float(c), i, j) for (i, j), c in sorted(sys.p.terms.items())]
    q_terms = [(float(c), i, j) for (i, j), c in sorted(sys.q.terms.items())]

    def f(x: float, y: float) -> tuple[float, float]:
        px = 0.0
        for c, i, j in p_terms:
            px += c * x**i * y**j
        qx = 0.0
        for c, i, j in q_terms:
            qx += c * x**i * y**j
        return px, qx

    return f


def _disk_radius(x: float, y: float) -> float:
    r2 = x * x + y * y
    return sqrt(r2 / (1.0 + r2))


def integrate(sys: PolySys, start: tuple[float, float], direction: int = 1,
              budget: int = DEFAULT_BUDGET) -> Orbit:
    """Adaptive Runge-Kutta 4/5 trajectory from `start`.

    direction=+1 integrates forward in time, -1 backward.  Stops within
    1e-6 of the origin (the unique finite singularity), at projected disk
    radius 0.999, or when the step budget runs out.  Raises DomainError
    when the start is a singular point of the field.
    """
    f = field_function(sys)
    x, y = float(start[0]), float(start[1])
    fx, fy = f(x, y)
    if fx == 0.0 and fy == 0.0:
        raise DomainError("orbit start is a singular point of the field")
    if hypot(x, y) <= SINGULARITY_STOP:
        raise DomainError("orbit start lies inside the singularity stop radius")
    sgn = 1.0 if direction >= 0 else -1.0
    t = 0.0
    samples = [(x, y, t)]
    fmag = hypot(fx, fy)
    h = min(0.01, 0.01 / fmag) if fmag > 1.0 else 0.01
    termination = "step-limit"
    k = [(0.0, 0.0)] * 7
    steps = 0
    while steps < budget:
        steps += 1
        k[0] = f(x, y)
        k[0] = (sgn * k[0][0], sgn * k[0][1])
        bad = False
        for s in range(1, 7):
            ax = x + h * sum(a * k[m][0] for m, a in enumerate(_A[s]))
            ay = y + h * sum(a * k[m][1] for m, a in enumerate(_A[s]))
            ks = f(ax, ay)
            k[s] = (sgn * ks[0], sgn * ks[1])
            if not (abs(k[s][0]) < 1e30 and abs(k[s][1]) < 1e30):
                bad = True
                break
        if bad:
            h *= 0.5
            continue
        x5 = x + h * sum(b * k[m][0] for m, b in enumerate(_B5))
        y5 = y + h * sum(b * k[m][1] for m, b in enumerate(_B5))
        x4 = x + h * sum(b * k[m][0] for m, b in enumerate(_B4))
        y4 = y + h * sum(b * k[m][1] for m, b in enumerate(_B4))
        ex = x5 - x4
        ey = y5 - y4
        sx = ATOL + RTOL * max(abs(x), abs(x5))
        sy = ATOL + RTOL * max(abs(y), abs(y5))
        err = sqrt(0.5 * ((ex / sx) ** 2 + (ey / sy) ** 2))
        if err <= 1.0:
            t += h
            x, y = x5, y5
            samples.append((x, y, t))
            if hypot(x, y) <= SINGULARITY_STOP:
                termination = "singularity-approach"
                break
            if _disk_radius(x, y) >= DISK_STOP_RADIUS:
                termination = "disk-boundary"
                break
        factor = 0.9 * err ** -0.2 if err > 0.0 else 5.0
        h *= min(5.0, max(0.2, factor))
        if h < 1e-14:
            termination = "singularity-approach"
            break
    return Orbit(samples=samples, termination=termination)
