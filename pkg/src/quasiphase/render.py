"""Plot-data emission for classified portraits.

The JSON document carries the portrait report plus sampled orbits in plane
coordinates (the figure projects them onto the Poincare disk).  Sample-orbit
seeds sit at the angular midpoints of the regions cut out by the separatrix
skeleton inside the symmetry half-plane; reflections then fill the remaining
quadrants, so the emitted point set is symmetric by construction and runs
are byte-identical for a fixed seed.
"""

from __future__ import annotations

import io
import json
import math
import random

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .errors import DomainError  # noqa: E402
from .orbits import Direction, Orbit, disk_project, integrate  # noqa: E402
from .polynomial import PolySys  # noqa: E402
from .portrait import PortraitClass, SkeletonCurve, portrait_report_dict  # noqa: E402

RENDER_BUDGET = 4000
PLANE_SPAN = 40.0  # plane radius matching disk radius ~0.9997


def _curve_angles(sc: SkeletonCurve, lo: float, hi: float) -> list[float]:
    """Angles in (lo, hi) where a skeleton curve meets the unit circle."""
    if sc.kind == "axis-x":
        cands = [-math.pi / 2, math.pi / 2]
        return [t for t in cands if lo < t < hi]
    if sc.kind == "axis-y":
        cands = [0.0, math.pi, -math.pi]
        return [t for t in cands if lo < t < hi]
    u0 = float(sc.u0)

    def g(theta: float) -> float:
        return math.sin(theta) ** sc.s1 - u0 * math.cos(theta) ** sc.s2

    out = []
    grid = 720
    prev_t, prev_v = lo + 1e-9, g(lo + 1e-9)
    for i in range(1, grid + 1):
        t = lo + 1e-9 + (hi - lo - 2e-9) * i / grid
        v = g(t)
        if prev_v == 0.0:
            out.append(prev_t)
        elif v * prev_v < 0:
            a, b = prev_t, t
            for _ in range(80):
                m = 0.5 * (a + b)
                if g(a) * g(m) <= 0:
                    b = m
                else:
                    a = m
            out.append(0.5 * (a + b))
        prev_t, prev_v = t, v
    return out


def _sample_curve(sc: SkeletonCurve) -> list[list[tuple[float, float]]]:
    """Plane-coordinate samples of each real branch of a skeleton curve."""
    rs = [math.tan(t) for t in
          [1e-4 + (math.atan(PLANE_SPAN) - 1e-4) * i / 160 for i in range(161)]]
    if sc.kind == "axis-x":
        return [[(0.0, r) for r in rs], [(0.0, -r) for r in rs]]
    if sc.kind == "axis-y":
        return [[(r, 0.0) for r in rs], [(-r, 0.0) for r in rs]]
    u0 = float(sc.u0)
    branches: list[list[tuple[float, float]]] = []
    for xsign in (1.0, -1.0):
        vals = []
        for r in rs:
            x = xsign * r
            w = u0 * x**sc.s2
            if sc.s1 % 2 == 1:
                y = math.copysign(abs(w) ** (1.0 / sc.s1), w)
                vals.append((x, y))
            elif w >= 0.0:
                vals.append((x, w ** (1.0 / sc.s1)))
        if vals:
            branches.append(vals)
            if sc.s1 % 2 == 0:
                branches.append([(x, -y) for x, y in vals])
    return branches


def _working_arc(symmetry_kind: str | None) -> tuple[float, float]:
    if symmetry_kind == "reflect-y":
        return (0.0, math.pi)
    return (-math.pi / 2, math.pi / 2)


def _region_seeds(pc: PortraitClass, rng: random.Random) -> list[tuple[float, float]]:
    kind = pc.symmetry.kind if pc.symmetry else None
    lo, hi = _working_arc(kind)
    angles = sorted({a for sc in pc.skeleton for a in _curve_angles(sc, lo, hi)})
    cuts = [lo] + angles + [hi]
    seeds = []
    if len(cuts) == 2 and not pc.skeleton:
        # empty skeleton (center-like): concentric sampling radii
        return [(r, 0.0) for r in (0.5, 1.0, 1.5)]
    for a, b in zip(cuts, cuts[1:]):
        if b - a < 1e-6:
            continue
        mid = 0.5 * (a + b)
        r = rng.choice((0.8, 1.0, 1.25))
        seeds.append((r * math.cos(mid), r * math.sin(mid)))
    return seeds


def _reflections(kind: str | None) -> list[tuple[float, float]]:
    if kind == "reflect-y":
        return [(1.0, -1.0)]
    if kind == "reflect-x":
        return [(-1.0, 1.0)]
    if kind == "point":
        return [(-1.0, -1.0)]
    return []


def _mirror_orbit(orb: Orbit, sx: float, sy: float) -> Orbit:
    return Orbit(samples=[(sx * x, sy * y, t) for x, y, t in orb.samples],
                 termination=orb.termination)


def render_document(pc: PortraitClass, sys: PolySys, seed: int = 0) -> dict:
    """The full plot-data document: portrait report plus sampled orbits."""
    rng = random.Random(seed)
    seeds = _region_seeds(pc, rng)
    orbits: list[Orbit] = []
    for s in seeds:
        for direction in (1, -1):
            try:
                orbits.append(integrate(sys, s, direction, budget=RENDER_BUDGET))
            except DomainError:
                continue  # seed fell on a singular point; region still mirrored
    kind = pc.symmetry.kind if pc.symmetry else None
    mirrored = []
    for sx, sy in _reflections(kind):
        mirrored.extend(_mirror_orbit(o, sx, sy) for o in orbits)
    orbits.extend(mirrored)
    return {
        "system": sys.to_text(),
        "portrait": portrait_report_dict(pc),
        "orbits": [{"samples": [[x, y, t] for x, y, t in o.samples],
                    "termination": o.termination} for o in orbits],
        "projection": "poincare-disk",
    }


def _figure(pc: PortraitClass, sys: PolySys, doc: dict):
    # 800x800 canvas: matplotlib writes SVG sizes in pt (72 per inch)
    fig, ax = plt.subplots(figsize=(800 / 72, 800 / 72), dpi=72)
    ax.set_aspect("equal")
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.axis("off")
    theta = [2 * math.pi * i / 720 for i in range(721)]
    lw = 3.0 if pc.invariant_data.get("line_filled") else 1.2
    ax.plot([math.cos(t) for t in theta], [math.sin(t) for t in theta],
            color="black", linewidth=lw)
    kind = pc.symmetry.kind if pc.symmetry else None
    reflections = [(1.0, 1.0)] + _reflections(kind)
    for sc in pc.skeleton:
        for branch in _sample_curve(sc):
            for sx, sy in reflections:
                pts = [disk_project((sx * x, sy * y)) for x, y in branch]
                ax.plot([p[0] for p in pts], [p[1] for p in pts],
                        color="tab:red", linewidth=1.4)
    for orb in doc["orbits"]:
        pts = [disk_project((x, y)) for x, y, _ in orb["samples"]]
        ax.plot([p[0] for p in pts], [p[1] for p in pts],
                color="tab:blue", linewidth=0.7)
    ax.plot([0.0], [0.0], marker="o", markersize=6, color="black")
    for entry in pc.infinite_singularities:
        d = entry.get("direction")
        if d is None:
            continue
        if d.get("vertical"):
            pts = [(0.0, 1.0), (0.0, -1.0)]
        else:
            ex, ey = disk_project(Direction(u0=d["u0"]))
            pts = [(ex, ey), (-ex, -ey)]
        marker = "s" if entry["kind"] == "saddle" else "o"
        for px, py in pts:
            ax.plot([px], [py], marker=marker, markersize=7,
                    markerfacecolor="white", markeredgecolor="black")
    ax.set_title(f"{pc.figure_tag}: {sys.to_text()}", fontsize=10)
    return fig


def emit_portrait(pc: PortraitClass, sys: PolySys, format: str,
                  seed: int = 0) -> str:
    """Render the classified portrait as a document.

    format "json" gives the plot-data document (deterministic for a fixed
    seed); "svg" a schematic 800x800 figure of the Poincare disk.
    """
    if format == "json":
        doc = render_document(pc, sys, seed)
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if format == "svg":
        doc = render_document(pc, sys, seed)
        plt.rcParams["svg.hashsalt"] = f"quasiphase-{seed}"
        fig = _figure(pc, sys, doc)
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
        return buf.getvalue()
    raise ValueError(f"unsupported format {format!r}")
