"""Cheeger constant and Cheeger set of a convex polygon.

For a planar convex body K the Cheeger radius r* is the unique root of

    |K_{-r}| = pi * r**2,     0 < r < r(K),

the Cheeger constant is h(K) = 1/r*, and the Cheeger set is K_{-r*} + r* B1.
The area profile t -> |K_{-t}| is continuous and strictly decreasing but only
piecewise quadratic (an edge disappears at each breakpoint), so the root is
found by plain bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NegativeOffset, OffsetBeyondInradius
from .geometry import (
    ConvexPolygon,
    RoundedPolygon,
    _hpi,
    _shoelace,
    diameter,
    inner_area,
    inner_parallel,
    inradius,
    minimal_width,
)

SQRT_PI_SQRT3 = math.sqrt(math.pi * math.sqrt(3.0))
# w(T)h(T) for every equilateral triangle T; the maximum of w*h over planar convex bodies.
WH_MAX = 3.0 + SQRT_PI_SQRT3

ROOT_REL_TOL = 1e-13
ROOT_MAX_ITER = 80


@dataclass(frozen=True)
class CheegerResult:
    h: float
    r_star: float
    cheeger_set: RoundedPolygon
    residual: float


@dataclass(frozen=True)
class ShapeScalars:
    w: float
    r: float
    area: float
    perim: float
    diam: float
    h: float
    wh: float


def area_profile(P: ConvexPolygon, t: float) -> float:
    """Area of the inner parallel set of P at distance t."""
    if t < 0.0:
        raise NegativeOffset(f"offset must be >= 0, got {t}")
    a = inner_area(P, t)
    if a > 0.0:
        return a
    r = inradius(P)
    if t > r * (1.0 + 1e-9):
        raise OffsetBeyondInradius(f"t = {t} exceeds the inradius {r}")
    return 0.0


def _profile_gap(lines, t: float) -> float:
    verts = _hpi(lines, t)
    a = 0.0 if verts is None else max(_shoelace(verts), 0.0)
    return a - math.pi * t * t


def cheeger_radius(P: ConvexPolygon, rel_tol: float = ROOT_REL_TOL, max_iter: int = ROOT_MAX_ITER) -> float:
    """Root r* of |P_{-r}| = pi r^2 by bisection.

    The bracket is [0, 2|P|/per(P)]: the upper end is at least the inradius
    (|P| >= r per(P) / 2), where the inner set has no area left, so the profile
    gap is negative there and positive at 0.
    """
    lines = P.lines
    lo, hi = 0.0, 2.0 * P.area / P.perimeter
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if _profile_gap(lines, mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rel_tol * hi:
            break
    return 0.5 * (lo + hi)


def cheeger(P: ConvexPolygon) -> CheegerResult:
    r_star = cheeger_radius(P)
    core = inner_parallel(P, r_star)
    if core is None:  # pragma: no cover - r* < r(P) for every convex body
        raise ArithmeticError("Cheeger core collapsed; polygon is numerically degenerate")
    residual = inner_area(P, r_star) - math.pi * r_star * r_star
    return CheegerResult(1.0 / r_star, r_star, RoundedPolygon(core, r_star), residual)


def cheeger_constant(P: ConvexPolygon) -> float:
    return 1.0 / cheeger_radius(P)


def width_cheeger_product(P: ConvexPolygon) -> float:
    return minimal_width(P)[0] / cheeger_radius(P)


def wh_exceeds(P: ConvexPolygon, target: float, w: float | None = None) -> bool:
    """Whether w(P) h(P) > target, decided by one area-profile evaluation.

    w h > target  <=>  r* < w / target  <=>  the profile gap at w / target is
    negative, because the gap is strictly decreasing.
    """
    if w is None:
        w = minimal_width(P)[0]
    return _profile_gap(P.lines, w / target) < 0.0


def cheeger_scalars(P: ConvexPolygon) -> ShapeScalars:
    w = minimal_width(P)[0]
    h = cheeger_constant(P)
    return ShapeScalars(
        w=w, r=inradius(P), area=P.area, perim=P.perimeter, diam=diameter(P), h=h, wh=w * h
    )


def profile_dominates(K: ConvexPolygon, H: ConvexPolygon, n_grid: int = 256) -> bool:
    """|K_{-t}| > |H_{-t}| on an n_grid-point grid strictly inside (0, max(r(K), r(H)))."""
    top = max(inradius(K), inradius(H))
    for k in range(1, n_grid + 1):
        t = top * k / (n_grid + 1)
        if not inner_area(K, t) > inner_area(H, t):
            return False
    return True
