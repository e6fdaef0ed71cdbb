"""Named polygon families and random convex polygons."""

from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from .errors import ParamOutOfRange
from .geometry import SQRT3, ConvexPolygon, EquilateralPose, canonicalize

SeedLike = Union[int, Sequence[int], np.random.SeedSequence, np.random.Generator]


def make_equilateral(pose: EquilateralPose) -> ConvexPolygon:
    return canonicalize(pose.vertices())


def equilateral(width: float = 1.0, center=(0.0, 0.0), rotation: float = 0.0) -> ConvexPolygon:
    return make_equilateral(EquilateralPose(width, center, rotation))


def rect_RL(L: float) -> ConvexPolygon:
    """The rectangle [-L, L] x [0, 1]; its minimal width is 1 for L >= 1/2."""
    if not L >= 1.0:
        raise ParamOutOfRange(f"rect_RL needs L >= 1, got {L}")
    return canonicalize([(-L, 0.0), (L, 0.0), (L, 1.0), (-L, 1.0)])


def rectangle(length: float, height: float = 1.0) -> ConvexPolygon:
    return canonicalize([(0.0, 0.0), (length, 0.0), (length, height), (0.0, height)])


def family_T0() -> ConvexPolygon:
    """Equilateral triangle (-1, 0), (1, 0), (0, sqrt 3) of width sqrt 3."""
    return canonicalize([(-1.0, 0.0), (1.0, 0.0), (0.0, SQRT3)])


def _check_eps(eps: float) -> None:
    if not 0.0 < eps < SQRT3 / 2:
        raise ParamOutOfRange(f"epsilon must lie in (0, sqrt(3)/2), got {eps}")


def family_Teps(eps: float) -> ConvexPolygon:
    """Triangle (-1 + e/(2 sqrt 3), 0), (1 - e/(2 sqrt 3), 0), (0, sqrt 3 - e).

    Isosceles with minimal width sqrt 3 - e and contained in ``family_Reps(e)``.
    """
    _check_eps(eps)
    a = eps / (2.0 * SQRT3)
    return canonicalize([(-1.0 + a, 0.0), (1.0 - a, 0.0), (0.0, SQRT3 - eps)])


def family_Reps(eps: float) -> ConvexPolygon:
    """``family_T0()`` with its top corner cut off by the line y = sqrt 3 - e."""
    _check_eps(eps)
    top = SQRT3 - eps
    half = eps / SQRT3
    return canonicalize([(-1.0, 0.0), (1.0, 0.0), (half, top), (-half, top)])


def regular_ngon(n: int, width: float = 1.0) -> ConvexPolygon:
    """Regular n-gon centered at the origin with a horizontal bottom edge."""
    if n < 3 or not width > 0.0:
        raise ParamOutOfRange(f"regular_ngon needs n >= 3 and width > 0, got n={n}, width={width}")
    apothem_per_circum = math.cos(math.pi / n)
    # even n: width = 2 * apothem; odd n: width = apothem + circumradius
    if n % 2 == 0:
        circum = width / (2.0 * apothem_per_circum)
    else:
        circum = width / (1.0 + apothem_per_circum)
    start = -math.pi / 2 - math.pi / n
    return canonicalize(
        [(circum * math.cos(start + 2 * math.pi * k / n), circum * math.sin(start + 2 * math.pi * k / n)) for k in range(n)]
    )


def reuleaux_polygon(m: int, width: float = 1.0) -> ConvexPolygon:
    """Inscribed polygon of the Reuleaux triangle of the given width.

    Each of the three arcs contributes its start corner and m - 1 interior
    samples, so the polygon has 3m vertices.
    """
    if m < 2 or not width > 0.0:
        raise ParamOutOfRange(f"reuleaux_polygon needs m >= 2 and width > 0, got m={m}")
    corners = [
        (width * math.cos(math.pi / 2 + 2 * math.pi * k / 3) / SQRT3, width * math.sin(math.pi / 2 + 2 * math.pi * k / 3) / SQRT3)
        for k in range(3)
    ]
    pts = []
    for k in range(3):
        cx, cy = corners[(k + 2) % 3]  # arc from corner k to corner k+1 is centered at the third corner
        sx, sy = corners[k]
        a0 = math.atan2(sy - cy, sx - cx)
        for j in range(m):
            a = a0 + (math.pi / 3) * j / m
            pts.append((cx + width * math.cos(a), cy + width * math.sin(a)))
    return canonicalize(pts)


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_convex(n: int, seed: SeedLike) -> ConvexPolygon:
    """Random convex polygon with at most n vertices (Valtr's construction).

    Sorted uniform coordinates are split at random into two monotone chains,
    the x and y increments are paired at random, and the resulting edge vectors
    are chained in angular order.  Vertices merged by canonicalization can make
    the result have fewer than n vertices.
    """
    if n < 3:
        raise ParamOutOfRange(f"random_convex needs n >= 3, got {n}")
    rng = _rng(seed)
    while True:
        xs = _chain_increments(np.sort(rng.random(n)), rng)
        ys = _chain_increments(np.sort(rng.random(n)), rng)
        rng.shuffle(ys)
        vec = np.stack([xs, ys], axis=1)
        vec = vec[np.argsort(np.arctan2(vec[:, 1], vec[:, 0]), kind="stable")]
        pts = np.cumsum(vec, axis=0)
        pts -= pts.mean(axis=0)
        try:
            return canonicalize(pts.tolist())
        except ValueError:
            continue


def _chain_increments(vals: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = len(vals)
    lo, hi = vals[0], vals[-1]
    side = rng.random(n - 2) < 0.5
    out = np.empty(n)
    last_a = last_b = lo
    k = 0
    for v, s in zip(vals[1:-1], side):
        if s:
            out[k] = v - last_a
            last_a = v
        else:
            out[k] = last_b - v
            last_b = v
        k += 1
    out[k] = hi - last_a
    out[k + 1] = last_b - hi
    return out
