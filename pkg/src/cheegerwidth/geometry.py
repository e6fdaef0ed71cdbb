"""Floating-point primitives for planar convex polygons.

Polygons are stored as counterclockwise vertex tuples.  Everything here is a
pure function of immutable values; cached per-polygon data (edge lines, area)
lives on the instance and is computed at most once.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DegenerateInput, GeometryError, NegativeOffset

TWO_PI = 2.0 * math.pi
SQRT3 = math.sqrt(3.0)

# Convexity threshold on cross products, relative to scale**2.
CONVEXITY_TOL = 1e-12
# Vertices closer than this (relative to scale) are merged.
MERGE_TOL = 1e-12
# Half-planes whose normal angles differ by less than this are treated as parallel.
PARALLEL_TOL = 1e-10

Point = tuple[float, float]
Line = tuple[float, float, float]  # (a, b, c): a*x + b*y <= c, (a, b) unit


def _wrap(theta: float) -> float:
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    if theta >= TWO_PI:
        theta = 0.0
    return theta


@dataclass(frozen=True)
class Direction:
    """Unit direction (cos theta, sin theta), theta kept in [0, 2*pi)."""

    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _wrap(float(self.theta)))

    @property
    def unit(self) -> Point:
        return (math.cos(self.theta), math.sin(self.theta))

    def opposite(self) -> "Direction":
        return Direction(self.theta + math.pi)


Angle = Union[Direction, float]


def _theta(d: Angle) -> float:
    return d.theta if isinstance(d, Direction) else float(d)


@dataclass(frozen=True)
class HalfPlane:
    """The set {x : normal . x <= offset}."""

    normal: Point
    offset: float

    def __post_init__(self):
        nx, ny = self.normal
        if abs(math.hypot(nx, ny) - 1.0) > 1e-9:
            raise GeometryError(f"half-plane normal {self.normal} is not a unit vector")

    def shifted(self, t: float) -> "HalfPlane":
        return HalfPlane(self.normal, self.offset - t)


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon with counterclockwise vertices.

    Build instances through :func:`canonicalize` unless the vertex list is
    already known to be strictly convex and counterclockwise.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise DegenerateInput("a polygon needs at least 3 vertices")
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]]) -> "ConvexPolygon":
        return canonicalize(points)

    @cached_property
    def scale(self) -> float:
        """Bounding-box diagonal; the length unit for all tolerances."""
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return math.hypot(max(xs) - min(xs), max(ys) - min(ys))

    @cached_property
    def area(self) -> float:
        return _shoelace(self.vertices)

    @cached_property
    def perimeter(self) -> float:
        v = self.vertices
        return math.fsum(math.dist(v[i - 1], v[i]) for i in range(len(v)))

    @cached_property
    def centroid(self) -> Point:
        return _centroid(self.vertices)

    @cached_property
    def lines(self) -> tuple[Line, ...]:
        """Edge lines with outward unit normals, sorted by normal angle.

        Near-parallel lines are collapsed to the tighter one.
        """
        v = self.vertices
        n = len(v)
        raw = []
        for i in range(n):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % n]
            dx, dy = x1 - x0, y1 - y0
            length = math.hypot(dx, dy)
            a, b = dy / length, -dx / length
            raw.append((math.atan2(b, a), a, b, a * x0 + b * y0))
        raw.sort()
        kept: list[tuple[float, float, float, float]] = []
        for item in raw:
            if kept and item[0] - kept[-1][0] < PARALLEL_TOL:
                if item[3] < kept[-1][3]:
                    kept[-1] = item
                continue
            kept.append(item)
        if len(kept) > 1 and kept[0][0] + TWO_PI - kept[-1][0] < PARALLEL_TOL:
            last = kept.pop()
            if last[3] < kept[0][3]:
                kept[0] = last
        return tuple((a, b, c) for _, a, b, c in kept)

    @cached_property
    def halfplanes(self) -> tuple[HalfPlane, ...]:
        return tuple(HalfPlane((a, b), c) for a, b, c in self.lines)

    @cached_property
    def _support_table(self) -> tuple[list[float], list[Point]]:
        """Outward edge-normal angles in [0, 2*pi), sorted, with the vertex that
        supports the arc ending at each angle."""
        v = self.vertices
        n = len(v)
        rows = []
        for i in range(n):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % n]
            # arc of normals ending at this edge's normal is supported by v[i]
            rows.append((_wrap(math.atan2(-(x1 - x0), y1 - y0)), v[i]))
        rows.sort()
        return [r[0] for r in rows], [r[1] for r in rows]

    def translated(self, dx: float, dy: float) -> "ConvexPolygon":
        return ConvexPolygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def scaled(self, s: float, about: Point = (0.0, 0.0)) -> "ConvexPolygon":
        if s <= 0.0:
            raise GeometryError("scale factor must be positive")
        cx, cy = about
        return ConvexPolygon(tuple((cx + s * (x - cx), cy + s * (y - cy)) for x, y in self.vertices))

    def rotated(self, angle: float, about: Point = (0.0, 0.0)) -> "ConvexPolygon":
        c, s = math.cos(angle), math.sin(angle)
        cx, cy = about
        return ConvexPolygon(
            tuple((cx + c * (x - cx) - s * (y - cy), cy + s * (x - cx) + c * (y - cy)) for x, y in self.vertices)
        )

    def contains(self, p: Sequence[float], tol: float = 0.0) -> bool:
        x, y = p
        return all(a * x + b * y <= c + tol for a, b, c in self.lines)

    def to_json(self) -> dict:
        return {"vertices": [[x, y] for x, y in self.vertices]}


@dataclass(frozen=True)
class RoundedPolygon:
    """Minkowski sum ``core + radius * B1`` of a convex polygon and a disk."""

    core: ConvexPolygon
    radius: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise NegativeOffset(f"disk radius must be >= 0, got {self.radius}")

    @property
    def area(self) -> float:
        r = self.radius
        return self.core.area + self.core.perimeter * r + math.pi * r * r

    @property
    def perimeter(self) -> float:
        return self.core.perimeter + TWO_PI * self.radius

    def boundary(self, per_vertex: int = 16) -> list[Point]:
        """Boundary samples: each vertex arc gets ``per_vertex`` + 1 points."""
        v = self.core.vertices
        r = self.radius
        n = len(v)
        out: list[Point] = []
        for i in range(n):
            x, y = v[i]
            a0 = _edge_normal_angle(v[i - 1], v[i])
            a1 = _edge_normal_angle(v[i], v[(i + 1) % n])
            sweep = (a1 - a0) % TWO_PI
            for k in range(per_vertex + 1):
                a = a0 + sweep * k / per_vertex
                out.append((x + r * math.cos(a), y + r * math.sin(a)))
        return out


@dataclass(frozen=True)
class EquilateralPose:
    """Equilateral triangle given by its minimal width, center and rotation.

    Rotation 0 puts one vertex straight above the center; rotation is stored
    modulo 2*pi/3.
    """

    width: float
    center: Point
    rotation: float

    def __post_init__(self):
        if not self.width > 0.0:
            raise GeometryError("equilateral width must be positive")
        rot = math.fmod(float(self.rotation), TWO_PI / 3.0)
        if rot < 0.0:
            rot += TWO_PI / 3.0
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    def vertices(self) -> tuple[Point, ...]:
        circum = 2.0 * self.width / 3.0
        cx, cy = self.center
        return tuple(
            (
                cx + circum * math.cos(self.rotation + math.pi / 2 + TWO_PI * k / 3),
                cy + circum * math.sin(self.rotation + math.pi / 2 + TWO_PI * k / 3),
            )
            for k in range(3)
        )


def _edge_normal_angle(p: Point, q: Point) -> float:
    return math.atan2(-(q[0] - p[0]), q[1] - p[1])


def _shoelace(v: Sequence[Point]) -> float:
    # relative to the first vertex so tiny polygons far from the origin keep precision
    x0, y0 = v[0]
    s = 0.0
    for i in range(1, len(v) - 1):
        ax, ay = v[i][0] - x0, v[i][1] - y0
        bx, by = v[i + 1][0] - x0, v[i + 1][1] - y0
        s += ax * by - ay * bx
    return 0.5 * s


def _centroid(v: Sequence[Point]) -> Point:
    x0, y0 = v[0]
    a2 = cx = cy = 0.0
    for i in range(1, len(v) - 1):
        ax, ay = v[i][0] - x0, v[i][1] - y0
        bx, by = v[i + 1][0] - x0, v[i + 1][1] - y0
        cr = ax * by - ay * bx
        a2 += cr
        cx += (ax + bx) * cr
        cy += (ay + by) * cr
    if a2 <= 0.0:
        n = len(v)
        return (sum(p[0] for p in v) / n, sum(p[1] for p in v) / n)
    return (x0 + cx / (3.0 * a2), y0 + cy / (3.0 * a2))


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


# ---------------------------------------------------------------- construction


def canonicalize(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Convex hull of ``points`` as a strictly convex CCW polygon.

    Collinear and near-duplicate vertices are dropped; the lexicographically
    smallest vertex comes first, which makes the operation idempotent.
    """
    pts = sorted({(float(p[0]), float(p[1])) for p in points})
    if len(pts) < 3:
        raise DegenerateInput(f"need at least 3 distinct points, got {len(pts)}")
    if not all(math.isfinite(c) for p in pts for c in p):
        raise DegenerateInput("non-finite coordinate")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    scale = math.hypot(xs[-1] - xs[0], max(ys) - min(ys))
    if scale == 0.0:
        raise DegenerateInput("all points coincide")
    tol = CONVEXITY_TOL * scale * scale
    merge = MERGE_TOL * scale

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= tol:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= tol:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]

    changed = True
    while changed and len(hull) >= 3:
        changed = False
        i = 0
        while i < len(hull) and len(hull) >= 3:
            n = len(hull)
            prev, cur, nxt = hull[i - 1], hull[i], hull[(i + 1) % n]
            if math.dist(cur, nxt) <= merge or _cross(prev, cur, nxt) <= tol:
                del hull[i]
                changed = True
            else:
                i += 1
    if len(hull) < 3 or _shoelace(hull) <= tol:
        raise DegenerateInput("point set has (numerically) empty interior")
    k = hull.index(min(hull))
    return ConvexPolygon(tuple(hull[k:] + hull[:k]))


# ---------------------------------------------------------------- metrics


def area(P: ConvexPolygon) -> float:
    return P.area


def perimeter(P: ConvexPolygon) -> float:
    return P.perimeter


def diameter(P: ConvexPolygon) -> float:
    """Largest distance between two vertices."""
    v = np.asarray(P.vertices)
    diff = v[:, None, :] - v[None, :, :]
    return float(np.sqrt((diff**2).sum(axis=-1).max()))


def support(P: ConvexPolygon, d: Angle) -> float:
    """Support function: max of x . (cos t, sin t) over the polygon."""
    th = _theta(d)
    c, s = math.cos(th), math.sin(th)
    return max(x * c + y * s for x, y in P.vertices)


def directional_width(P: ConvexPolygon, d: Angle) -> float:
    th = _theta(d)
    c, s = math.cos(th), math.sin(th)
    proj = [x * c + y * s for x, y in P.vertices]
    return max(proj) - min(proj)


def minimal_width(P: ConvexPolygon) -> tuple[float, Direction]:
    """Minimal width by rotating calipers over the edges.

    For every edge the farthest vertex is tracked with a single pointer; the
    width is the smallest of those edge-to-antipode distances.  The returned
    direction is the outward normal of the minimizing edge.
    """
    v = P.vertices
    n = len(v)
    best = math.inf
    best_i = 0
    j = 1
    for i in range(n):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % n]
        dx, dy = x1 - x0, y1 - y0
        length = math.hypot(dx, dy)
        # distance of p from the edge line (inside is positive for CCW)
        def dist(p):
            return (dx * (p[1] - y0) - dy * (p[0] - x0)) / length

        if i == 0:
            j = max(range(n), key=lambda k: dist(v[k]))
        steps = 0
        while steps < n and dist(v[(j + 1) % n]) > dist(v[j]):
            j = (j + 1) % n
            steps += 1
        d = dist(v[j])
        if d < best:
            best, best_i = d, i
    x0, y0 = v[best_i]
    x1, y1 = v[(best_i + 1) % n]
    return best, Direction(_edge_normal_angle((x0, y0), (x1, y1)))


def width(P: ConvexPolygon) -> float:
    return minimal_width(P)[0]


# ---------------------------------------------------------------- half-planes


def _intersect(l1: Line, l2: Line) -> Point:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    return ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def _hpi(lines: Sequence[Line], t: float = 0.0) -> Optional[list[Point]]:
    """Intersection of half-planes ``a*x + b*y <= c - t``.

    ``lines`` must be sorted by normal angle, free of near-parallel pairs and
    describe a bounded region at t = 0.  Returns CCW vertices or None when the
    intersection is empty.
    """
    n = len(lines)
    dq: list = [None] * n
    pts: list = [None] * n  # pts[k] = dq[k-1] meet dq[k]
    head, tail = 0, -1
    for a, b, c in lines:
        c -= t
        while tail > head:
            x, y = pts[tail]
            if a * x + b * y > c:
                tail -= 1
            else:
                break
        while tail > head:
            x, y = pts[head + 1]
            if a * x + b * y > c:
                head += 1
            else:
                break
        if tail >= head:
            la, lb, lc = dq[tail]
            if la * b - lb * a <= 1e-15:
                # turning by pi or more after popping: the region collapsed
                return None
        tail += 1
        dq[tail] = (a, b, c)
        if tail > head:
            pts[tail] = _intersect(dq[tail - 1], dq[tail])
    while tail - head >= 2:
        a, b, c = dq[head]
        x, y = pts[tail]
        if a * x + b * y > c:
            tail -= 1
        else:
            break
    while tail - head >= 2:
        a, b, c = dq[tail]
        x, y = pts[head + 1]
        if a * x + b * y > c:
            head += 1
        else:
            break
    if tail - head < 2:
        return None
    la, lb, _ = dq[tail]
    fa, fb, _ = dq[head]
    if la * fb - lb * fa <= 1e-15:
        return None
    return [_intersect(dq[tail], dq[head])] + pts[head + 1 : tail + 1]


def intersect_halfplanes(halfplanes: Iterable[HalfPlane]) -> Optional[ConvexPolygon]:
    """Intersection of a bounded family of half-planes, or None if it has no interior."""
    raw = sorted(
        (math.atan2(h.normal[1], h.normal[0]), h.normal[0], h.normal[1], h.offset) for h in halfplanes
    )
    kept: list = []
    for item in raw:
        if kept and item[0] - kept[-1][0] < PARALLEL_TOL:
            if item[3] < kept[-1][3]:
                kept[-1] = item
            continue
        kept.append(item)
    if len(kept) > 1 and kept[0][0] + TWO_PI - kept[-1][0] < PARALLEL_TOL:
        last = kept.pop()
        if last[3] < kept[0][3]:
            kept[0] = last
    if len(kept) < 3:
        return None
    verts = _hpi([(a, b, c) for _, a, b, c in kept])
    return _as_polygon(verts)


def _as_polygon(verts: Optional[list[Point]]) -> Optional[ConvexPolygon]:
    if verts is None or _shoelace(verts) <= 0.0:
        return None
    try:
        return canonicalize(verts)
    except DegenerateInput:
        return None


def inner_area(P: ConvexPolygon, t: float) -> float:
    """Area of the inner parallel set at distance t (0 once it is empty)."""
    verts = _hpi(P.lines, t)
    if verts is None:
        return 0.0
    return max(_shoelace(verts), 0.0)


def inner_parallel(P: ConvexPolygon, t: float) -> Optional[ConvexPolygon]:
    """Points of P at distance >= t from the boundary.

    Returns None once the set has no interior, i.e. for t at or beyond the
    inradius (up to rounding).
    """
    if t < 0.0:
        raise NegativeOffset(f"offset must be >= 0, got {t}")
    if t == 0.0:
        return P
    return _as_polygon(_hpi(P.lines, t))


def inradius_center(P: ConvexPolygon, rel_tol: float = 1e-12, max_iter: int = 60) -> tuple[float, Point]:
    """Inradius by bisection on the feasibility of the inner parallel set.

    When the largest inscribed disk is not unique (rectangles), the center is
    the centroid of the innermost nonempty inner parallel set, which sits at
    the midpoint of the segment of admissible centers.
    """
    w = minimal_width(P)[0]
    lo, hi = 0.0, 0.5 * w  # r <= w/2 always
    lo_verts = list(P.vertices)
    lines = P.lines
    for _ in range(max_iter):
        if hi - lo <= rel_tol * w:
            break
        mid = 0.5 * (lo + hi)
        verts = _hpi(lines, mid)
        if verts is not None and _shoelace(verts) > 0.0:
            lo, lo_verts = mid, verts
        else:
            hi = mid
    return lo, _centroid(lo_verts)


def inradius(P: ConvexPolygon) -> float:
    return inradius_center(P)[0]


def minkowski_disk(P: ConvexPolygon, rho: float) -> RoundedPolygon:
    return RoundedPolygon(P, float(rho))


# ---------------------------------------------------------------- Hausdorff


def _support_vertex(table: tuple[list[float], list[Point]], theta: float) -> Point:
    angles, verts = table
    k = bisect_left(angles, theta)
    return verts[k if k < len(verts) else 0]


def support_gap(P: ConvexPolygon, Q: ConvexPolygon) -> tuple[float, float, float]:
    """Exact sup over directions of |h_P - h_Q|.

    Returns ``(value, theta, sign)`` where theta attains the sup and sign is
    the sign of h_P - h_Q there.  The circle is cut at the edge normals of
    both polygons; on each arc the difference is (p - q) . nu(theta) for a fixed
    vertex pair, whose extremum is at an arc end or where nu is parallel to p - q.
    """
    tp, tq = P._support_table, Q._support_table
    cuts = sorted(set(tp[0]) | set(tq[0]))
    best, best_th, best_sign = -1.0, 0.0, 1.0
    m = len(cuts)
    for k in range(m):
        lo = cuts[k - 1] if k else cuts[-1] - TWO_PI
        hi = cuts[k]
        mid = _wrap(0.5 * (lo + hi))
        px, py = _support_vertex(tp, mid)
        qx, qy = _support_vertex(tq, mid)
        dx, dy = px - qx, py - qy
        for th in (lo, hi):
            g = dx * math.cos(th) + dy * math.sin(th)
            if abs(g) > best:
                best, best_th, best_sign = abs(g), th, 1.0 if g >= 0 else -1.0
        norm = math.hypot(dx, dy)
        if norm > best:
            psi = math.atan2(dy, dx)
            for th, sgn in ((psi, 1.0), (psi + math.pi, -1.0)):
                rel = (th - lo) % TWO_PI
                if rel <= hi - lo:
                    best, best_th, best_sign = norm, lo + rel, sgn
                    break
    return best, _wrap(best_th), best_sign


def hausdorff(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    """Hausdorff distance of two convex polygons via their support functions."""
    # fixed argument order makes the result exactly symmetric
    if Q.vertices < P.vertices:
        P, Q = Q, P
    return support_gap(P, Q)[0]
