"""Hausdorff distance to the nearest equal-width equilateral triangle.

For a fixed rotation the best translation solves a convex Chebyshev problem

    min_c  sup_theta | h_K(theta) - h_T(theta) - c . nu(theta) |,

handled here by a Remez-style exchange on three reference directions: each
step levels the error on the reference, finds the exact worst direction, and
swaps it in so that the signed reference directions still surround the origin.
The rotation is then searched on a grid over [0, 2 pi/3) and polished with a
bounded scalar minimizer.
"""

from __future__ import annotations

import math

from scipy.optimize import minimize_scalar

from .geometry import TWO_PI, ConvexPolygon, EquilateralPose, hausdorff, minimal_width, support, support_gap

ROTATION_PERIOD = TWO_PI / 3.0


def _triangle(width: float, rotation: float, cx: float = 0.0, cy: float = 0.0) -> ConvexPolygon:
    return ConvexPolygon(EquilateralPose(width, (cx, cy), rotation).vertices())


def _solve3(rows, rhs):
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    det = a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    if abs(det) < 1e-300:
        return None
    r1, r2, r3 = rhs
    x = (r1 * (b2 * c3 - b3 * c2) - b1 * (r2 * c3 - r3 * c2) + c1 * (r2 * b3 - r3 * b2)) / det
    y = (a1 * (r2 * c3 - r3 * c2) - r1 * (a2 * c3 - a3 * c2) + c1 * (a2 * r3 - a3 * r2)) / det
    z = (a1 * (b2 * r3 - b3 * r2) - b1 * (a2 * r3 - a3 * r2) + r1 * (a2 * b3 - a3 * b2)) / det
    return x, y, z


def _origin_weights(p1, p2, p3):
    c1 = p2[0] * p3[1] - p2[1] * p3[0]
    c2 = p3[0] * p1[1] - p3[1] * p1[0]
    c3 = p1[0] * p2[1] - p1[1] * p2[0]
    tot = c1 + c2 + c3
    if tot == 0.0:
        return None
    return c1 / tot, c2 / tot, c3 / tot


def best_translation(
    K: ConvexPolygon, T: ConvexPolygon, tol: float = 1e-14, max_iter: int = 200
) -> tuple[float, tuple[float, float]]:
    """Smallest d_H(K, T + c) over translations c; returns (distance, c)."""
    tol = tol * K.scale

    def gap(th):
        return support(K, th) - support(T, th)

    ref = [(0.0, 1.0), (TWO_PI / 3, 1.0), (2 * TWO_PI / 3, 1.0)]
    best = (math.inf, (0.0, 0.0))
    for _ in range(max_iter):
        rows, rhs = [], []
        for th, sg in ref:
            rows.append((sg * math.cos(th), sg * math.sin(th), 1.0))
            rhs.append(sg * gap(th))
        sol = _solve3(rows, rhs)
        if sol is None:
            break
        cx, cy, level = sol
        if level < 0.0:
            ref = [(th, -sg) for th, sg in ref]
            level = -level
        val, th_new, sg_new = support_gap(K, T.translated(cx, cy))
        if val < best[0]:
            best = (val, (cx, cy))
        if val - level <= tol:
            break
        if any(abs(th_new - th) < 1e-15 and sg == sg_new for th, sg in ref):
            break
        a_new = (sg_new * math.cos(th_new), sg_new * math.sin(th_new))
        pts = [(sg * math.cos(th), sg * math.sin(th)) for th, sg in ref]
        choice, choice_score = None, -math.inf
        for k in range(3):
            trial = pts[:k] + [a_new] + pts[k + 1 :]
            lam = _origin_weights(*trial)
            if lam is None:
                continue
            score = min(lam)
            if score > choice_score:
                choice, choice_score = k, score
        if choice is None:
            break
        ref[choice] = (th_new, sg_new)
    return best


def rotation_objective(K: ConvexPolygon, width: float, rotation: float) -> tuple[float, tuple[float, float]]:
    return best_translation(K, _triangle(width, rotation))


def asymmetry(K: ConvexPolygon, n_rot: int = 48, n_refine: int = 3) -> tuple[float, EquilateralPose]:
    """Minimum of d_H(K, T)/w(K) over equilateral T with w(T) = w(K), and the minimizing pose."""
    w = minimal_width(K)[0]
    step = ROTATION_PERIOD / n_rot
    grid = [k * step for k in range(n_rot)]
    vals = [rotation_objective(K, w, rho)[0] for rho in grid]

    # cyclic local minima of the grid, best first
    minima = [k for k in range(n_rot) if vals[k] <= vals[k - 1] and vals[k] <= vals[(k + 1) % n_rot]]
    minima.sort(key=lambda k: vals[k])
    candidates = [(vals[k], grid[k]) for k in minima[:n_refine]]

    for k in minima[:n_refine]:
        res = minimize_scalar(
            lambda rho: rotation_objective(K, w, rho)[0],
            bounds=(grid[k] - step, grid[k] + step),
            method="bounded",
            options={"xatol": 1e-13, "maxiter": 500},
        )
        candidates.append((float(res.fun), float(res.x)))

    val, rho = min(candidates)
    val, c = rotation_objective(K, w, rho)
    return val / w, EquilateralPose(w, c, rho)


def pose_distance(K: ConvexPolygon, pose: EquilateralPose) -> float:
    """d_H(K, T(pose)) / w(K) for an explicit pose (any width)."""
    return hausdorff(K, ConvexPolygon(pose.vertices())) / minimal_width(K)[0]
